#include "deformkit/ce.hpp"

#include <algorithm>

namespace dk {

std::vector<std::vector<int>> wedge_basis(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

namespace {

struct WedgeIndex {
  std::vector<std::vector<std::vector<int>>> tuples;
  std::vector<std::map<std::vector<int>, int>> rank;

  WedgeIndex(int n, int max_degree) {
    for (int k = 0; k <= max_degree; ++k) {
      tuples.push_back(wedge_basis(n, k));
      std::map<std::vector<int>, int> r;
      for (std::size_t i = 0; i < tuples.back().size(); ++i) r[tuples.back()[i]] = static_cast<int>(i);
      rank.push_back(std::move(r));
    }
  }
};

int resolve_max_degree(const CeSpec& spec) {
  const int n = static_cast<int>(spec.lie.dim());
  int max_degree = spec.max_degree.value_or(n);
  if (max_degree < 0 || max_degree > n)
    throw Error(ErrorCode::InvalidInput, "max_degree must lie in [0, dim g]");
  if (spec.module.action.size() != spec.lie.dim())
    throw Error(ErrorCode::InvalidInput, "module needs one action matrix per basis element");
  return max_degree;
}

std::string wedge_label(const LieAlgebra& l, const std::vector<int>& tuple) {
  if (tuple.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) s += "^";
    s += l.label(tuple[i]);
  }
  return s;
}

std::string module_label(const LieModule& m, std::size_t i) {
  if (i < m.labels.size()) return m.labels[i];
  return "v" + std::to_string(i);
}

GradedVectorSpace ce_spaces(const CeSpec& spec, const WedgeIndex& w, int max_degree, int sign) {
  GradedVectorSpace spaces;
  for (int k = 0; k <= max_degree; ++k) {
    std::vector<std::string> labels;
    for (const auto& t : w.tuples[static_cast<std::size_t>(k)])
      for (std::size_t m = 0; m < spec.module.dim; ++m)
        labels.push_back(wedge_label(spec.lie, t) + "|" + module_label(spec.module, m));
    spaces.set_component(sign * k, std::move(labels));
  }
  return spaces;
}

// Inserts k into the sorted tuple `rest`; returns the sign of moving x_k from
// the front into position, or 0 when k already occurs.
int insert_sorted(std::vector<int>& rest, int k) {
  auto it = std::lower_bound(rest.begin(), rest.end(), k);
  if (it != rest.end() && *it == k) return 0;
  int before = static_cast<int>(it - rest.begin());
  rest.insert(it, k);
  return before % 2 == 0 ? 1 : -1;
}

std::vector<int> without(const std::vector<int>& t, std::size_t p, std::size_t q = SIZE_MAX) {
  std::vector<int> out;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (i != p && i != q) out.push_back(t[i]);
  return out;
}

}  // namespace

CochainComplex ce_cochain_complex_unchecked(const CeSpec& spec) {
  const int max_degree = resolve_max_degree(spec);
  const int n = static_cast<int>(spec.lie.dim());
  const std::size_t dm = spec.module.dim;
  WedgeIndex w(n, max_degree);
  CochainComplex c(ce_spaces(spec, w, max_degree, 1));
  for (int k = 0; k < max_degree; ++k) {
    const auto& src = w.tuples[static_cast<std::size_t>(k)];
    const auto& dst = w.tuples[static_cast<std::size_t>(k + 1)];
    const auto& src_rank = w.rank[static_cast<std::size_t>(k)];
    Matrix d(dst.size() * dm, src.size() * dm);
    for (std::size_t row_t = 0; row_t < dst.size(); ++row_t) {
      const auto& J = dst[row_t];
      for (std::size_t p = 0; p < J.size(); ++p) {
        const int sign = p % 2 == 0 ? 1 : -1;
        const std::size_t col_t = static_cast<std::size_t>(src_rank.at(without(J, p)));
        const Matrix& rho = spec.module.action[static_cast<std::size_t>(J[p])];
        for (std::size_t mp = 0; mp < dm; ++mp)
          for (std::size_t m = 0; m < dm; ++m)
            d(row_t * dm + mp, col_t * dm + m) += sign * rho(mp, m);
        for (std::size_t q = p + 1; q < J.size(); ++q) {
          const int pq_sign = (p + q) % 2 == 0 ? 1 : -1;
          for (const auto& [k2, coef] : spec.lie.bracket(J[p], J[q])) {
            auto rest = without(J, p, q);
            int s = insert_sorted(rest, k2);
            if (s == 0) continue;
            const std::size_t col = static_cast<std::size_t>(src_rank.at(rest));
            for (std::size_t m = 0; m < dm; ++m) d(row_t * dm + m, col * dm + m) += pq_sign * s * coef;
          }
        }
      }
    }
    c.set_differential(k, std::move(d));
  }
  return c;
}

CochainComplex ce_chain_complex_unchecked(const CeSpec& spec) {
  const int max_degree = resolve_max_degree(spec);
  const int n = static_cast<int>(spec.lie.dim());
  const std::size_t dm = spec.module.dim;
  WedgeIndex w(n, max_degree);
  CochainComplex c(ce_spaces(spec, w, max_degree, -1));
  for (int k = 1; k <= max_degree; ++k) {
    const auto& src = w.tuples[static_cast<std::size_t>(k)];
    const auto& dst = w.tuples[static_cast<std::size_t>(k - 1)];
    const auto& dst_rank = w.rank[static_cast<std::size_t>(k - 1)];
    Matrix d(dst.size() * dm, src.size() * dm);
    for (std::size_t col_t = 0; col_t < src.size(); ++col_t) {
      const auto& J = src[col_t];
      for (std::size_t p = 0; p < J.size(); ++p) {
        // (-1)^{i+1} with 1-based i = p + 1, and u.x = -rho(x) u.
        const int sign = p % 2 == 0 ? -1 : 1;
        const std::size_t row_t = static_cast<std::size_t>(dst_rank.at(without(J, p)));
        const Matrix& rho = spec.module.action[static_cast<std::size_t>(J[p])];
        for (std::size_t mp = 0; mp < dm; ++mp)
          for (std::size_t m = 0; m < dm; ++m)
            d(row_t * dm + mp, col_t * dm + m) += sign * rho(mp, m);
        for (std::size_t q = p + 1; q < J.size(); ++q) {
          const int pq_sign = (p + q) % 2 == 0 ? 1 : -1;
          for (const auto& [k2, coef] : spec.lie.bracket(J[p], J[q])) {
            auto rest = without(J, p, q);
            int s = insert_sorted(rest, k2);
            if (s == 0) continue;
            const std::size_t row = static_cast<std::size_t>(dst_rank.at(rest));
            for (std::size_t m = 0; m < dm; ++m) d(row * dm + m, col_t * dm + m) += pq_sign * s * coef;
          }
        }
      }
    }
    c.set_differential(-k, std::move(d));
  }
  return c;
}

namespace {

void validate_inputs(const CeSpec& spec) {
  auto lie_report = validate_lie(spec.lie);
  if (!lie_report.ok()) throw ValidationFailure("Lie algebra", lie_report);
  auto module_report = validate_module(spec.lie, spec.module);
  if (!module_report.ok()) throw ValidationFailure("Lie module", module_report);
}

}  // namespace

CochainComplex ce_cochain_complex(const CeSpec& spec) {
  validate_inputs(spec);
  auto c = ce_cochain_complex_unchecked(spec);
  verify_closed(c);
  return c;
}

CochainComplex ce_chain_complex(const CeSpec& spec) {
  validate_inputs(spec);
  auto c = ce_chain_complex_unchecked(spec);
  verify_closed(c);
  return c;
}

std::map<int, std::size_t> lie_cohomology(const CeSpec& spec) {
  return cohomology_dims(ce_cochain_complex(spec));
}

std::map<int, std::size_t> lie_homology(const CeSpec& spec) {
  std::map<int, std::size_t> out;
  for (const auto& [deg, dim] : cohomology_dims(ce_chain_complex(spec))) out[-deg] = dim;
  return out;
}

}  // namespace dk
