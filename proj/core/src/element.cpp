#include "deformkit/element.hpp"

namespace dk {

void add_term(Element& acc, TermKey key, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = acc.try_emplace(key, 0);
  it->second += c;
  if (sgn(it->second) == 0) acc.erase(it);
}

void add_scaled(Element& acc, const Element& v, const Rational& s) {
  if (sgn(s) == 0) return;
  for (const auto& [k, c] : v) add_term(acc, k, c * s);
}

Element scaled(Element v, const Rational& s) {
  if (sgn(s) == 0) return {};
  for (auto& [k, c] : v) c *= s;
  return v;
}

Element difference(const Element& a, const Element& b) {
  Element out = a;
  add_scaled(out, b, -1);
  return out;
}

std::string TensorContext::label(TermKey k) const {
  if (a_->is_scalar()) return g_->label(k.first);
  return a_->name(k.second) + "*" + g_->label(k.first);
}

void TensorContext::require_degree(const Element& x, int degree, const std::string& what) const {
  for (const auto& [k, c] : x) {
    if (k.first < 0 || k.first >= static_cast<int>(g_->dim()) || k.second < 0 ||
        k.second >= static_cast<int>(a_->dim()))
      throw Error(ErrorCode::TypeMismatch, what + ": term index out of range");
    if (this->degree(k) != degree)
      throw Error(ErrorCode::TypeMismatch, what + ": term " + label(k) + " has total degree " +
                                               std::to_string(this->degree(k)) + ", expected " +
                                               std::to_string(degree));
  }
}

Element TensorContext::bracket(const Element& x, const Element& y) const {
  Element out;
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) {
      const auto& coef = a_->ideal().product(kx.second, ky.second);
      if (coef.empty()) continue;
      const auto br = g_->bracket(kx.first, ky.first);
      if (br.empty()) continue;
      Rational s = cx * cy;
      if ((a_->degree(kx.second) * g_->degree(ky.first)) % 2 != 0) s = -s;
      for (const auto& [gi, gv] : br)
        for (const auto& [ai, av] : coef) add_term(out, {gi, ai}, s * gv * av);
    }
  return out;
}

Element TensorContext::differential(const Element& x) const {
  Element out;
  for (const auto& [k, c] : x) {
    for (const auto& [gi, gv] : g_->differential(k.first)) add_term(out, {gi, k.second}, c * gv);
    if (a_->ideal().has_differential()) {
      Rational s = (g_->degree(k.first) % 2 == 0) ? c : Rational(-c);
      for (const auto& [ai, av] : a_->ideal().differential(k.second))
        add_term(out, {k.first, ai}, s * av);
    }
  }
  return out;
}

bool TensorContext::in_power(const Element& x, int k) const {
  for (const auto& [key, c] : x)
    if (power(key) < k) return false;
  return true;
}

Element TensorContext::power_part(const Element& x, int k) const {
  Element out;
  for (const auto& [key, c] : x)
    if (power(key) == k) out.emplace(key, c);
  return out;
}

std::vector<TermKey> TensorContext::basis(int degree, int power) const {
  std::vector<TermKey> out;
  for (int g = 0; g < static_cast<int>(g_->dim()); ++g)
    for (int a = 0; a < static_cast<int>(a_->dim()); ++a)
      if (a_->power(a) == power && this->degree({g, a}) == degree) out.push_back({g, a});
  return out;
}

Element TensorContext::from_dgla(const SparseVector& v) const {
  if (!a_->is_scalar())
    throw Error(ErrorCode::TypeMismatch, "scalar coefficients required");
  Element out;
  for (const auto& [i, c] : v) add_term(out, {i, 0}, c);
  return out;
}

SparseVector TensorContext::to_dgla(const Element& x) const {
  if (!a_->is_scalar())
    throw Error(ErrorCode::TypeMismatch, "scalar coefficients required");
  SparseVector out;
  for (const auto& [k, c] : x) dk::add_term(out, k.first, c);
  return out;
}

}  // namespace dk
