#include "deformkit/rational.hpp"

#include <algorithm>
#include <cctype>

#include "deformkit/error.hpp"

namespace dk {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ComplexNotClosed: return "COMPLEX_NOT_CLOSED";
    case ErrorCode::InvalidInput: return "INVALID_INPUT";
    case ErrorCode::UnknownBuiltin: return "UNKNOWN_BUILTIN";
    case ErrorCode::TypeMismatch: return "TYPE_MISMATCH";
    case ErrorCode::PreconditionDefectTooLow: return "PRECONDITION_DEFECT_TOO_LOW";
    case ErrorCode::DegreeBoundExceeded: return "DEGREE_BOUND_EXCEEDED";
    case ErrorCode::NoIntegration: return "NO_INTEGRATION";
    case ErrorCode::WrongTopDegree: return "WRONG_TOP_DEGREE";
    case ErrorCode::WrongLieAlgebra: return "WRONG_LIE_ALGEBRA";
    case ErrorCode::IndexOutOfRange: return "INDEX_OUT_OF_RANGE";
    case ErrorCode::ComposeMismatch: return "COMPOSE_MISMATCH";
    case ErrorCode::InvalidDiagram: return "INVALID_DIAGRAM";
    case ErrorCode::MissingPullback: return "MISSING_PULLBACK";
    case ErrorCode::NotDisjointPoset: return "NOT_DISJOINT_POSET";
    case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::ValidationError: return "VALIDATION_ERROR";
  }
  return "UNKNOWN";
}

std::string ValidationReport::summary(std::size_t max_items) const {
  if (violations.empty()) return "valid";
  std::string out = std::to_string(violations.size()) + " violation(s)";
  for (std::size_t i = 0; i < std::min(max_items, violations.size()); ++i) {
    const auto& v = violations[i];
    out += i == 0 ? ": " : "; ";
    out += v.kind + "(";
    for (std::size_t k = 0; k < v.indices.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(v.indices[k]);
    }
    out += ")";
    if (!v.detail.empty()) out += " " + v.detail;
  }
  return out;
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto fail = [&](const char* why) {
    return Error(ErrorCode::ParseError,
                 "malformed rational \"" + std::string(text) + "\": " + why);
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) throw fail("expected p or p/q");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw fail("zero denominator");
  Rational r(n, d);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

}  // namespace dk
