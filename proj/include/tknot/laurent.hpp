#pragma once

#include <cstdint>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "tknot/error.hpp"

namespace tknot {

inline constexpr std::string_view kLaurentModule = "presentations";

/// Integer Laurent polynomial in t. Zero coefficients are never stored.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;

  static LaurentPolynomial monomial(std::int64_t coeff, std::int64_t exp) {
    LaurentPolynomial p;
    p.add_term(exp, coeff);
    return p;
  }

  static LaurentPolynomial constant(std::int64_t c) { return monomial(c, 0); }

  /// From coefficients of t^0, t^1, ...
  static LaurentPolynomial from_coefficients(const std::vector<std::int64_t>& c, std::int64_t shift = 0) {
    LaurentPolynomial p;
    for (std::size_t i = 0; i < c.size(); ++i)
      p.add_term(checked::add(static_cast<std::int64_t>(i), shift, kLaurentModule), c[i]);
    return p;
  }

  const std::map<std::int64_t, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::int64_t min_exponent() const { return terms_.begin()->first; }
  std::int64_t max_exponent() const { return terms_.rbegin()->first; }
  std::int64_t leading_coefficient() const { return terms_.rbegin()->second; }

  std::int64_t coefficient(std::int64_t exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(std::int64_t exp, std::int64_t coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exp, coeff);
    if (!inserted) {
      it->second = checked::add(it->second, coeff, kLaurentModule);
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
  }

  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, checked::neg(c, kLaurentModule));
    return a;
  }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term(checked::add(ea, eb, kLaurentModule), checked::mul(ca, cb, kLaurentModule));
    return r;
  }

  LaurentPolynomial operator-() const { return LaurentPolynomial{} - *this; }

  /// Multiply by t^k.
  LaurentPolynomial shifted(std::int64_t k) const {
    LaurentPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(checked::add(e, k, kLaurentModule), c);
    return r;
  }

  /// Exact quotient a / b; throws when b does not divide a in Z[t, t^-1].
  friend LaurentPolynomial exact_divide(LaurentPolynomial a, const LaurentPolynomial& b) {
    if (b.is_zero()) throw Error(kLaurentModule, "division by the zero polynomial");
    LaurentPolynomial q;
    const std::int64_t bl = b.max_exponent();
    const std::int64_t bc = b.leading_coefficient();
    const std::int64_t bspan = b.max_exponent() - b.min_exponent();
    while (!a.is_zero()) {
      if (a.max_exponent() - a.min_exponent() < bspan || a.leading_coefficient() % bc != 0)
        throw Error(kLaurentModule, "polynomial division is not exact");
      const std::int64_t qe = checked::sub(a.max_exponent(), bl, kLaurentModule);
      const std::int64_t qc = a.leading_coefficient() / bc;
      q.add_term(qe, qc);
      a = a - monomial(qc, qe) * b;
    }
    return q;
  }

  /// Representative up to units +-t^k: lowest exponent 0, positive leading coefficient.
  LaurentPolynomial normalized() const {
    if (is_zero()) return {};
    LaurentPolynomial r = shifted(checked::neg(min_exponent(), kLaurentModule));
    if (r.leading_coefficient() < 0) r = -r;
    return r;
  }

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// e.g. "t^2 - t + 1", highest degree first.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      auto [e, c] = *it;
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      const std::int64_t mag = c < 0 ? -c : c;
      if (mag != 1 || e == 0) os << mag;
      if (e != 0) {
        os << 't';
        if (e != 1) os << '^' << e;
      }
      first = false;
    }
    return os.str();
  }

 private:
  std::map<std::int64_t, std::int64_t> terms_;
};

}  // namespace tknot
