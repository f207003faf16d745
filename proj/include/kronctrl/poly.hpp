#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <utility>
#include <vector>

#include "kronctrl/rational.hpp"

namespace kronctrl {

/// Univariate polynomial over the rationals, coefficients lowest degree
/// first. Trailing zero coefficients are always stripped, so the zero
/// polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coefficients);
  Poly(std::initializer_list<Rational> coefficients) : Poly(std::vector<Rational>(coefficients)) {}

  /// (s - root)
  static Poly linear(const Rational& root) { return Poly({-root, Rational(1)}); }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  Rational operator()(const Rational& x) const;

  Poly derivative() const;
  Poly monic() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(const Rational& scale, const Poly& p);

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Quotient and remainder; throws std::domain_error when dividing by zero.
std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);

/// Monic gcd (zero only when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

struct RationalRoot {
  Rational value;
  std::size_t multiplicity = 0;

  friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

struct RationalRoots {
  std::vector<RationalRoot> roots;  ///< ascending by value
  bool fully_factored = false;      ///< multiplicities sum to the degree
};

/// All rational roots of a nonzero polynomial with exact multiplicities.
/// Throws std::invalid_argument for the zero polynomial.
RationalRoots rational_roots(const Poly& p);

}  // namespace kronctrl
