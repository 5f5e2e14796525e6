#pragma once

// Exact coefficient rings: GMP rationals and univariate polynomials in a
// formal parameter (written λ) with rational coefficients.

#include <concepts>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ncpart {

using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator. The result is canonical.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, integers without the "/1".
std::string to_string(const Rational& q);

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT
  Polynomial(const Rational& c);                    // NOLINT
  explicit Polynomial(std::vector<Rational> coeffs);

  /// The monomial c·λ^k.
  static Polynomial monomial(std::size_t k, const Rational& c = 1);
  static Polynomial lambda() { return monomial(1); }

  /// Coefficients in ascending powers, no trailing zeros. Empty for 0.
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t k) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  Rational evaluate(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator/=(const Rational& rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator/(Polynomial a, const Rational& b) { return a /= b; }
  friend Polynomial operator-(Polynomial a);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Ascending powers, e.g. "λ + λ^2", "1/2 - 3λ^2", "(2/3)λ". Zero prints "0".
std::string to_string(const Polynomial& p);

inline bool is_unit(const Rational& q) { return sgn(q) != 0; }
inline Rational unit_inverse(const Rational& q) { return Rational(1) / q; }

/// Units of Q[λ] are the nonzero constants.
bool is_unit(const Polynomial& p);
Polynomial unit_inverse(const Polynomial& p);

/// Requirements shared by every coefficient ring used in the generic
/// series/cumulant code. Division is only by nonzero rationals.
template <class R>
concept Ring = std::regular<R> && requires(R a, const R& b, long k, const Rational& q) {
  R(k);
  R(q);
  { R(a + b) };
  { R(a - b) };
  { R(a * b) };
  { R(a / q) };
  { is_unit(b) } -> std::convertible_to<bool>;
  { unit_inverse(b) } -> std::convertible_to<R>;
};

template <Ring R>
R power(const R& base, std::size_t exponent) {
  R result(1);
  R b = base;
  while (exponent != 0) {
    if ((exponent & 1U) != 0) result = R(result * b);
    exponent >>= 1U;
    if (exponent != 0) b = R(b * b);
  }
  return result;
}

}  // namespace ncpart
