#pragma once

// Truncated formal power series a_0 + a_1 z + ... + a_N z^N over an exact
// ring. Every operation keeps the truncation order explicit: the result of a
// binary operation has the smaller of the two orders and nothing beyond the
// order is ever computed or reported.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncpart/scalar.hpp"

namespace ncpart {

inline constexpr std::size_t kDefaultOrder = 12;

template <Ring R>
class FormalPowerSeries {
 public:
  /// The zero series of the given order.
  explicit FormalPowerSeries(std::size_t order = kDefaultOrder) : coeffs_(order + 1, R(0)) {}

  /// Coefficients a_0..a_k; missing ones up to `order` are zero, extra ones
  /// are dropped.
  FormalPowerSeries(std::vector<R> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1, R(0));
  }

  static FormalPowerSeries constant(const R& c, std::size_t order) {
    FormalPowerSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  /// The series z (zero at order 0).
  static FormalPowerSeries variable(std::size_t order) {
    FormalPowerSeries s(order);
    if (order >= 1) s.coeffs_[1] = R(1);
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const R& operator[](std::size_t k) const { return coeffs_.at(k); }
  const std::vector<R>& coeffs() const { return coeffs_; }

  /// Same series read to a lower order.
  FormalPowerSeries truncate(std::size_t order) const {
    if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
    return FormalPowerSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1),
                             order);
  }

  friend FormalPowerSeries operator+(const FormalPowerSeries& a, const FormalPowerSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    FormalPowerSeries out(n);
    for (std::size_t k = 0; k <= n; ++k) out.coeffs_[k] = R(a.coeffs_[k] + b.coeffs_[k]);
    return out;
  }

  friend FormalPowerSeries operator-(const FormalPowerSeries& a, const FormalPowerSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    FormalPowerSeries out(n);
    for (std::size_t k = 0; k <= n; ++k) out.coeffs_[k] = R(a.coeffs_[k] - b.coeffs_[k]);
    return out;
  }

  friend FormalPowerSeries operator-(const FormalPowerSeries& a) { return FormalPowerSeries(a.order()) - a; }

  /// Cauchy product.
  friend FormalPowerSeries operator*(const FormalPowerSeries& a, const FormalPowerSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    FormalPowerSeries out(n);
    for (std::size_t i = 0; i <= n; ++i) {
      if (a.coeffs_[i] == R(0)) continue;
      for (std::size_t j = 0; i + j <= n; ++j) out.coeffs_[i + j] += R(a.coeffs_[i] * b.coeffs_[j]);
    }
    return out;
  }

  friend FormalPowerSeries scale(const FormalPowerSeries& a, const R& c) {
    FormalPowerSeries out(a.order());
    for (std::size_t k = 0; k <= a.order(); ++k) out.coeffs_[k] = R(a.coeffs_[k] * c);
    return out;
  }

  friend bool operator==(const FormalPowerSeries&, const FormalPowerSeries&) = default;

 private:
  std::vector<R> coeffs_;
};

template <Ring R>
FormalPowerSeries<R> add(const FormalPowerSeries<R>& a, const FormalPowerSeries<R>& b) {
  return a + b;
}

template <Ring R>
FormalPowerSeries<R> mul(const FormalPowerSeries<R>& a, const FormalPowerSeries<R>& b) {
  return a * b;
}

/// Multiplicative inverse; the constant term must be a unit of the ring.
template <Ring R>
FormalPowerSeries<R> inverse(const FormalPowerSeries<R>& a) {
  if (!is_unit(a[0])) throw std::invalid_argument("series inverse needs a unit constant term");
  const std::size_t n = a.order();
  const R inv0 = unit_inverse(a[0]);
  std::vector<R> b(n + 1, R(0));
  b[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    R acc(0);
    for (std::size_t i = 1; i <= k; ++i) acc += R(a[i] * b[k - i]);
    b[k] = R(R(-acc) * inv0);
  }
  return FormalPowerSeries<R>(std::move(b), n);
}

/// f(g(z)); g must have zero constant term. Horner evaluation in the series
/// ring.
template <Ring R>
FormalPowerSeries<R> compose(const FormalPowerSeries<R>& f, const FormalPowerSeries<R>& g) {
  if (!(g[0] == R(0))) throw std::invalid_argument("compose needs an inner series without constant term");
  const std::size_t n = std::min(f.order(), g.order());
  const auto inner = g.truncate(n);
  auto acc = FormalPowerSeries<R>::constant(f[n], n);
  for (std::size_t k = n; k-- > 0;) acc = acc * inner + FormalPowerSeries<R>::constant(f[k], n);
  return acc;
}

/// exp(a) for a_0 = 0, from E' = a' E: e_k = (1/k) sum_{i=1..k} i a_i e_{k-i}.
template <Ring R>
FormalPowerSeries<R> exp(const FormalPowerSeries<R>& a) {
  if (!(a[0] == R(0))) throw std::invalid_argument("exp needs a series without constant term");
  const std::size_t n = a.order();
  std::vector<R> e(n + 1, R(0));
  e[0] = R(1);
  for (std::size_t k = 1; k <= n; ++k) {
    R acc(0);
    for (std::size_t i = 1; i <= k; ++i) acc += R(R(static_cast<long>(i)) * R(a[i] * e[k - i]));
    e[k] = R(acc / Rational(static_cast<long>(k)));
  }
  return FormalPowerSeries<R>(std::move(e), n);
}

/// log(a) for a_0 = 1, from a L' = a': l_k = a_k - (1/k) sum_{i=1..k-1} i l_i a_{k-i}.
template <Ring R>
FormalPowerSeries<R> log(const FormalPowerSeries<R>& a) {
  if (!(a[0] == R(1))) throw std::invalid_argument("log needs a series with constant term 1");
  const std::size_t n = a.order();
  std::vector<R> l(n + 1, R(0));
  for (std::size_t k = 1; k <= n; ++k) {
    R acc(0);
    for (std::size_t i = 1; i < k; ++i) acc += R(R(static_cast<long>(i)) * R(l[i] * a[k - i]));
    l[k] = R(a[k] - R(acc / Rational(static_cast<long>(k))));
  }
  return FormalPowerSeries<R>(std::move(l), n);
}

/// z * a(z), read at the order of a.
template <Ring R>
FormalPowerSeries<R> shift_up(const FormalPowerSeries<R>& a) {
  std::vector<R> c(a.order() + 1, R(0));
  for (std::size_t k = 1; k <= a.order(); ++k) c[k] = a[k - 1];
  return FormalPowerSeries<R>(std::move(c), a.order());
}

/// The series C with M(z) = C(z M(z)), M_0 = 1. Writing w = z M(z), the
/// coefficient of z^n in C(w) is c_n plus terms in c_1..c_{n-1}, so C is
/// solved for one coefficient at a time.
template <Ring R>
FormalPowerSeries<R> solve_free(const FormalPowerSeries<R>& moments) {
  if (!(moments[0] == R(1))) throw std::invalid_argument("solve_free needs M(0) = 1");
  const std::size_t n = moments.order();
  const auto w = shift_up(moments);
  // powers[k] = w^k, filled as needed.
  std::vector<FormalPowerSeries<R>> powers{FormalPowerSeries<R>::constant(R(1), n)};
  std::vector<R> c(n + 1, R(0));
  c[0] = R(1);
  for (std::size_t k = 1; k <= n; ++k) {
    powers.push_back(powers.back() * w);
    R acc = moments[k];
    for (std::size_t j = 1; j < k; ++j) acc -= R(c[j] * powers[j][k]);
    c[k] = acc;  // w^k starts at z^k with coefficient 1
  }
  return FormalPowerSeries<R>(std::move(c), n);
}

/// The series M with M(z) = C(z M(z)) for a given C with C_0 = 1. Each pass
/// of M <- C(z M) fixes one more coefficient.
template <Ring R>
FormalPowerSeries<R> moments_from_free(const FormalPowerSeries<R>& free_series) {
  if (!(free_series[0] == R(1))) throw std::invalid_argument("moments_from_free needs C(0) = 1");
  const std::size_t n = free_series.order();
  auto m = FormalPowerSeries<R>::constant(R(1), n);
  for (std::size_t pass = 0; pass < n; ++pass) m = compose(free_series, shift_up(m));
  return m;
}

}  // namespace ncpart
