#pragma once

// Moment and cumulant sequences and the classical, free and boolean
// moment-cumulant transforms.
//
// Each transform is available through three routes that must agree exactly:
//   recursive  first-block decomposition of the lattice sum (production)
//   lattice    k_n = m_n - sum over non-maximal lattice members of k_π,
//              evaluated by enumerating Π_n, NC_n or I_n
//   series     generating functions: log of the exponential moment series,
//              solve_free on the ordinary one, 1 - 1/M

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ncpart/incidence.hpp"
#include "ncpart/parallel.hpp"
#include "ncpart/partition.hpp"
#include "ncpart/scalar.hpp"
#include "ncpart/series.hpp"

namespace ncpart {

enum class Flavor { moments, classical, free, boolean };

std::string_view to_string(Flavor flavor);
std::optional<Flavor> parse_flavor(std::string_view name);

/// Lattice whose Möbius inversion links the flavor to moments.
LatticeKind lattice_of(Flavor cumulant_flavor);

enum class Route { recursive, lattice, series };

/// v_1..v_N of one flavor. Moments carry an implicit m_0 = 1.
template <Ring R>
struct Sequence {
  Flavor flavor = Flavor::moments;
  std::vector<R> values;

  std::size_t order() const { return values.size(); }
  /// 1-based access; index 0 of a moment sequence is 1.
  R at(std::size_t k) const {
    if (k == 0) {
      if (flavor == Flavor::moments) return R(1);
      throw std::out_of_range("cumulant sequences start at index 1");
    }
    return values.at(k - 1);
  }

  friend bool operator==(const Sequence&, const Sequence&) = default;
};

/// Product of v_{|B|} over the blocks B of p.
template <Ring R>
R block_product(const std::vector<R>& values, const SetPartition& p) {
  R acc(1);
  for (const auto size : p.block_sizes()) acc = R(acc * values.at(size - 1));
  return acc;
}

Rational factorial(std::size_t n);
Rational binomial(std::size_t n, std::size_t k);

/// Exponential generating function 1 + sum m_n z^n / n!.
template <Ring R>
FormalPowerSeries<R> egf_of(const Sequence<R>& m) {
  if (m.flavor != Flavor::moments) throw std::invalid_argument("egf_of expects moments");
  std::vector<R> c(m.order() + 1, R(0));
  c[0] = R(1);
  for (std::size_t k = 1; k <= m.order(); ++k) c[k] = R(m.at(k) / factorial(k));
  return FormalPowerSeries<R>(std::move(c), m.order());
}

/// Ordinary generating function 1 + sum m_n z^n.
template <Ring R>
FormalPowerSeries<R> ogf_of(const Sequence<R>& m) {
  if (m.flavor != Flavor::moments) throw std::invalid_argument("ogf_of expects moments");
  std::vector<R> c(m.order() + 1, R(0));
  c[0] = R(1);
  for (std::size_t k = 1; k <= m.order(); ++k) c[k] = m.at(k);
  return FormalPowerSeries<R>(std::move(c), m.order());
}

namespace detail {

template <Ring R>
Sequence<R> from_coeffs(const FormalPowerSeries<R>& s, Flavor flavor, bool exponential) {
  Sequence<R> out{flavor, {}};
  for (std::size_t k = 1; k <= s.order(); ++k) out.values.push_back(exponential ? R(s[k] * R(factorial(k))) : s[k]);
  return out;
}

inline void require_flavor(Flavor actual, Flavor expected, const char* what) {
  if (actual != expected) {
    throw std::invalid_argument(std::string(what) + " expects " + std::string(to_string(expected)) + ", got " +
                                std::string(to_string(actual)));
  }
}

inline void require_cumulant(Flavor flavor, const char* what) {
  if (flavor == Flavor::moments) throw std::invalid_argument(std::string(what) + " needs a cumulant flavor");
}

// [z^k] of s^p for p = 0..max_power, as rows powers[p][k].
template <Ring R>
std::vector<FormalPowerSeries<R>> powers_of(const FormalPowerSeries<R>& s, std::size_t max_power) {
  std::vector<FormalPowerSeries<R>> out{FormalPowerSeries<R>::constant(R(1), s.order())};
  for (std::size_t p = 1; p <= max_power; ++p) out.push_back(out.back() * s);
  return out;
}

template <Ring R>
Sequence<R> moments_to_cumulants_recursive(const Sequence<R>& m, Flavor flavor) {
  const std::size_t n = m.order();
  std::vector<R> k(n, R(0));
  if (flavor == Flavor::classical) {
    // m_n = sum_{s=1..n} C(n-1, s-1) k_s m_{n-s}  (s = size of the block of 1)
    for (std::size_t i = 1; i <= n; ++i) {
      R acc = m.at(i);
      for (std::size_t s = 1; s < i; ++s) acc -= R(R(binomial(i - 1, s - 1)) * R(k[s - 1] * m.at(i - s)));
      k[i - 1] = acc;
    }
  } else if (flavor == Flavor::boolean) {
    // m_n = sum_{s=1..n} h_s m_{n-s}  (first block is an interval)
    for (std::size_t i = 1; i <= n; ++i) {
      R acc = m.at(i);
      for (std::size_t s = 1; s < i; ++s) acc -= R(k[s - 1] * m.at(i - s));
      k[i - 1] = acc;
    }
  } else {
    // m_n = sum_{s=1..n} c_s [z^{n-s}] M(z)^s  (s gaps under the block of 1)
    const auto powers = powers_of(ogf_of(m), n);
    for (std::size_t i = 1; i <= n; ++i) {
      R acc = m.at(i);
      for (std::size_t s = 1; s < i; ++s) acc -= R(k[s - 1] * powers[s][i - s]);
      k[i - 1] = acc;
    }
  }
  return {flavor, std::move(k)};
}

template <Ring R>
Sequence<R> cumulants_to_moments_recursive(const Sequence<R>& k) {
  const std::size_t n = k.order();
  Sequence<R> m{Flavor::moments, std::vector<R>(n, R(0))};
  for (std::size_t i = 1; i <= n; ++i) {
    R acc(0);
    if (k.flavor == Flavor::classical) {
      for (std::size_t s = 1; s <= i; ++s) acc += R(R(binomial(i - 1, s - 1)) * R(k.at(s) * m.at(i - s)));
    } else if (k.flavor == Flavor::boolean) {
      for (std::size_t s = 1; s <= i; ++s) acc += R(k.at(s) * m.at(i - s));
    } else {
      // Only m_0..m_{i-1} are known; powers of that truncation suffice.
      Sequence<R> known{Flavor::moments, std::vector<R>(m.values.begin(), m.values.begin() + static_cast<std::ptrdiff_t>(i - 1))};
      const auto powers = powers_of(ogf_of(known), i);
      for (std::size_t s = 1; s <= i; ++s) acc += R(k.at(s) * powers[s][i - s]);
    }
    m.values[i - 1] = acc;
  }
  return m;
}

template <Ring R>
Sequence<R> moments_to_cumulants_lattice(const Sequence<R>& m, Flavor flavor) {
  const std::size_t n = m.order();
  const PartitionKind family = family_of(lattice_of(flavor));
  std::vector<R> k(n, R(0));
  for (std::size_t i = 1; i <= n; ++i) {
    const auto lower = kernels::parallel_sum<R>(i, family, [&](const SetPartition& p) {
      return p.block_count() == 1 ? R(0) : block_product(k, p);
    });
    k[i - 1] = R(m.at(i) - lower);
  }
  return {flavor, std::move(k)};
}

template <Ring R>
Sequence<R> cumulants_to_moments_lattice(const Sequence<R>& k) {
  const PartitionKind family = family_of(lattice_of(k.flavor));
  Sequence<R> m{Flavor::moments, {}};
  for (std::size_t i = 1; i <= k.order(); ++i) {
    m.values.push_back(kernels::parallel_sum<R>(i, family, [&](const SetPartition& p) {
      return block_product(k.values, p);
    }));
  }
  return m;
}

template <Ring R>
Sequence<R> moments_to_cumulants_series(const Sequence<R>& m, Flavor flavor) {
  switch (flavor) {
    case Flavor::classical: return from_coeffs(log(egf_of(m)), flavor, true);
    case Flavor::free: return from_coeffs(solve_free(ogf_of(m)), flavor, false);
    case Flavor::boolean: {
      const auto M = ogf_of(m);
      const auto one = FormalPowerSeries<R>::constant(R(1), M.order());
      return from_coeffs(one - inverse(M), flavor, false);
    }
    case Flavor::moments: break;
  }
  throw std::invalid_argument("not a cumulant flavor");
}

template <Ring R>
Sequence<R> cumulants_to_moments_series(const Sequence<R>& k) {
  const std::size_t n = k.order();
  std::vector<R> c(n + 1, R(0));
  for (std::size_t i = 1; i <= n; ++i) c[i] = k.at(i);
  if (k.flavor == Flavor::classical) {
    for (std::size_t i = 1; i <= n; ++i) c[i] = R(c[i] / factorial(i));
    return from_coeffs(exp(FormalPowerSeries<R>(std::move(c), n)), Flavor::moments, true);
  }
  if (k.flavor == Flavor::boolean) {
    const auto H = FormalPowerSeries<R>(std::move(c), n);
    return from_coeffs(inverse(FormalPowerSeries<R>::constant(R(1), n) - H), Flavor::moments, false);
  }
  c[0] = R(1);
  return from_coeffs(moments_from_free(FormalPowerSeries<R>(std::move(c), n)), Flavor::moments, false);
}

}  // namespace detail

/// Cumulants of the given flavor from moments.
template <Ring R>
Sequence<R> moment_to_cumulant(const Sequence<R>& m, Flavor flavor, Route route = Route::recursive) {
  detail::require_flavor(m.flavor, Flavor::moments, "moment_to_cumulant");
  detail::require_cumulant(flavor, "moment_to_cumulant");
  switch (route) {
    case Route::recursive: return detail::moments_to_cumulants_recursive(m, flavor);
    case Route::lattice: return detail::moments_to_cumulants_lattice(m, flavor);
    case Route::series: return detail::moments_to_cumulants_series(m, flavor);
  }
  throw std::invalid_argument("unknown route");
}

/// Moments from cumulants of any flavor: m_n = sum over the flavor's lattice
/// of [n] of the block products.
template <Ring R>
Sequence<R> cumulant_to_moment(const Sequence<R>& k, Route route = Route::recursive) {
  detail::require_cumulant(k.flavor, "cumulant_to_moment");
  switch (route) {
    case Route::recursive: return detail::cumulants_to_moments_recursive(k);
    case Route::lattice: return detail::cumulants_to_moments_lattice(k);
    case Route::series: return detail::cumulants_to_moments_series(k);
  }
  throw std::invalid_argument("unknown route");
}

/// Re-expresses x in another flavor, passing through moments.
template <Ring R>
Sequence<R> transform(const Sequence<R>& x, Flavor target, Route route = Route::recursive) {
  if (x.flavor == target) return x;
  const Sequence<R> m = x.flavor == Flavor::moments ? x : cumulant_to_moment(x, route);
  return target == Flavor::moments ? m : moment_to_cumulant(m, target, route);
}

/// Classical cumulants of the standard Gaussian: (0, 1, 0, 0, ...).
template <Ring R = Rational>
Sequence<R> gaussian(std::size_t order) {
  Sequence<R> out{Flavor::classical, std::vector<R>(order, R(0))};
  if (order >= 2) out.values[1] = R(1);
  return out;
}

/// Classical cumulants of the Poisson law with the given rate: all equal to it.
template <Ring R>
Sequence<R> poisson(const R& rate, std::size_t order) {
  return {Flavor::classical, std::vector<R>(order, rate)};
}

/// v_n -> t^n v_n: the sequence of the dilated variable t·X.
template <Ring R>
Sequence<R> dilate(const Sequence<R>& x, const R& t) {
  Sequence<R> out{x.flavor, {}};
  R tn(1);
  for (const auto& v : x.values) {
    tn = R(tn * t);
    out.values.push_back(R(tn * v));
  }
  return out;
}

namespace detail {

template <Ring R>
void require_convolvable(const Sequence<R>& a, const Sequence<R>& b) {
  require_flavor(a.flavor, Flavor::moments, "convolution");
  require_flavor(b.flavor, Flavor::moments, "convolution");
  if (a.order() != b.order()) throw std::invalid_argument("convolution of sequences of different orders");
}

template <Ring R>
Sequence<R> add_values(const Sequence<R>& a, const Sequence<R>& b) {
  Sequence<R> out{a.flavor, {}};
  for (std::size_t i = 0; i < a.order(); ++i) out.values.push_back(R(a.values[i] + b.values[i]));
  return out;
}

}  // namespace detail

/// Moments of a sum of classically independent variables: the product of the
/// exponential generating functions (binomial convolution).
template <Ring R>
Sequence<R> convolve_classical(const Sequence<R>& a, const Sequence<R>& b) {
  detail::require_convolvable(a, b);
  return detail::from_coeffs(egf_of(a) * egf_of(b), Flavor::moments, true);
}

/// Boolean convolution: boolean cumulants add, H = H_a + H_b, M = 1/(1 - H).
template <Ring R>
Sequence<R> convolve_boolean(const Sequence<R>& a, const Sequence<R>& b) {
  detail::require_convolvable(a, b);
  const auto one = FormalPowerSeries<R>::constant(R(1), a.order());
  const auto H = (one - inverse(ogf_of(a))) + (one - inverse(ogf_of(b)));
  return detail::from_coeffs(inverse(one - H), Flavor::moments, false);
}

/// Free convolution: free cumulants add.
template <Ring R>
Sequence<R> convolve_free(const Sequence<R>& a, const Sequence<R>& b) {
  detail::require_convolvable(a, b);
  const auto c = detail::add_values(moment_to_cumulant(a, Flavor::free), moment_to_cumulant(b, Flavor::free));
  return cumulant_to_moment(c);
}

}  // namespace ncpart
