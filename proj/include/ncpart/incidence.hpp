#pragma once

// Incidence algebras of the partition lattice Π_n and its sublattices NC_n
// (noncrossing) and I_n (interval): convolution, zeta, delta, the Möbius
// function, segment types and multiplicative functions.

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncpart/partition.hpp"
#include "ncpart/scalar.hpp"

namespace ncpart {

enum class LatticeKind { full, noncrossing, interval };

std::string_view to_string(LatticeKind kind);
PartitionKind family_of(LatticeKind kind);
bool in_lattice(LatticeKind kind, const SetPartition& p);

/// Members z of the lattice with lower <= z <= upper, in lexicographic order.
/// Throws std::invalid_argument if the endpoints are not comparable members.
std::vector<SetPartition> segment(LatticeKind kind, const SetPartition& lower, const SetPartition& upper);

/// Sequence (k_1, k_2, ...) of a segment [σ, π] of Π_n: k_j counts the blocks
/// of π that are unions of exactly j blocks of σ. Stored without trailing
/// zeros.
struct SegmentType {
  std::vector<std::size_t> exponents;  // exponents[j - 1] = k_j

  std::size_t k(std::size_t j) const { return j >= 1 && j <= exponents.size() ? exponents[j - 1] : 0; }
  /// Number of blocks of the lower end, sum of j * k_j.
  std::size_t lower_rank() const;
  friend auto operator<=>(const SegmentType&, const SegmentType&) = default;
};

std::string to_string(const SegmentType& t);

SegmentType segment_type(const SetPartition& lower, const SetPartition& upper);

/// Möbius function of the lattice. On the full lattice values are memoized by
/// segment type, on NC_n and I_n by the pair of codes; both caches are shared
/// and safe for concurrent use.
Rational moebius(LatticeKind kind, const SetPartition& lower, const SetPartition& upper);

/// The defining recursion mu(x, y) = -sum_{x <= z < y} mu(x, z) evaluated
/// directly over the segment, with no caching.
Rational moebius_unmemoized(LatticeKind kind, const SetPartition& lower, const SetPartition& upper);

/// mu(y, top) for every lattice member y <= top, keyed by y. Cached per top.
const std::map<SetPartition, Rational>& moebius_column(LatticeKind kind, const SetPartition& top);

/// An element of the incidence algebra: a rule evaluated on comparable pairs
/// of one lattice.
template <Ring R>
class IntervalFunction {
 public:
  using Rule = std::function<R(const SetPartition&, const SetPartition&)>;

  IntervalFunction(LatticeKind lattice, Rule rule) : lattice_(lattice), rule_(std::move(rule)) {}

  LatticeKind lattice() const { return lattice_; }

  R operator()(const SetPartition& lower, const SetPartition& upper) const {
    check_pair(lower, upper);
    return rule_(lower, upper);
  }

 private:
  void check_pair(const SetPartition& lower, const SetPartition& upper) const {
    if (!in_lattice(lattice_, lower) || !in_lattice(lattice_, upper)) {
      throw std::invalid_argument("pair outside the " + std::string(to_string(lattice_)) + " lattice");
    }
    if (!leq(lower, upper)) {
      throw std::invalid_argument("incomparable pair " + to_string(lower) + ", " + to_string(upper));
    }
  }

  LatticeKind lattice_;
  Rule rule_;
};

template <Ring R>
IntervalFunction<R> delta(LatticeKind lattice) {
  return {lattice, [](const SetPartition& a, const SetPartition& b) { return a == b ? R(1) : R(0); }};
}

template <Ring R>
IntervalFunction<R> zeta(LatticeKind lattice) {
  return {lattice, [](const SetPartition&, const SetPartition&) { return R(1); }};
}

template <Ring R>
IntervalFunction<R> moebius_function(LatticeKind lattice) {
  return {lattice, [lattice](const SetPartition& a, const SetPartition& b) { return R(moebius(lattice, a, b)); }};
}

/// (f * g)(lower, upper) = sum over lower <= z <= upper of f(lower, z) g(z, upper).
template <Ring R>
R convolve(const IntervalFunction<R>& f, const IntervalFunction<R>& g, const SetPartition& lower,
           const SetPartition& upper) {
  if (f.lattice() != g.lattice()) throw std::invalid_argument("convolution across different lattices");
  R acc(0);
  for (const auto& z : segment(f.lattice(), lower, upper)) acc += R(f(lower, z) * g(z, upper));
  return acc;
}

/// Multiplicative function on the full lattice given by f_1, f_2, ...
/// (values[j - 1] = f_j).
template <Ring R>
struct MultiplicativeFunction {
  std::vector<R> values;
};

/// Product of f_j^{k_j} over the segment type; on (0̂, π) this is the product
/// of f_{|B|} over the blocks B of π.
template <Ring R>
R eval_multiplicative(const MultiplicativeFunction<R>& f, const SetPartition& lower, const SetPartition& upper) {
  const auto type = segment_type(lower, upper);
  R acc(1);
  for (std::size_t j = 1; j <= type.exponents.size(); ++j) {
    const std::size_t k = type.k(j);
    if (k == 0) continue;
    if (j > f.values.size()) {
      throw std::invalid_argument("multiplicative function has no value f_" + std::to_string(j));
    }
    acc = R(acc * power(f.values[j - 1], k));
  }
  return acc;
}

template <Ring R>
using PartitionMap = std::map<SetPartition, R>;

enum class Direction {
  down,  // sums over y <= x
  up,    // sums over y >= x
};

namespace detail {

/// Checks that `values` covers exactly the lattice of some Π_n and returns n.
std::size_t lattice_domain(LatticeKind kind, const std::vector<SetPartition>& keys);

template <Ring R>
std::vector<SetPartition> keys_of(const PartitionMap<R>& values) {
  std::vector<SetPartition> keys;
  keys.reserve(values.size());
  for (const auto& [p, v] : values) keys.push_back(p);
  return keys;
}

}  // namespace detail

/// F(x) = sum_{y <= x} f(y) (down) or sum_{y >= x} f(y) (up).
template <Ring R>
PartitionMap<R> zeta_sum(const PartitionMap<R>& values, Direction direction, LatticeKind kind) {
  const auto keys = detail::keys_of(values);
  detail::lattice_domain(kind, keys);
  PartitionMap<R> out;
  for (const auto& x : keys) {
    R acc(0);
    for (const auto& [y, fy] : values) {
      if (direction == Direction::down ? leq(y, x) : leq(x, y)) acc += fy;
    }
    out.emplace(x, std::move(acc));
  }
  return out;
}

/// Möbius inversion: g(x) = sum_{y <= x} f(y) mu(y, x) (down) or
/// g(x) = sum_{y >= x} mu(x, y) f(y) (up). Inverts zeta_sum in the same
/// direction.
template <Ring R>
PartitionMap<R> moebius_invert(const PartitionMap<R>& values, Direction direction, LatticeKind kind) {
  const auto keys = detail::keys_of(values);
  detail::lattice_domain(kind, keys);
  PartitionMap<R> out;
  for (const auto& x : keys) {
    R acc(0);
    if (direction == Direction::down) {
      for (const auto& [y, mu] : moebius_column(kind, x)) acc += R(values.at(y) * R(mu));
    } else {
      for (const auto& [y, fy] : values) {
        if (leq(x, y)) acc += R(R(moebius(kind, x, y)) * fy);
      }
    }
    out.emplace(x, std::move(acc));
  }
  return out;
}

/// The down-inversion evaluated at a single point x.
template <Ring R, class Values>
R moebius_invert_at(Values&& value_of, const SetPartition& x, LatticeKind kind) {
  R acc(0);
  for (const auto& [y, mu] : moebius_column(kind, x)) acc += R(R(value_of(y)) * R(mu));
  return acc;
}

}  // namespace ncpart
