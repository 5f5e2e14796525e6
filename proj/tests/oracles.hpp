#pragma once

// Brute-force reference computations for the test suites. Nothing here goes
// through the restricted-growth stream or the library's predicates.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "ncpart/incidence.hpp"
#include "ncpart/partition.hpp"
#include "ncpart/scalar.hpp"

namespace oracle {

using Blocks = std::vector<std::vector<std::size_t>>;

/// All partitions of [n], built by inserting n into each block of every
/// partition of [n-1] or opening a new block.
inline std::vector<Blocks> all_partitions(std::size_t n) {
  std::vector<Blocks> layer{Blocks{}};
  for (std::size_t e = 1; e <= n; ++e) {
    std::vector<Blocks> next;
    for (const auto& p : layer) {
      for (std::size_t b = 0; b < p.size(); ++b) {
        auto q = p;
        q[b].push_back(e);
        next.push_back(std::move(q));
      }
      auto q = p;
      q.push_back({e});
      next.push_back(std::move(q));
    }
    layer = std::move(next);
  }
  return layer;
}

inline bool crossing_pair(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  for (auto x : a)
    for (auto z : a)
      for (auto y : b)
        for (auto w : b)
          if ((x < y && y < z && z < w) || (y < x && x < w && w < z)) return true;
  return false;
}

inline bool noncrossing(const Blocks& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (crossing_pair(p[i], p[j])) return false;
  return true;
}

inline bool interval(const Blocks& p) {
  for (const auto& b : p) {
    const auto [lo, hi] = std::minmax_element(b.begin(), b.end());
    if (*hi - *lo + 1 != b.size()) return false;
  }
  return true;
}

/// Checks every proper subinterval [i, j] of [n] against every block.
inline bool connected(const Blocks& p, std::size_t n) {
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      if (i == 1 && j == n) continue;
      bool union_of_blocks = true;
      for (const auto& b : p) {
        std::size_t inside = 0;
        for (auto e : b) inside += (e >= i && e <= j) ? 1 : 0;
        if (inside != 0 && inside != b.size()) union_of_blocks = false;
      }
      if (union_of_blocks) return false;
    }
  }
  return true;
}

/// Connected components of the crossing graph on the blocks, as a partition.
inline ncpart::SetPartition crossing_components(const ncpart::SetPartition& p) {
  const auto blocks = p.blocks();
  std::vector<std::size_t> comp(blocks.size());
  for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = i;
  const std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return comp[x] == x ? x : comp[x] = find(comp[x]);
  };
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      if (crossing_pair(blocks[i], blocks[j])) comp[find(i)] = find(j);
  std::vector<std::size_t> labels(p.size());
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (auto e : blocks[b]) labels[e - 1] = find(b);
  return ncpart::SetPartition::from_labels(labels);
}

/// Least noncrossing coarsening by exhaustive search over NC_n.
inline ncpart::SetPartition minimal_noncrossing_above(const ncpart::SetPartition& p) {
  std::vector<ncpart::SetPartition> above;
  for (const auto& q : all_partitions(p.size())) {
    auto sq = ncpart::SetPartition::from_blocks(p.size(), q);
    if (noncrossing(q) && ncpart::leq(p, sq)) above.push_back(sq);
  }
  for (const auto& c : above) {
    bool least = true;
    for (const auto& d : above) least = least && ncpart::leq(c, d);
    if (least) return c;
  }
  throw std::logic_error("no least noncrossing coarsening");
}

inline std::uint64_t bell(std::size_t n) {
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.back();
}

inline std::uint64_t catalan(std::size_t n) {
  std::vector<std::uint64_t> c(n + 1, 0);
  c[0] = 1;
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
  return c[n];
}

inline std::uint64_t double_factorial_odd(std::size_t k) {  // (2k-1)!!
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r *= 2 * i - 1;
  return r;
}

inline ncpart::Rational random_rational(std::mt19937_64& rng, long bound = 100) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  ncpart::Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline std::vector<ncpart::Rational> random_values(std::mt19937_64& rng, std::size_t count, long bound = 100) {
  std::vector<ncpart::Rational> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_rational(rng, bound));
  return out;
}

/// Explicit Möbius inversion at the top: k_n = sum_{σ in L_n} m_σ mu_L(σ, 1̂).
template <class R>
R invert_at_top(const std::vector<R>& moments, std::size_t n, ncpart::LatticeKind kind) {
  R acc(0);
  for (const auto& [sigma, mu] : ncpart::moebius_column(kind, ncpart::SetPartition::coarsest(n))) {
    R prod(1);
    for (auto s : sigma.block_sizes()) prod = R(prod * moments.at(s - 1));
    acc += R(prod * R(mu));
  }
  return acc;
}

}  // namespace oracle
