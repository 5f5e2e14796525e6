#pragma once

// Data-parallel reductions over partition families. Each OpenMP kernel has a
// serial counterpart with the same contract; the serial versions are the
// reference the tests compare against.
//
// Work is split by restricted-growth prefixes: every feasible prefix of a
// fixed length owns the disjoint set of family members extending it, and the
// per-prefix partial results are merged in prefix order so the result does
// not depend on the thread count.

#include <cstddef>
#include <cstdint>
#include <exception>
#include <vector>

#include "ncpart/partition.hpp"
#include "ncpart/scalar.hpp"

namespace ncpart::kernels {

/// Prefix length used to split an enumeration of [n]; 0 means "do not split".
inline std::size_t split_depth(std::size_t n) {
  if (n <= 7) return 0;
  return n - 5 < 9 ? n - 5 : 9;
}

template <Ring R, class Weight>
R serial_sum(std::size_t n, PartitionKind kind, Weight&& weight) {
  R acc(0);
  PartitionStream stream(n, kind);
  while (auto p = stream.next()) acc += R(weight(*p));
  return acc;
}

/// Sum of weight(p) over the family. `weight` must be safe to call
/// concurrently.
template <Ring R, class Weight>
R parallel_sum(std::size_t n, PartitionKind kind, Weight&& weight) {
  const std::size_t depth = split_depth(n);
  if (depth == 0) return serial_sum<R>(n, kind, weight);
  const auto prefixes = feasible_prefixes(n, kind, depth);
  const auto count = static_cast<std::ptrdiff_t>(prefixes.size());
  std::vector<R> partial(prefixes.size(), R(0));
  std::vector<std::exception_ptr> errors(prefixes.size());

#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      R acc(0);
      PartitionStream stream(n, kind, prefixes[static_cast<std::size_t>(i)]);
      while (auto p = stream.next()) acc += R(weight(*p));
      partial[static_cast<std::size_t>(i)] = std::move(acc);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }

  R total(0);
  for (std::size_t i = 0; i < partial.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    total += partial[i];
  }
  return total;
}

std::uint64_t serial_count(std::size_t n, PartitionKind kind);
std::uint64_t parallel_count(std::size_t n, PartitionKind kind);

/// Entry b is the number of family members with exactly b blocks.
std::vector<std::uint64_t> serial_count_by_blocks(std::size_t n, PartitionKind kind);
std::vector<std::uint64_t> parallel_count_by_blocks(std::size_t n, PartitionKind kind);

/// Values h(y) = -sum over y < z <= top of h(z), h(top) = 1, for the given
/// members (all below `top`, any order). With `members` the lower segment of
/// `top` in a lattice, h(y) is the Möbius value mu(y, top). Results are
/// returned aligned with `members`.
std::vector<std::int64_t> serial_moebius_to_top(const std::vector<SetPartition>& members, const SetPartition& top);
std::vector<std::int64_t> parallel_moebius_to_top(const std::vector<SetPartition>& members, const SetPartition& top);

}  // namespace ncpart::kernels
