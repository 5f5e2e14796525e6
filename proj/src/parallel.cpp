#include "ncpart/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ncpart::kernels {

std::uint64_t serial_count(std::size_t n, PartitionKind kind) {
  std::uint64_t count = 0;
  PartitionStream stream(n, kind);
  while (stream.next()) ++count;
  return count;
}

std::uint64_t parallel_count(std::size_t n, PartitionKind kind) {
  const std::size_t depth = split_depth(n);
  if (depth == 0) return serial_count(n, kind);
  const auto prefixes = feasible_prefixes(n, kind, depth);
  const auto count = static_cast<std::ptrdiff_t>(prefixes.size());
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    PartitionStream stream(n, kind, prefixes[static_cast<std::size_t>(i)]);
    while (stream.next()) ++total;
  }
  return total;
}

std::vector<std::uint64_t> serial_count_by_blocks(std::size_t n, PartitionKind kind) {
  std::vector<std::uint64_t> out(n + 1, 0);
  PartitionStream stream(n, kind);
  while (auto p = stream.next()) ++out[p->block_count()];
  return out;
}

std::vector<std::uint64_t> parallel_count_by_blocks(std::size_t n, PartitionKind kind) {
  const std::size_t depth = split_depth(n);
  if (depth == 0) return serial_count_by_blocks(n, kind);
  const auto prefixes = feasible_prefixes(n, kind, depth);
  const auto count = static_cast<std::ptrdiff_t>(prefixes.size());
  std::vector<std::vector<std::uint64_t>> partial(prefixes.size(), std::vector<std::uint64_t>(n + 1, 0));
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    auto& row = partial[static_cast<std::size_t>(i)];
    PartitionStream stream(n, kind, prefixes[static_cast<std::size_t>(i)]);
    while (auto p = stream.next()) ++row[p->block_count()];
  }
  std::vector<std::uint64_t> out(n + 1, 0);
  for (const auto& row : partial) {
    for (std::size_t b = 0; b <= n; ++b) out[b] += row[b];
  }
  return out;
}

namespace {

// Members ordered by block count ascending: every z > y has fewer blocks
// than y and is therefore finished before y starts.
std::vector<std::size_t> top_down_order(const std::vector<SetPartition>& members) {
  std::vector<std::size_t> order(members.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return members[a].block_count() < members[b].block_count();
  });
  return order;
}

void check_members(const std::vector<SetPartition>& members, const SetPartition& top) {
  for (const auto& m : members) {
    if (!leq(m, top)) throw std::invalid_argument("member " + to_string(m) + " is not below " + to_string(top));
  }
}

}  // namespace

std::vector<std::int64_t> serial_moebius_to_top(const std::vector<SetPartition>& members, const SetPartition& top) {
  check_members(members, top);
  const auto order = top_down_order(members);
  std::vector<std::int64_t> mu(members.size(), 0);
  for (std::size_t a = 0; a < order.size(); ++a) {
    const auto& y = members[order[a]];
    if (y == top) {
      mu[order[a]] = 1;
      continue;
    }
    std::int64_t acc = 0;
    for (std::size_t b = 0; b < a; ++b) {
      const auto& z = members[order[b]];
      if (z.block_count() < y.block_count() && leq(y, z)) acc += mu[order[b]];
    }
    mu[order[a]] = -acc;
  }
  return mu;
}

std::vector<std::int64_t> parallel_moebius_to_top(const std::vector<SetPartition>& members,
                                                  const SetPartition& top) {
  check_members(members, top);
  const auto order = top_down_order(members);
  std::vector<std::int64_t> mu(members.size(), 0);
  // Members with equal block count are incomparable, so each level only
  // reads finished levels and its entries can be filled concurrently.
  std::size_t level_begin = 0;
  while (level_begin < order.size()) {
    const std::size_t blocks = members[order[level_begin]].block_count();
    std::size_t level_end = level_begin;
    while (level_end < order.size() && members[order[level_end]].block_count() == blocks) ++level_end;

    const auto lo = static_cast<std::ptrdiff_t>(level_begin);
    const auto hi = static_cast<std::ptrdiff_t>(level_end);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t a = lo; a < hi; ++a) {
      const std::size_t idx = order[static_cast<std::size_t>(a)];
      const auto& y = members[idx];
      if (y == top) {
        mu[idx] = 1;
        continue;
      }
      std::int64_t acc = 0;
      for (std::size_t b = 0; b < level_begin; ++b) {
        if (leq(y, members[order[b]])) acc += mu[order[b]];
      }
      mu[idx] = -acc;
    }
    level_begin = level_end;
  }
  return mu;
}

}  // namespace ncpart::kernels
