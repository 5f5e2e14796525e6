#include "ncpart/incidence.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "ncpart/parallel.hpp"

namespace ncpart {

std::string_view to_string(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::full: return "full";
    case LatticeKind::noncrossing: return "noncrossing";
    case LatticeKind::interval: return "interval";
  }
  return "?";
}

PartitionKind family_of(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::full: return PartitionKind::all;
    case LatticeKind::noncrossing: return PartitionKind::noncrossing;
    case LatticeKind::interval: return PartitionKind::interval;
  }
  return PartitionKind::all;
}

bool in_lattice(LatticeKind kind, const SetPartition& p) { return belongs_to(p, family_of(kind)); }

std::vector<SetPartition> segment(LatticeKind kind, const SetPartition& lower, const SetPartition& upper) {
  if (!in_lattice(kind, lower) || !in_lattice(kind, upper)) {
    throw std::invalid_argument("segment endpoints outside the " + std::string(to_string(kind)) + " lattice");
  }
  if (!leq(lower, upper)) {
    throw std::invalid_argument("incomparable pair " + to_string(lower) + ", " + to_string(upper));
  }
  std::vector<SetPartition> out;
  PartitionStream stream(lower.size(), family_of(kind));
  while (auto z = stream.next()) {
    if (leq(lower, *z) && leq(*z, upper)) out.push_back(std::move(*z));
  }
  return out;
}

std::size_t SegmentType::lower_rank() const {
  std::size_t total = 0;
  for (std::size_t j = 1; j <= exponents.size(); ++j) total += j * exponents[j - 1];
  return total;
}

std::string to_string(const SegmentType& t) {
  std::string out = "(";
  for (std::size_t j = 0; j < t.exponents.size(); ++j) {
    if (j != 0) out += ", ";
    out += std::to_string(t.exponents[j]);
  }
  return out + ")";
}

SegmentType segment_type(const SetPartition& lower, const SetPartition& upper) {
  if (!leq(lower, upper)) {
    throw std::invalid_argument("incomparable pair " + to_string(lower) + ", " + to_string(upper));
  }
  // Distinct lower blocks per upper block.
  std::vector<std::size_t> inner(upper.block_count(), 0);
  std::vector<bool> seen(lower.block_count(), false);
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (seen[lower.label(i)]) continue;
    seen[lower.label(i)] = true;
    ++inner[upper.label(i)];
  }
  SegmentType type;
  for (const auto j : inner) {
    if (type.exponents.size() < j) type.exponents.resize(j, 0);
    ++type.exponents[j - 1];
  }
  return type;
}

namespace {

void check_comparable(LatticeKind kind, const SetPartition& lower, const SetPartition& upper) {
  if (lower.size() != upper.size()) throw std::invalid_argument("partitions of different ground sets");
  if (!in_lattice(kind, lower) || !in_lattice(kind, upper)) {
    throw std::invalid_argument("pair outside the " + std::string(to_string(kind)) + " lattice");
  }
  if (!leq(lower, upper)) {
    throw std::invalid_argument("incomparable pair " + to_string(lower) + ", " + to_string(upper));
  }
}

// mu(lower, upper) from the left recursion, walking the segment upward by
// decreasing block count so every z < w is finished before w.
Rational moebius_by_recursion(LatticeKind kind, const SetPartition& lower, const SetPartition& upper) {
  auto seg = segment(kind, lower, upper);
  std::stable_sort(seg.begin(), seg.end(), [](const SetPartition& a, const SetPartition& b) {
    return a.block_count() > b.block_count();
  });
  std::vector<Rational> mu(seg.size());
  for (std::size_t a = 0; a < seg.size(); ++a) {
    if (seg[a] == lower) {
      mu[a] = 1;
      continue;
    }
    Rational acc(0);
    for (std::size_t b = 0; b < a; ++b) {
      if (seg[b].block_count() > seg[a].block_count() && leq(seg[b], seg[a])) acc += mu[b];
    }
    mu[a] = -acc;
  }
  for (std::size_t a = 0; a < seg.size(); ++a) {
    if (seg[a] == upper) return mu[a];
  }
  throw std::logic_error("segment lost its upper end");
}

// Segment [0̂_m, π] of Π_m with π made of consecutive blocks of the sizes the
// type prescribes; isomorphic to every segment of that type.
std::pair<SetPartition, SetPartition> representative(const SegmentType& type) {
  const std::size_t m = type.lower_rank();
  std::vector<std::size_t> labels;
  labels.reserve(m);
  std::size_t label = 0;
  for (std::size_t j = 1; j <= type.exponents.size(); ++j) {
    for (std::size_t c = 0; c < type.k(j); ++c, ++label) labels.insert(labels.end(), j, label);
  }
  return {SetPartition::finest(m), SetPartition::from_labels(labels)};
}

template <class Key, class Value>
class SharedCache {
 public:
  template <class Compute>
  const Value& get(const Key& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = entries_.find(key); it != entries_.end()) return *it->second;
    }
    auto value = std::make_unique<Value>(compute());
    std::unique_lock lock(mutex_);
    auto [it, inserted] = entries_.try_emplace(key, std::move(value));
    return *it->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, std::unique_ptr<Value>> entries_;
};

using PairKey = std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>>;

SharedCache<SegmentType, Rational>& full_cache() {
  static SharedCache<SegmentType, Rational> cache;
  return cache;
}

SharedCache<PairKey, Rational>& pair_cache(LatticeKind kind) {
  static SharedCache<PairKey, Rational> noncrossing;
  static SharedCache<PairKey, Rational> interval;
  return kind == LatticeKind::noncrossing ? noncrossing : interval;
}

}  // namespace

Rational moebius(LatticeKind kind, const SetPartition& lower, const SetPartition& upper) {
  check_comparable(kind, lower, upper);
  if (lower == upper) return 1;
  if (kind == LatticeKind::full) {
    const auto type = segment_type(lower, upper);
    return full_cache().get(type, [&] {
      const auto [bottom, top] = representative(type);
      return moebius_by_recursion(LatticeKind::full, bottom, top);
    });
  }
  return pair_cache(kind).get(PairKey{lower.code(), upper.code()},
                              [&] { return moebius_by_recursion(kind, lower, upper); });
}

Rational moebius_unmemoized(LatticeKind kind, const SetPartition& lower, const SetPartition& upper) {
  check_comparable(kind, lower, upper);
  return moebius_by_recursion(kind, lower, upper);
}

const std::map<SetPartition, Rational>& moebius_column(LatticeKind kind, const SetPartition& top) {
  if (!in_lattice(kind, top)) {
    throw std::invalid_argument("top outside the " + std::string(to_string(kind)) + " lattice");
  }
  static SharedCache<std::pair<LatticeKind, std::vector<std::uint8_t>>, std::map<SetPartition, Rational>> cache;
  return cache.get({kind, top.code()}, [&] {
    std::vector<SetPartition> members;
    PartitionStream stream(top.size(), family_of(kind));
    while (auto y = stream.next()) {
      if (leq(*y, top)) members.push_back(std::move(*y));
    }
    const auto mu = kernels::parallel_moebius_to_top(members, top);
    std::map<SetPartition, Rational> column;
    for (std::size_t i = 0; i < members.size(); ++i) column.emplace(members[i], Rational(mu[i]));
    return column;
  });
}

namespace detail {

std::size_t lattice_domain(LatticeKind kind, const std::vector<SetPartition>& keys) {
  if (keys.empty()) throw std::invalid_argument("empty lattice function");
  const std::size_t n = keys.front().size();
  for (const auto& p : keys) {
    if (p.size() != n || !in_lattice(kind, p)) {
      throw std::invalid_argument("value at " + to_string(p) + " lies outside the " +
                                  std::string(to_string(kind)) + " lattice of [" + std::to_string(n) + "]");
    }
  }
  if (keys.size() != kernels::serial_count(n, family_of(kind))) {
    throw std::invalid_argument("lattice function does not cover the whole " + std::string(to_string(kind)) +
                                " lattice of [" + std::to_string(n) + "]");
  }
  return n;
}

}  // namespace detail

}  // namespace ncpart
