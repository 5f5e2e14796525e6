#pragma once

// Set partitions of [n] = {1, ..., n} in restricted-growth encoding, the
// families used by the cumulant lattices, and streaming enumeration.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ncpart {

/// Largest ground set the encoding supports. Enumeration is practical far
/// below this.
inline constexpr std::size_t kMaxGroundSet = 64;

/// A partition of [n] stored as its restricted growth string: position i
/// (0-based) holds the label of the block containing element i + 1, labels
/// numbered by first appearance. Equality of partitions is equality of codes.
class SetPartition {
 public:
  /// Validates the restricted growth property. Throws std::invalid_argument.
  static SetPartition from_code(std::vector<std::uint8_t> code);
  /// Blocks of 1-based elements, any order. Must cover [n] exactly once.
  static SetPartition from_blocks(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks);
  /// Relabels an arbitrary labelling (element i has label labels[i]) into
  /// canonical form.
  static SetPartition from_labels(std::span<const std::size_t> labels);
  /// "1,8/2,4/3,5": blocks separated by '/', elements by ','. Order of
  /// blocks and of elements inside a block is irrelevant.
  static SetPartition parse(std::string_view text);

  /// 0̂_n: all singletons.
  static SetPartition finest(std::size_t n);
  /// 1̂_n: one block.
  static SetPartition coarsest(std::size_t n);

  std::size_t size() const { return code_.size(); }
  const std::vector<std::uint8_t>& code() const { return code_; }
  std::size_t block_count() const { return block_count_; }
  /// Label of the block holding the 0-based position i.
  std::size_t label(std::size_t i) const { return code_[i]; }

  /// Blocks as ascending lists of 1-based elements, ordered by minimum.
  std::vector<std::vector<std::size_t>> blocks() const;
  /// Sizes indexed by block label.
  std::vector<std::size_t> block_sizes() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition& a, const SetPartition& b) { return a.code_ <=> b.code_; }

 private:
  friend class PartitionStream;
  explicit SetPartition(std::vector<std::uint8_t> code);
  std::vector<std::uint8_t> code_;
  std::size_t block_count_ = 0;
};

/// Blocks sorted by minimum, elements ascending: "1,8/2,3,4,5/6,7".
std::string to_string(const SetPartition& p);

struct SetPartitionHash {
  std::size_t operator()(const SetPartition& p) const noexcept;
};

/// Families of partitions of [n]. Pairing kinds require even n.
enum class PartitionKind {
  all,
  noncrossing,
  interval,
  pairing,
  connected,
  irreducible,
  connected_pairing,
  nc_irreducible,
};

std::string_view to_string(PartitionKind kind);
/// Accepts the names printed by to_string ("connected-pairing", ...).
std::optional<PartitionKind> parse_partition_kind(std::string_view name);

bool is_noncrossing(const SetPartition& p);
bool is_interval(const SetPartition& p);
bool is_pairing(const SetPartition& p);
/// No proper subinterval [i..j] of [n], singletons included, is a union of
/// blocks. {13/2} is therefore not connected.
bool is_connected(const SetPartition& p);
/// 1 and n share a block of the noncrossing closure.
bool is_irreducible(const SetPartition& p);
bool belongs_to(const SetPartition& p, PartitionKind kind);

/// True iff blocks a and b (labels) cross: some x < y < z < w with x, z in
/// one and y, w in the other.
bool blocks_cross(const SetPartition& p, std::size_t a, std::size_t b);

/// Least noncrossing partition above p, obtained by merging crossing pairs
/// of blocks until none remain.
SetPartition closure(const SetPartition& p);

/// Refinement order: every block of a lies inside a block of b.
/// Throws std::invalid_argument when the ground sets differ.
bool leq(const SetPartition& a, const SetPartition& b);

/// Lexicographic stream of the members of a family whose codes begin with a
/// given prefix. Prefix-closed constraints (block sizes for pairings,
/// crossings, interval shape) prune the search; the remaining predicates
/// filter complete codes.
class PartitionStream {
 public:
  /// Throws std::invalid_argument for n = 0, n > kMaxGroundSet, or odd n with
  /// a pairing kind.
  PartitionStream(std::size_t n, PartitionKind kind);
  /// Restricts to codes starting with `prefix`, which must be a valid
  /// restricted growth string no longer than n. An infeasible prefix yields
  /// an empty stream.
  PartitionStream(std::size_t n, PartitionKind kind, std::vector<std::uint8_t> prefix);

  std::optional<SetPartition> next();

 private:
  friend std::vector<std::vector<std::uint8_t>> feasible_prefixes(std::size_t, PartitionKind, std::size_t);
  PartitionStream(std::size_t n, PartitionKind kind, std::vector<std::uint8_t> prefix, std::size_t stop);

  bool step_to_leaf();
  bool place(std::size_t pos, std::uint8_t label);
  void unplace(std::size_t pos);
  bool feasible(std::size_t pos) const;
  bool accept() const;

  std::size_t n_;
  PartitionKind kind_;
  std::size_t floor_;  // prefix length; never backtrack below it
  std::size_t stop_;   // code length at which a leaf is reported
  std::vector<int> code_;
  std::vector<std::uint8_t> labels_;
  std::vector<std::size_t> block_size_;
  std::vector<std::size_t> block_first_;
  std::vector<std::size_t> block_last_;
  std::vector<std::size_t> prev_last_;  // block_last_ before position i was placed
  std::vector<std::uint8_t> max_label_;  // 1 + max label over positions < i
  std::size_t depth_;
  bool started_ = false;
  bool done_ = false;
};

/// Every code prefix of length `depth` that extends to at least one member of
/// the prefix-closed relaxation of `kind`. Used to split enumeration work.
std::vector<std::vector<std::uint8_t>> feasible_prefixes(std::size_t n, PartitionKind kind, std::size_t depth);

/// Visits every member of the family in lexicographic order.
void for_each_partition(std::size_t n, PartitionKind kind, const std::function<void(const SetPartition&)>& visit);

/// Materializes a family; intended for small n.
std::vector<SetPartition> enumerate(std::size_t n, PartitionKind kind);

}  // namespace ncpart
