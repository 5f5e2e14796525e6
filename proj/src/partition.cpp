#include "ncpart/partition.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace ncpart {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

void check_ground_set(std::size_t n) {
  if (n == 0) throw std::invalid_argument("ground set must be nonempty");
  if (n > kMaxGroundSet) throw std::invalid_argument("ground set too large: " + std::to_string(n));
}

bool is_pairing_kind(PartitionKind kind) {
  return kind == PartitionKind::pairing || kind == PartitionKind::connected_pairing;
}

bool is_noncrossing_kind(PartitionKind kind) {
  return kind == PartitionKind::noncrossing || kind == PartitionKind::nc_irreducible;
}

std::vector<std::uint8_t> canonical_code(std::span<const std::size_t> labels) {
  std::vector<std::size_t> remap;
  std::vector<std::uint8_t> code(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto it = std::find(remap.begin(), remap.end(), labels[i]);
    code[i] = static_cast<std::uint8_t>(it - remap.begin());
    if (it == remap.end()) remap.push_back(labels[i]);
  }
  return code;
}

// Runs of the label sequence restricted to {a, b}; four or more runs means
// the pattern a b a b (or b a b a) occurs.
template <class Code>
bool labels_cross(const Code& code, std::size_t a, std::size_t b) {
  std::size_t runs = 0;
  std::size_t last = kNone;
  for (const auto c : code) {
    const std::size_t l = c;
    if (l != a && l != b) continue;
    if (l != last) {
      ++runs;
      last = l;
      if (runs >= 4) return true;
    }
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// SetPartition

SetPartition::SetPartition(std::vector<std::uint8_t> code) : code_(std::move(code)) {
  for (const auto c : code_) block_count_ = std::max<std::size_t>(block_count_, c + 1U);
}

SetPartition SetPartition::from_code(std::vector<std::uint8_t> code) {
  check_ground_set(code.size());
  std::size_t next = 0;
  for (const auto c : code) {
    if (c > next) throw std::invalid_argument("not a restricted growth string");
    if (c == next) ++next;
  }
  return SetPartition(std::move(code));
}

SetPartition SetPartition::from_labels(std::span<const std::size_t> labels) {
  check_ground_set(labels.size());
  return SetPartition(canonical_code(labels));
}

SetPartition SetPartition::from_blocks(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks) {
  check_ground_set(n);
  std::vector<std::size_t> labels(n, kNone);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw std::invalid_argument("empty block");
    for (const auto e : blocks[b]) {
      if (e < 1 || e > n) throw std::invalid_argument("element " + std::to_string(e) + " outside [1, n]");
      if (labels[e - 1] != kNone) throw std::invalid_argument("element " + std::to_string(e) + " repeated");
      labels[e - 1] = b;
    }
  }
  if (std::find(labels.begin(), labels.end(), kNone) != labels.end()) {
    throw std::invalid_argument("blocks do not cover [1, n]");
  }
  return SetPartition(canonical_code(labels));
}

SetPartition SetPartition::parse(std::string_view text) {
  std::vector<std::vector<std::size_t>> blocks;
  std::size_t count = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t slash = std::min(text.find('/', start), text.size());
    const std::string_view block = text.substr(start, slash - start);
    auto& elements = blocks.emplace_back();
    std::size_t pos = 0;
    while (pos <= block.size()) {
      const std::size_t comma = std::min(block.find(',', pos), block.size());
      const std::string_view item = block.substr(pos, comma - pos);
      std::size_t value = 0;
      const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
      if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
        throw std::invalid_argument("malformed partition: \"" + std::string(text) + "\"");
      }
      elements.push_back(value);
      ++count;
      pos = comma + 1;
    }
    start = slash + 1;
  }
  return from_blocks(count, blocks);
}

SetPartition SetPartition::finest(std::size_t n) {
  check_ground_set(n);
  std::vector<std::uint8_t> code(n);
  for (std::size_t i = 0; i < n; ++i) code[i] = static_cast<std::uint8_t>(i);
  return SetPartition(std::move(code));
}

SetPartition SetPartition::coarsest(std::size_t n) {
  check_ground_set(n);
  return SetPartition(std::vector<std::uint8_t>(n, 0));
}

std::vector<std::vector<std::size_t>> SetPartition::blocks() const {
  std::vector<std::vector<std::size_t>> out(block_count_);
  for (std::size_t i = 0; i < code_.size(); ++i) out[code_[i]].push_back(i + 1);
  return out;
}

std::vector<std::size_t> SetPartition::block_sizes() const {
  std::vector<std::size_t> out(block_count_, 0);
  for (const auto c : code_) ++out[c];
  return out;
}

std::string to_string(const SetPartition& p) {
  std::string out;
  for (const auto& block : p.blocks()) {
    if (!out.empty()) out += '/';
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (k != 0) out += ',';
      out += std::to_string(block[k]);
    }
  }
  return out;
}

std::size_t SetPartitionHash::operator()(const SetPartition& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (const auto c : p.code()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h ^ p.size();
}

std::string_view to_string(PartitionKind kind) {
  switch (kind) {
    case PartitionKind::all: return "all";
    case PartitionKind::noncrossing: return "noncrossing";
    case PartitionKind::interval: return "interval";
    case PartitionKind::pairing: return "pairing";
    case PartitionKind::connected: return "connected";
    case PartitionKind::irreducible: return "irreducible";
    case PartitionKind::connected_pairing: return "connected-pairing";
    case PartitionKind::nc_irreducible: return "nc-irreducible";
  }
  return "?";
}

std::optional<PartitionKind> parse_partition_kind(std::string_view name) {
  for (const auto kind : {PartitionKind::all, PartitionKind::noncrossing, PartitionKind::interval,
                          PartitionKind::pairing, PartitionKind::connected, PartitionKind::irreducible,
                          PartitionKind::connected_pairing, PartitionKind::nc_irreducible}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Predicates

bool blocks_cross(const SetPartition& p, std::size_t a, std::size_t b) {
  if (a == b) return false;
  return labels_cross(p.code(), a, b);
}

bool is_noncrossing(const SetPartition& p) {
  // Scan left to right keeping, per block, its first and most recent element.
  // Element i joining a block whose previous element is l crosses iff some
  // element strictly between l and i belongs to a block that started before l.
  const auto& code = p.code();
  std::array<std::size_t, kMaxGroundSet> first{};
  std::array<std::size_t, kMaxGroundSet> last{};
  std::size_t seen = 0;
  for (std::size_t i = 0; i < code.size(); ++i) {
    const std::size_t b = code[i];
    if (b == seen) {
      first[b] = last[b] = i;
      ++seen;
      continue;
    }
    const std::size_t l = last[b];
    for (std::size_t x = l + 1; x < i; ++x) {
      if (first[code[x]] < l) return false;
    }
    last[b] = i;
  }
  return true;
}

bool is_interval(const SetPartition& p) {
  const auto& code = p.code();
  for (std::size_t i = 1; i < code.size(); ++i) {
    if (code[i] != code[i - 1] && code[i] <= code[i - 1]) return false;
  }
  return true;
}

bool is_pairing(const SetPartition& p) {
  const auto sizes = p.block_sizes();
  return std::all_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s == 2; });
}

bool is_connected(const SetPartition& p) {
  const auto& code = p.code();
  const std::size_t n = code.size();
  std::array<std::size_t, kMaxGroundSet> first{};
  std::array<std::size_t, kMaxGroundSet> last{};
  for (std::size_t i = n; i-- > 0;) first[code[i]] = i;
  for (std::size_t i = 0; i < n; ++i) last[code[i]] = i;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t lo = kNone;
    std::size_t hi = 0;
    for (std::size_t j = i; j < n; ++j) {
      lo = std::min(lo, first[code[j]]);
      hi = std::max(hi, last[code[j]]);
      if (lo < i) break;  // every longer interval from i also leaks left
      if (hi == j && !(i == 0 && j == n - 1)) return false;
    }
  }
  return true;
}

bool is_irreducible(const SetPartition& p) {
  const auto c = closure(p);
  return c.label(0) == c.label(c.size() - 1);
}

bool belongs_to(const SetPartition& p, PartitionKind kind) {
  switch (kind) {
    case PartitionKind::all: return true;
    case PartitionKind::noncrossing: return is_noncrossing(p);
    case PartitionKind::interval: return is_interval(p);
    case PartitionKind::pairing: return is_pairing(p);
    case PartitionKind::connected: return is_connected(p);
    case PartitionKind::irreducible: return is_irreducible(p);
    case PartitionKind::connected_pairing: return is_pairing(p) && is_connected(p);
    case PartitionKind::nc_irreducible: return is_noncrossing(p) && p.label(0) == p.label(p.size() - 1);
  }
  return false;
}

SetPartition closure(const SetPartition& p) {
  std::vector<std::size_t> labels(p.code().begin(), p.code().end());
  std::size_t blocks = p.block_count();
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t a = 0; a < blocks && !merged; ++a) {
      for (std::size_t b = a + 1; b < blocks && !merged; ++b) {
        if (!labels_cross(labels, a, b)) continue;
        for (auto& l : labels) {
          if (l == b) l = a;
        }
        const auto code = canonical_code(labels);
        labels.assign(code.begin(), code.end());
        --blocks;
        merged = true;
      }
    }
  }
  return SetPartition::from_labels(labels);
}

bool leq(const SetPartition& a, const SetPartition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("partitions of different ground sets");
  std::array<std::uint8_t, kMaxGroundSet> image;
  image.fill(0xFF);
  const auto& ca = a.code();
  const auto& cb = b.code();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    auto& slot = image[ca[i]];
    if (slot == 0xFF) {
      slot = cb[i];
    } else if (slot != cb[i]) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration

PartitionStream::PartitionStream(std::size_t n, PartitionKind kind) : PartitionStream(n, kind, {}) {}

PartitionStream::PartitionStream(std::size_t n, PartitionKind kind, std::vector<std::uint8_t> prefix)
    : PartitionStream(n, kind, std::move(prefix), n) {}

PartitionStream::PartitionStream(std::size_t n, PartitionKind kind, std::vector<std::uint8_t> prefix,
                                 std::size_t stop)
    : n_(n),
      kind_(kind),
      floor_(prefix.size()),
      stop_(stop),
      code_(n, -1),
      labels_(n, 0),
      block_size_(n, 0),
      block_first_(n, kNone),
      block_last_(n, kNone),
      prev_last_(n, kNone),
      max_label_(n + 1, 0),
      depth_(prefix.size()) {
  check_ground_set(n);
  if (is_pairing_kind(kind) && n % 2 != 0) {
    throw std::invalid_argument("pairings need an even ground set, got " + std::to_string(n));
  }
  if (prefix.size() > stop) throw std::invalid_argument("prefix longer than the ground set");
  for (std::size_t pos = 0; pos < prefix.size(); ++pos) {
    if (prefix[pos] > max_label_[pos]) throw std::invalid_argument("prefix is not a restricted growth string");
    code_[pos] = prefix[pos];
    if (!place(pos, prefix[pos])) done_ = true;
  }
}

bool PartitionStream::place(std::size_t pos, std::uint8_t label) {
  labels_[pos] = label;
  ++block_size_[label];
  if (label == max_label_[pos]) block_first_[label] = pos;
  prev_last_[pos] = block_last_[label];
  block_last_[label] = pos;
  max_label_[pos + 1] = std::max<std::uint8_t>(max_label_[pos], static_cast<std::uint8_t>(label + 1));
  return feasible(pos);
}

void PartitionStream::unplace(std::size_t pos) {
  const std::uint8_t label = labels_[pos];
  --block_size_[label];
  block_last_[label] = prev_last_[pos];
}

bool PartitionStream::feasible(std::size_t pos) const {
  const std::size_t b = labels_[pos];
  if (is_pairing_kind(kind_)) {
    if (block_size_[b] > 2) return false;
    std::size_t open = 0;
    for (std::size_t l = 0; l < max_label_[pos + 1]; ++l) open += block_size_[l] == 1 ? 1 : 0;
    return open <= n_ - pos - 1;
  }
  if (is_noncrossing_kind(kind_)) {
    const std::size_t l = prev_last_[pos];
    if (l == kNone) return true;
    for (std::size_t x = l + 1; x < pos; ++x) {
      if (block_first_[labels_[x]] < l) return false;
    }
    return true;
  }
  if (kind_ == PartitionKind::interval) {
    return pos == 0 || b == labels_[pos - 1] || b == max_label_[pos];
  }
  return true;
}

bool PartitionStream::accept() const {
  switch (kind_) {
    case PartitionKind::connected:
    case PartitionKind::connected_pairing:
      return is_connected(SetPartition(labels_));
    case PartitionKind::irreducible:
      return is_irreducible(SetPartition(labels_));
    case PartitionKind::nc_irreducible:
      return labels_.front() == labels_.back();
    default:
      return true;
  }
}

bool PartitionStream::step_to_leaf() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
  } else {
    if (stop_ == floor_) {
      done_ = true;
      return false;
    }
    depth_ = stop_ - 1;
  }
  while (true) {
    if (depth_ == stop_) return true;
    const std::size_t pos = depth_;
    int v = code_[pos] + 1;
    if (code_[pos] >= 0) unplace(pos);
    bool placed = false;
    for (; v <= max_label_[pos]; ++v) {
      if (place(pos, static_cast<std::uint8_t>(v))) {
        placed = true;
        break;
      }
      unplace(pos);
    }
    if (placed) {
      code_[pos] = v;
      ++depth_;
      continue;
    }
    code_[pos] = -1;
    if (pos == floor_) {
      done_ = true;
      return false;
    }
    depth_ = pos - 1;
  }
}

std::optional<SetPartition> PartitionStream::next() {
  while (step_to_leaf()) {
    if (accept()) return SetPartition(labels_);
  }
  return std::nullopt;
}

std::vector<std::vector<std::uint8_t>> feasible_prefixes(std::size_t n, PartitionKind kind, std::size_t depth) {
  depth = std::min(depth, n);
  std::vector<std::vector<std::uint8_t>> out;
  PartitionStream stream(n, kind, {}, depth);
  while (stream.step_to_leaf()) out.emplace_back(stream.labels_.begin(), stream.labels_.begin() + depth);
  return out;
}

void for_each_partition(std::size_t n, PartitionKind kind, const std::function<void(const SetPartition&)>& visit) {
  PartitionStream stream(n, kind);
  while (auto p = stream.next()) visit(*p);
}

std::vector<SetPartition> enumerate(std::size_t n, PartitionKind kind) {
  std::vector<SetPartition> out;
  for_each_partition(n, kind, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

}  // namespace ncpart
