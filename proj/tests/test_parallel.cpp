#include <doctest.h>

#include <random>

#include "ncpart/incidence.hpp"
#include "ncpart/parallel.hpp"
#include "oracles.hpp"

using namespace ncpart;
using namespace ncpart::kernels;

namespace {

constexpr PartitionKind kKinds[] = {PartitionKind::all,         PartitionKind::noncrossing,
                                    PartitionKind::interval,    PartitionKind::pairing,
                                    PartitionKind::connected,   PartitionKind::irreducible,
                                    PartitionKind::connected_pairing, PartitionKind::nc_irreducible};

bool is_pairing_kind(PartitionKind k) {
  return k == PartitionKind::pairing || k == PartitionKind::connected_pairing;
}

}  // namespace

TEST_CASE("split depth stays below n") {
  for (std::size_t n = 1; n <= 64; ++n) CHECK(split_depth(n) < n);
  CHECK(split_depth(7) == 0);
}

TEST_CASE("parallel counts match serial counts, n <= 10") {
  for (const auto kind : kKinds)
    for (std::size_t n = 1; n <= 10; ++n) {
      if (is_pairing_kind(kind) && n % 2 == 1) continue;
      CAPTURE(n);
      const auto s = serial_count(n, kind);
      REQUIRE(parallel_count(n, kind) == s);
      REQUIRE(s == enumerate(n, kind).size());
      REQUIRE(parallel_count_by_blocks(n, kind) == serial_count_by_blocks(n, kind));
    }
  CHECK(parallel_count(10, PartitionKind::all) == oracle::bell(10));
}

TEST_CASE("parallel weighted sums match serial sums exactly") {
  std::mt19937_64 rng(89);
  const auto w = oracle::random_values(rng, 10);
  const auto weight = [&](const SetPartition& p) {
    Rational acc(1);
    for (const auto s : p.block_sizes()) acc *= w[s - 1];
    return acc;
  };
  for (const auto kind : {PartitionKind::all, PartitionKind::noncrossing, PartitionKind::connected})
    for (std::size_t n = 1; n <= 10; ++n) CHECK(parallel_sum<Rational>(n, kind, weight) == serial_sum<Rational>(n, kind, weight));
  const auto blocks = [&](const SetPartition& p) { return Polynomial::monomial(p.block_count()); };
  CHECK(parallel_sum<Polynomial>(9, PartitionKind::all, blocks) == serial_sum<Polynomial>(9, PartitionKind::all, blocks));
}

TEST_CASE("exceptions inside parallel sums propagate") {
  const auto thrower = [](const SetPartition& p) -> Rational {
    if (p.block_count() == 3) throw std::runtime_error("weight failed");
    return Rational(1);
  };
  CHECK_THROWS_AS(parallel_sum<Rational>(9, PartitionKind::all, thrower), std::runtime_error);
}

TEST_CASE("parallel Möbius column matches serial recursion") {
  for (const auto lattice : {LatticeKind::full, LatticeKind::noncrossing, LatticeKind::interval}) {
    for (std::size_t n = 1; n <= 7; ++n) {
      const auto top = SetPartition::coarsest(n);
      const auto members = enumerate(n, family_of(lattice));
      REQUIRE(parallel_moebius_to_top(members, top) == serial_moebius_to_top(members, top));
    }
    const auto top = SetPartition::parse("1,2,7/3,4,5/6");
    if (!in_lattice(lattice, top)) continue;
    const auto members = segment(lattice, SetPartition::finest(7), top);
    const auto mu = parallel_moebius_to_top(members, top);
    REQUIRE(mu == serial_moebius_to_top(members, top));
    for (std::size_t i = 0; i < members.size(); ++i) REQUIRE(mu[i] == moebius_unmemoized(lattice, members[i], top));
  }
  CHECK_THROWS_AS(serial_moebius_to_top({SetPartition::coarsest(3)}, SetPartition::finest(3)), std::invalid_argument);
}
