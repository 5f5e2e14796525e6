// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes within its time budget.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ncpart/cumulants.hpp"
#include "ncpart/incidence.hpp"
#include "ncpart/theorem.hpp"
#include "oracles.hpp"

using namespace ncpart;
using Seq = Sequence<Rational>;

namespace {

constexpr Flavor kCumulants[] = {Flavor::classical, Flavor::free, Flavor::boolean};
constexpr LatticeKind kLattices[] = {LatticeKind::full, LatticeKind::noncrossing, LatticeKind::interval};

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double budget_seconds, const std::function<void(Outcome&)>& body) {
  Outcome outcome;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(outcome);
  } catch (const std::exception& e) {
    outcome.expect(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  outcome.expect(seconds < budget_seconds, "over time budget of " + std::to_string(budget_seconds) + " s");
  if (!outcome.ok) ++failures;
  std::printf("%s  %d  %-52s %8.3f s / %.0f s%s%s\n", outcome.ok ? "PASS" : "FAIL", id, title, seconds,
              budget_seconds, outcome.ok ? "" : "  ", outcome.detail.c_str());
  std::fflush(stdout);
}

std::string at(const std::string& what, std::size_t n) { return std::string(what) + " at n=" + std::to_string(n); }

Seq random_moments(std::mt19937_64& rng, std::size_t order) {
  return {Flavor::moments, oracle::random_values(rng, order)};
}

}  // namespace

int main() {
  criterion(1, "Gaussian moments are (2n)!/(2^n n!)", 1, [](Outcome& o) {
    const auto m = cumulant_to_moment(gaussian(10));
    const Rational expect[] = {1, 3, 15, 105, 945};
    for (std::size_t k = 1; k <= 5; ++k) {
      o.expect(m.at(2 * k) == expect[k - 1], at("even moment", 2 * k));
      o.expect(m.at(2 * k) == factorial(2 * k) / (power(Rational(2), static_cast<unsigned>(k)) * factorial(k)),
               at("closed form", 2 * k));
      o.expect(m.at(2 * k - 1) == 0, at("odd moment", 2 * k - 1));
    }
  });

  criterion(2, "Bell numbers: transform, enumeration, Dobinski", 10, [](Outcome& o) {
    const auto m = cumulant_to_moment(poisson(Rational(1), 10));
    for (std::size_t n = 1; n <= 10; ++n) {
      const auto listed = enumerate(n, PartitionKind::all).size();
      o.expect(m.at(n) == listed, at("moment vs enumeration", n));
      o.expect(listed == oracle::bell(n), at("enumeration vs Bell triangle", n));
      o.expect(std::abs(dobinski(n, 80) - static_cast<double>(listed)) < 1e-6, at("Dobinski", n));
    }
  });

  criterion(3, "free cumulants sum over connected partitions", 120, [](Outcome& o) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto kappa = random_classical(9, seed);
      const auto m = cumulant_to_moment(kappa);
      for (std::size_t n = 1; n <= 9; ++n) {
        const auto c = oracle::invert_at_top(m.values, n, LatticeKind::noncrossing);
        o.expect(free_from_classical(kappa, n) == c, at("seed " + std::to_string(seed), n));
      }
    }
  });

  criterion(4, "boolean cumulants over irreducible partitions", 120, [](Outcome& o) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto kappa = random_classical(9, seed);
      const auto m = cumulant_to_moment(kappa);
      Seq c{Flavor::free, {}};
      for (std::size_t n = 1; n <= 9; ++n) c.values.push_back(oracle::invert_at_top(m.values, n, LatticeKind::noncrossing));
      for (std::size_t n = 1; n <= 9; ++n) {
        const auto h = oracle::invert_at_top(m.values, n, LatticeKind::interval);
        const auto where = at("seed " + std::to_string(seed), n);
        o.expect(boolean_from_classical(kappa, n) == h, "irreducible, " + where);
        o.expect(boolean_from_free(c, n) == h, "noncrossing irreducible, " + where);
      }
    }
  });

  criterion(5, "connected pairings, partitions, block polynomials", 60, [](Outcome& o) {
    const auto gauss = transform(gaussian(10), Flavor::free);
    const std::uint64_t pairings[] = {1, 1, 4, 27, 248};
    for (std::size_t n = 2; n <= 10; n += 2) {
      o.expect(count_connected_pairings(n) == pairings[n / 2 - 1], at("connected pairings", n));
      o.expect(gauss.at(n) == pairings[n / 2 - 1], at("Gaussian free cumulant", n));
      o.expect(gauss.at(n - 1) == 0, at("odd Gaussian free cumulant", n - 1));
    }
    const auto bell = transform(poisson(Rational(1), 10), Flavor::free);
    for (std::size_t n = 1; n <= 10; ++n) o.expect(bell.at(n) == count_connected(n), at("connected partitions", n));
    const auto L = Polynomial::lambda();
    const auto kappa = poisson(L, 9);
    for (std::size_t n = 1; n <= 9; ++n) o.expect(block_polynomial(n) == free_from_classical(kappa, n), at("λ-polynomial", n));
  });

  criterion(6, "incidence algebra on the three lattices", 60, [](Outcome& o) {
    for (const auto kind : kLattices) {
      const auto z = zeta<Rational>(kind);
      const auto mu = moebius_function<Rational>(kind);
      for (std::size_t n = 1; n <= 7; ++n) {
        const auto members = enumerate(n, family_of(kind));
        for (const auto& s : members)
          for (const auto& p : members) {
            if (!leq(s, p)) continue;
            const Rational d = s == p ? 1 : 0;
            o.expect(convolve(z, mu, s, p) == d && convolve(mu, z, s, p) == d,
                     std::string(to_string(kind)) + " zeta*mu " + to_string(s) + " " + to_string(p));
          }
      }
    }
    Rational fact(1);
    for (std::size_t n = 1; n <= 8; ++n) {
      if (n > 1) fact *= static_cast<long>(n - 1);
      const Rational expect = n % 2 == 1 ? fact : Rational(-fact);
      o.expect(moebius_unmemoized(LatticeKind::full, SetPartition::finest(n), SetPartition::coarsest(n)) == expect,
               at("full-lattice Möbius", n));
    }
    for (std::size_t n = 1; n <= 8; ++n) {
      const auto iv = enumerate(n, PartitionKind::interval);
      o.expect(iv.size() == (std::size_t{1} << (n - 1)), at("interval count", n));
      // Cut points (starts of blocks other than the first) identify I_n with
      // subsets of {2..n}; refinement is reverse inclusion.
      const auto cuts = [](const SetPartition& p) {
        unsigned mask = 0;
        for (const auto& b : p.blocks())
          if (b.front() != 1) mask |= 1U << (b.front() - 2);
        return mask;
      };
      std::vector<bool> hit(std::size_t{1} << (n - 1), false);
      for (const auto& a : iv) {
        o.expect(!hit[cuts(a)], at("cut set injective", n));
        hit[cuts(a)] = true;
        for (const auto& b : iv) o.expect(leq(a, b) == ((cuts(b) & ~cuts(a)) == 0), at("anti-isomorphism", n));
      }
    }
  });

  criterion(7, "lattice and series routes agree", 120, [](Outcome& o) {
    std::mt19937_64 rng(20240607);
    for (int trial = 0; trial < 3; ++trial) {
      const auto m = random_moments(rng, 10);
      for (const auto f : kCumulants) {
        const auto lattice = moment_to_cumulant(m, f, Route::lattice);
        o.expect(lattice == moment_to_cumulant(m, f, Route::series), std::string(to_string(f)) + " moments->cumulants");
        o.expect(lattice == moment_to_cumulant(m, f, Route::recursive), std::string(to_string(f)) + " recursion");
        const Seq k{f, oracle::random_values(rng, 10)};
        o.expect(cumulant_to_moment(k, Route::lattice) == cumulant_to_moment(k, Route::series),
                 std::string(to_string(f)) + " cumulants->moments");
      }
      const auto c = solve_free(ogf_of(m));
      for (std::size_t n = 1; n <= 8; ++n)
        o.expect(c[n] == oracle::invert_at_top(m.values, n, LatticeKind::noncrossing), at("solve_free vs NC inversion", n));
    }
  });

  criterion(8, "cumulant axioms: leading term, homogeneity, additivity", 60, [](Outcome& o) {
    std::mt19937_64 rng(8);
    for (const auto f : kCumulants) {
      const auto name = std::string(to_string(f));
      for (std::size_t n = 1; n <= 8; ++n) {
        const auto m = random_moments(rng, 8);
        auto bumped = m;
        bumped.values[n - 1] += 1;
        const auto k = moment_to_cumulant(m, f), kb = moment_to_cumulant(bumped, f);
        for (std::size_t j = 1; j < n; ++j) o.expect(k.at(j) == kb.at(j), name + " lower terms, " + at("bump", n));
        o.expect(kb.at(n) - k.at(n) == 1, name + " unit sensitivity, " + at("bump", n));
      }
      const auto m = random_moments(rng, 8);
      const auto t = oracle::random_rational(rng);
      o.expect(moment_to_cumulant(dilate(m, t), f) == dilate(moment_to_cumulant(m, f), t), name + " homogeneity");
      const auto a = random_moments(rng, 8), b = random_moments(rng, 8);
      const auto ab = f == Flavor::classical ? convolve_classical(a, b)
                      : f == Flavor::free    ? convolve_free(a, b)
                                             : convolve_boolean(a, b);
      const auto ka = moment_to_cumulant(a, f), kb = moment_to_cumulant(b, f), kab = moment_to_cumulant(ab, f);
      for (std::size_t n = 1; n <= 8; ++n) o.expect(kab.at(n) == ka.at(n) + kb.at(n), name + " " + at("additivity", n));
    }
  });

  criterion(9, "noncrossing closure", 60, [](Outcome& o) {
    const auto fig = SetPartition::parse("1,8/2,4/3,5/6,7/9,11,12/10,13");
    o.expect(to_string(closure(fig)) == "1,8/2,3,4,5/6,7/9,10,11,12,13", "figure example");
    for (std::size_t n = 1; n <= 8; ++n) {
      std::vector<SetPartition> nc;
      std::vector<SetPartition> all;
      for (const auto& blocks : oracle::all_partitions(n)) {
        all.push_back(SetPartition::from_blocks(n, blocks));
        if (oracle::noncrossing(blocks)) nc.push_back(all.back());
      }
      for (const auto& p : all) {
        const auto c = closure(p);
        bool least = in_lattice(LatticeKind::noncrossing, c) && leq(p, c);
        for (const auto& q : nc)
          if (leq(p, q)) least = least && leq(c, q);
        o.expect(least, "closure of " + to_string(p));
      }
    }
  });

  std::printf("%s: %d failing criteria\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
