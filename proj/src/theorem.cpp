#include "ncpart/theorem.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace ncpart {

std::uint64_t count_connected(std::size_t n) { return kernels::parallel_count(n, PartitionKind::connected); }

std::uint64_t count_connected_pairings(std::size_t n) {
  if (n % 2 != 0) throw std::invalid_argument("pairings need an even ground set, got " + std::to_string(n));
  return kernels::parallel_count(n, PartitionKind::connected_pairing);
}

Polynomial block_polynomial(std::size_t n) {
  const auto by_blocks = kernels::parallel_count_by_blocks(n, PartitionKind::connected);
  std::vector<Rational> coeffs;
  for (const auto c : by_blocks) coeffs.emplace_back(static_cast<unsigned long>(c));
  return Polynomial(std::move(coeffs));
}

double dobinski(std::size_t n, std::size_t terms) {
  if (terms < 1) throw std::invalid_argument("dobinski needs at least one term");
  long double sum = n == 0 ? 1.0L : 0.0L;  // k = 0 contributes 0^n
  for (std::size_t k = 1; k <= terms; ++k) {
    const long double kk = static_cast<long double>(k);
    sum += std::exp(static_cast<long double>(n) * std::log(kk) - std::lgamma(kk + 1.0L));
  }
  return static_cast<double>(sum * std::exp(-1.0L));
}

Sequence<Rational> random_classical(std::size_t order, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> numerator(-100, 100);
  std::uniform_int_distribution<long> denominator(1, 100);
  Sequence<Rational> out{Flavor::classical, {}};
  for (std::size_t i = 0; i < order; ++i) {
    Rational q(numerator(rng), denominator(rng));
    q.canonicalize();
    out.values.push_back(q);
  }
  return out;
}

bool VerifyReport::all_equal() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.equal; });
}

namespace {

std::vector<Check> verify_trial(std::size_t max_n, std::uint64_t seed) {
  const auto kappa = random_classical(max_n, seed);
  const auto m = cumulant_to_moment(kappa);
  const auto c = moment_to_cumulant(m, Flavor::free, Route::lattice);
  const auto h = moment_to_cumulant(m, Flavor::boolean, Route::lattice);

  std::vector<Check> out;
  const auto record = [&](const char* identity, std::size_t n, const Rational& lhs, const Rational& rhs) {
    out.push_back({identity, n, seed, to_string(lhs), to_string(rhs), lhs == rhs});
  };
  for (std::size_t n = 1; n <= max_n; ++n) {
    record("free-connected", n, free_from_classical(kappa, n), c.at(n));
    record("boolean-irreducible", n, boolean_from_classical(kappa, n), h.at(n));
    record("boolean-nc-irreducible", n, boolean_from_free(c, n), h.at(n));
  }
  return out;
}

}  // namespace

VerifyReport verify(std::size_t max_n, std::size_t trials, std::uint64_t seed, bool inject_fault) {
  if (max_n == 0) throw std::invalid_argument("verify needs max_n >= 1");
  VerifyReport report{max_n, trials, seed, {}};
  std::vector<std::vector<Check>> per_trial(trials);
  const auto count = static_cast<std::ptrdiff_t>(trials);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t t = 0; t < count; ++t) {
    per_trial[static_cast<std::size_t>(t)] = verify_trial(max_n, seed + static_cast<std::uint64_t>(t));
  }
  for (auto& checks : per_trial) {
    for (auto& c : checks) report.checks.push_back(std::move(c));
  }
  if (inject_fault && !report.checks.empty()) {
    auto& first = report.checks.front();
    first.lhs = to_string(Rational(parse_rational(first.lhs) + 1));
    first.equal = first.lhs == first.rhs;
  }
  return report;
}

}  // namespace ncpart
