#include <doctest.h>

#include <random>

#include "ncpart/cumulants.hpp"
#include "oracles.hpp"

using namespace ncpart;
using Seq = Sequence<Rational>;

namespace {

constexpr Flavor kCumulants[] = {Flavor::classical, Flavor::free, Flavor::boolean};
constexpr Route kRoutes[] = {Route::recursive, Route::lattice, Route::series};

Seq moments(std::vector<Rational> v) { return {Flavor::moments, std::move(v)}; }

Seq random_moments(std::mt19937_64& rng, std::size_t order) { return moments(oracle::random_values(rng, order)); }

}  // namespace

TEST_CASE("flavor names") {
  for (const auto f : {Flavor::moments, Flavor::classical, Flavor::free, Flavor::boolean})
    CHECK(parse_flavor(to_string(f)) == f);
  CHECK_FALSE(parse_flavor("monotone").has_value());
  CHECK(lattice_of(Flavor::classical) == LatticeKind::full);
  CHECK(lattice_of(Flavor::free) == LatticeKind::noncrossing);
  CHECK(lattice_of(Flavor::boolean) == LatticeKind::interval);
}

TEST_CASE("moments to cumulants on known laws") {
  const auto gauss = moments({0, 1, 0, 3, 0, 15});
  const auto bell = moments({1, 2, 5, 15, 52});
  for (const auto route : kRoutes) {
    CAPTURE(static_cast<int>(route));
    CHECK(moment_to_cumulant(gauss, Flavor::classical, route).values == std::vector<Rational>{0, 1, 0, 0, 0, 0});
    CHECK(moment_to_cumulant(bell, Flavor::classical, route).values == std::vector<Rational>{1, 1, 1, 1, 1});
    CHECK(moment_to_cumulant(bell, Flavor::boolean, route).values == std::vector<Rational>{1, 1, 2, 6, 22});
    CHECK(moment_to_cumulant(gauss, Flavor::free, route).values == std::vector<Rational>{0, 1, 0, 1, 0, 4});
    CHECK(moment_to_cumulant(bell, Flavor::free, route).flavor == Flavor::free);
  }
}

TEST_CASE("cumulants to moments on known laws") {
  const auto gm = cumulant_to_moment(gaussian(10));
  CHECK(gm.values == std::vector<Rational>{0, 1, 0, 3, 0, 15, 0, 105, 0, 945});
  const auto bm = cumulant_to_moment(poisson(Rational(1), 10));
  for (std::size_t n = 1; n <= 10; ++n) CHECK(bm.at(n) == oracle::bell(n));
  for (const auto f : kCumulants)
    for (const auto route : kRoutes) {
      const Seq zero{f, std::vector<Rational>(6, 0)};
      CHECK(cumulant_to_moment(zero, route).values == std::vector<Rational>(6, 0));
    }
}

TEST_CASE("transform between flavors") {
  CHECK(transform(poisson(Rational(1), 4), Flavor::free).values == std::vector<Rational>{1, 1, 1, 2});
  const auto h = transform(gaussian(4), Flavor::boolean);
  CHECK(h.values == std::vector<Rational>{0, 1, 0, 2});
  CHECK(transform(gaussian(8), Flavor::boolean).values == std::vector<Rational>{0, 1, 0, 2, 0, 10, 0, 74});
  CHECK(transform(gaussian(8), Flavor::free).values == std::vector<Rational>{0, 1, 0, 1, 0, 4, 0, 27});
  CHECK(transform(poisson(Rational(1), 8), Flavor::free).values ==
        std::vector<Rational>{1, 1, 1, 2, 6, 21, 85, 385});
  CHECK(transform(poisson(Rational(1), 8), Flavor::boolean).values ==
        std::vector<Rational>{1, 1, 2, 6, 22, 92, 426, 2146});
  std::mt19937_64 rng(53);
  for (const auto f : kCumulants) {
    const Seq x{f, oracle::random_values(rng, 8)};
    CHECK(transform(transform(x, Flavor::moments), f) == x);
    CHECK(transform(x, f) == x);
  }
}

TEST_CASE("wrong flavors are rejected") {
  const auto m = moments({1, 2});
  CHECK_THROWS_AS(moment_to_cumulant(gaussian(3), Flavor::free), std::invalid_argument);
  CHECK_THROWS_AS(moment_to_cumulant(m, Flavor::moments), std::invalid_argument);
  CHECK_THROWS_AS(cumulant_to_moment(m), std::invalid_argument);
  CHECK_THROWS_AS(convolve_free(m, gaussian(2)), std::invalid_argument);
  CHECK_THROWS_AS(convolve_classical(m, moments({1, 2, 3})), std::invalid_argument);
  CHECK_THROWS_AS(gaussian(3).at(0), std::out_of_range);
  CHECK(m.at(0) == 1);
}

TEST_CASE("all routes agree with explicit Möbius inversion, n <= 8") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 3; ++trial) {
    const auto m = random_moments(rng, 8);
    for (const auto f : kCumulants) {
      const auto reference = moment_to_cumulant(m, f, Route::recursive);
      CHECK(moment_to_cumulant(m, f, Route::lattice) == reference);
      CHECK(moment_to_cumulant(m, f, Route::series) == reference);
      for (std::size_t n = 1; n <= 8; ++n) REQUIRE(oracle::invert_at_top(m.values, n, lattice_of(f)) == reference.at(n));
      for (const auto route : kRoutes) CHECK(cumulant_to_moment(reference, route) == m);
    }
  }
}

TEST_CASE("lattice and series routes agree up to order 10") {
  std::mt19937_64 rng(61);
  const auto m = random_moments(rng, 10);
  for (const auto f : kCumulants) {
    CHECK(moment_to_cumulant(m, f, Route::lattice) == moment_to_cumulant(m, f, Route::series));
    const Seq k{f, oracle::random_values(rng, 10)};
    CHECK(cumulant_to_moment(k, Route::lattice) == cumulant_to_moment(k, Route::series));
  }
}

TEST_CASE("leading term: k_n - m_n depends only on lower moments") {
  std::mt19937_64 rng(67);
  for (const auto f : kCumulants) {
    for (std::size_t n = 1; n <= 8; ++n) {
      const auto m = random_moments(rng, 8);
      auto bumped = m;
      bumped.values[n - 1] += 1;
      const auto k = moment_to_cumulant(m, f), kb = moment_to_cumulant(bumped, f);
      for (std::size_t j = 1; j < n; ++j) REQUIRE(k.at(j) == kb.at(j));
      REQUIRE(kb.at(n) - k.at(n) == 1);
    }
  }
}

TEST_CASE("homogeneity under dilation") {
  std::mt19937_64 rng(71);
  const auto m = random_moments(rng, 8);
  CHECK(dilate(m, Rational(1)) == m);
  CHECK(dilate(cumulant_to_moment(gaussian(4)), Rational(2)).at(2) == 4);
  for (const auto f : kCumulants) {
    const auto t = oracle::random_rational(rng);
    CHECK(moment_to_cumulant(dilate(m, t), f) == dilate(moment_to_cumulant(m, f), t));
  }
}

TEST_CASE("additivity under the three convolutions") {
  std::mt19937_64 rng(73);
  const auto a = random_moments(rng, 8), b = random_moments(rng, 8);
  const auto sum = [](const Seq& x, const Seq& y) {
    Seq out{x.flavor, {}};
    for (std::size_t i = 0; i < x.order(); ++i) out.values.push_back(x.values[i] + y.values[i]);
    return out;
  };
  const std::pair<Flavor, Seq> cases[] = {{Flavor::classical, convolve_classical(a, b)},
                                          {Flavor::free, convolve_free(a, b)},
                                          {Flavor::boolean, convolve_boolean(a, b)}};
  for (const auto& [f, ab] : cases) {
    CHECK(ab.flavor == Flavor::moments);
    CHECK(ab.at(1) == a.at(1) + b.at(1));
    CHECK(moment_to_cumulant(ab, f) == sum(moment_to_cumulant(a, f), moment_to_cumulant(b, f)));
  }
  const auto g = cumulant_to_moment(gaussian(6));
  CHECK(moment_to_cumulant(convolve_classical(g, g), Flavor::classical).values ==
        std::vector<Rational>{0, 2, 0, 0, 0, 0});
  const Rational l(1, 3), mu(5, 2);
  CHECK(convolve_classical(cumulant_to_moment(poisson(l, 6)), cumulant_to_moment(poisson(mu, 6))) ==
        cumulant_to_moment(poisson(Rational(l + mu), 6)));
}

TEST_CASE("named laws") {
  CHECK(gaussian(6).values == std::vector<Rational>{0, 1, 0, 0, 0, 0});
  CHECK(gaussian(1).values == std::vector<Rational>{0});
  CHECK(poisson(Rational(1), 6).values == std::vector<Rational>(6, 1));
  const auto L = Polynomial::lambda();
  const auto p = poisson(L, 5);
  for (const auto& v : p.values) CHECK(v == L);
}

TEST_CASE("transforms over the polynomial ring") {
  const auto L = Polynomial::lambda();
  const auto m = cumulant_to_moment(poisson(L, 6));
  // Touchard polynomials: m_3 = λ + 3λ^2 + λ^3
  CHECK(m.at(3) == Polynomial({0, 1, 3, 1}));
  CHECK(m.at(1) == L);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(m.at(n).evaluate(1) == oracle::bell(n));
  for (const auto f : kCumulants) {
    const auto k = moment_to_cumulant(m, f);
    CHECK(moment_to_cumulant(m, f, Route::lattice) == k);
    CHECK(moment_to_cumulant(m, f, Route::series) == k);
    for (std::size_t n = 1; n <= 5; ++n) CHECK(oracle::invert_at_top(m.values, n, lattice_of(f)) == k.at(n));
  }
  CHECK(moment_to_cumulant(m, Flavor::classical).values == std::vector<Polynomial>(6, L));
  CHECK(moment_to_cumulant(m, Flavor::free).at(4) == L + L * L);
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
}
