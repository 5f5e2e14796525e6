#include "ncpart/cumulants.hpp"

namespace ncpart {

std::string_view to_string(Flavor flavor) {
  switch (flavor) {
    case Flavor::moments: return "moments";
    case Flavor::classical: return "classical";
    case Flavor::free: return "free";
    case Flavor::boolean: return "boolean";
  }
  return "?";
}

std::optional<Flavor> parse_flavor(std::string_view name) {
  for (const auto f : {Flavor::moments, Flavor::classical, Flavor::free, Flavor::boolean}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

LatticeKind lattice_of(Flavor cumulant_flavor) {
  switch (cumulant_flavor) {
    case Flavor::classical: return LatticeKind::full;
    case Flavor::free: return LatticeKind::noncrossing;
    case Flavor::boolean: return LatticeKind::interval;
    case Flavor::moments: break;
  }
  throw std::invalid_argument("moments have no cumulant lattice");
}

Rational factorial(std::size_t n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

}  // namespace ncpart
