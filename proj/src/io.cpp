#include "ncpart/io.hpp"

#include <fstream>
#include <stdexcept>

namespace ncpart {

using nlohmann::json;

json to_json(const Rational& q) { return to_string(q); }

json to_json(const Polynomial& p) {
  json out = json::object();
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (sgn(p.coeffs()[k]) != 0) out[std::to_string(k)] = to_string(p.coeffs()[k]);
  }
  return out;
}

json to_json(const Check& c) {
  return json{{"identity", c.identity}, {"n", c.n},     {"seed", c.seed},
              {"lhs", c.lhs},           {"rhs", c.rhs}, {"equal", c.equal}};
}

json to_json(const VerifyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return json{{"max_n", r.max_n},
              {"trials", r.trials},
              {"seed", r.seed},
              {"all_equal", r.all_equal()},
              {"checks", std::move(checks)}};
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(j.dump());
  throw std::invalid_argument("expected a rational string, got " + j.dump());
}

Polynomial polynomial_from_json(const json& j) {
  if (!j.is_object()) return Polynomial(rational_from_json(j));
  Polynomial out;
  for (const auto& [key, value] : j.items()) {
    std::size_t exponent = 0;
    try {
      std::size_t used = 0;
      exponent = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad exponent \"" + key + "\" in polynomial");
    }
    out += Polynomial::monomial(exponent, rational_from_json(value));
  }
  return out;
}

Sequence<Rational> sequence_from_json(const json& j, Flavor flavor) {
  if (!j.is_array()) throw std::invalid_argument("sequence must be a JSON array");
  Sequence<Rational> out{flavor, {}};
  for (const auto& item : j) out.values.push_back(rational_from_json(item));
  return out;
}

Sequence<Rational> read_sequence_file(const std::filesystem::path& path, Flavor flavor) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
  return sequence_from_json(j, flavor);
}

}  // namespace ncpart
