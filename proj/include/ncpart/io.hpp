#pragma once

// JSON forms of scalars, sequences and verification reports.
//
//   Rational    "3/2", "-4", "0"
//   Polynomial  {"1": "1", "3": "-1/2"}  exponent -> coefficient, zeros omitted
//   Sequence    array of v_1..v_N in one of the forms above

#include <filesystem>
#include <string>

#include <json.hpp>

#include "ncpart/cumulants.hpp"
#include "ncpart/scalar.hpp"
#include "ncpart/theorem.hpp"

namespace ncpart {

nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const Polynomial& p);

template <Ring R>
nlohmann::json to_json(const Sequence<R>& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : s.values) out.push_back(to_json(v));
  return out;
}

nlohmann::json to_json(const Check& c);
nlohmann::json to_json(const VerifyReport& r);

Rational rational_from_json(const nlohmann::json& j);
Polynomial polynomial_from_json(const nlohmann::json& j);

/// Array of rational strings, v_1 first. Throws std::invalid_argument.
Sequence<Rational> sequence_from_json(const nlohmann::json& j, Flavor flavor);

/// Reads a sequence file. Throws std::runtime_error if unreadable and
/// std::invalid_argument if malformed.
Sequence<Rational> read_sequence_file(const std::filesystem::path& path, Flavor flavor);

}  // namespace ncpart
