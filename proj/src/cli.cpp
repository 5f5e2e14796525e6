#include "ncpart/cli.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "ncpart/cumulants.hpp"
#include "ncpart/io.hpp"
#include "ncpart/theorem.hpp"

namespace ncpart::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DistributionSpec {
  enum class Name { gaussian, poisson, custom } name = Name::gaussian;
  std::string rate;  // rational text or "lambda"
  std::string moments_file;
  std::string text;
};

DistributionSpec parse_distribution(const std::string& text, const std::string& moments_file) {
  DistributionSpec spec;
  spec.text = text;
  spec.moments_file = moments_file;
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const std::string rate = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (name == "gaussian") {
    if (colon != std::string::npos) throw UsageError("gaussian takes no parameter");
    spec.name = DistributionSpec::Name::gaussian;
  } else if (name == "poisson") {
    if (rate.empty()) throw UsageError("poisson needs a rate: --dist poisson:RATE");
    spec.name = DistributionSpec::Name::poisson;
    spec.rate = rate;
  } else if (name == "custom") {
    if (colon != std::string::npos) throw UsageError("custom takes no parameter; use --moments FILE");
    if (moments_file.empty()) throw UsageError("custom distribution needs --moments FILE");
    spec.name = DistributionSpec::Name::custom;
  } else {
    throw UsageError("unknown distribution \"" + name + "\" (gaussian, poisson:RATE, custom)");
  }
  if (spec.name != DistributionSpec::Name::custom && !moments_file.empty()) {
    throw UsageError("--moments only applies to --dist custom");
  }
  return spec;
}

Flavor flavor_option(const std::string& name) {
  if (const auto f = parse_flavor(name)) return *f;
  throw UsageError("unknown flavor \"" + name + "\" (moments, classical, free, boolean)");
}

Route route_option(const std::string& name) {
  if (name == "recursive") return Route::recursive;
  if (name == "lattice") return Route::lattice;
  if (name == "series") return Route::series;
  throw UsageError("unknown route \"" + name + "\" (recursive, lattice, series)");
}

template <Ring R>
void emit_sequence(const Sequence<R>& result, const DistributionSpec& dist, Flavor from, bool as_json,
                   std::ostream& out) {
  if (as_json) {
    out << json{{"distribution", dist.text},
                {"from", to_string(from)},
                {"to", to_string(result.flavor)},
                {"order", result.order()},
                {"values", to_json(result)}}
               .dump()
        << '\n';
    return;
  }
  for (std::size_t n = 1; n <= result.order(); ++n) out << n << '\t' << to_string(result.at(n)) << '\n';
}

template <Ring R>
void run_transform(const Sequence<R>& native, const DistributionSpec& dist, Flavor from, Flavor to, Route route,
                   bool as_json, std::ostream& out) {
  const auto source = transform(native, from, route);
  emit_sequence(transform(source, to, route), dist, from, as_json, out);
}

int cmd_transform(const std::string& dist_text, const std::string& moments_file, const std::string& from_text,
                  const std::string& to_text, std::size_t order, const std::string& route_text, bool as_json,
                  std::ostream& out) {
  if (order < 1 || order > kMaxTransformOrder) {
    throw UsageError("--order must be between 1 and " + std::to_string(kMaxTransformOrder));
  }
  const auto dist = parse_distribution(dist_text, moments_file);
  const Flavor from = flavor_option(from_text);
  const Flavor to = flavor_option(to_text);
  const Route route = route_option(route_text);

  switch (dist.name) {
    case DistributionSpec::Name::gaussian:
      run_transform(gaussian<Rational>(order), dist, from, to, route, as_json, out);
      break;
    case DistributionSpec::Name::poisson:
      if (dist.rate == "lambda") {
        run_transform(poisson(Polynomial::lambda(), order), dist, from, to, route, as_json, out);
      } else {
        run_transform(poisson(parse_rational(dist.rate), order), dist, from, to, route, as_json, out);
      }
      break;
    case DistributionSpec::Name::custom: {
      // The file holds the sequence in the --from flavor.
      auto seq = read_sequence_file(dist.moments_file, from);
      if (seq.order() < order) {
        throw std::invalid_argument(dist.moments_file + " has " + std::to_string(seq.order()) +
                                    " values, --order needs " + std::to_string(order));
      }
      seq.values.resize(order);
      emit_sequence(transform(seq, to, route), dist, from, as_json, out);
      break;
    }
  }
  return kExitOk;
}

bool is_pairing_kind(PartitionKind kind) {
  return kind == PartitionKind::pairing || kind == PartitionKind::connected_pairing;
}

int cmd_count(const std::string& kind_text, std::size_t max_n, bool as_json, std::ostream& out) {
  const auto kind = parse_partition_kind(kind_text);
  if (!kind) throw UsageError("unknown partition family \"" + kind_text + "\"");
  const std::size_t limit = is_pairing_kind(*kind) ? kMaxPairingCount : kMaxCount;
  if (max_n < 1) throw UsageError("--max must be at least 1");
  if (max_n > limit) {
    throw UsageError("--max " + std::to_string(max_n) + " refused: " + std::string(to_string(*kind)) +
                     " enumeration is limited to n <= " + std::to_string(limit) +
                     " (the number of set partitions grows like the Bell numbers)");
  }
  json rows = json::array();
  for (std::size_t n = 1; n <= max_n; ++n) {
    if (is_pairing_kind(*kind) && n % 2 != 0) continue;
    const auto count = kernels::parallel_count(n, *kind);
    if (as_json) {
      rows.push_back(json{{"n", n}, {"count", count}});
    } else {
      out << n << '\t' << count << '\n';
    }
  }
  if (as_json) out << json{{"kind", to_string(*kind)}, {"rows", std::move(rows)}}.dump() << '\n';
  return kExitOk;
}

int cmd_verify(std::size_t max_n, std::size_t trials, std::uint64_t seed, bool inject_fault, std::ostream& out,
               std::ostream& err) {
  if (max_n < 1 || max_n > kMaxVerify) throw UsageError("--max-n must be between 1 and " + std::to_string(kMaxVerify));
  if (trials < 1) throw UsageError("--trials must be at least 1");
  const auto report = verify(max_n, trials, seed, inject_fault);
  out << to_json(report).dump() << '\n';
  if (report.all_equal()) return kExitOk;
  for (const auto& c : report.checks) {
    if (!c.equal) {
      err << "verification failed: " << c.identity << " n=" << c.n << " seed=" << c.seed << " lhs=" << c.lhs
          << " rhs=" << c.rhs << '\n';
    }
  }
  return kExitVerifyFailed;
}

int cmd_blockpoly(std::size_t max_n, bool as_json, std::ostream& out) {
  if (max_n < 1 || max_n > kMaxBlockPolynomial) {
    throw UsageError("--max must be between 1 and " + std::to_string(kMaxBlockPolynomial));
  }
  json rows = json::array();
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto poly = block_polynomial(n);
    const auto at_one = poly.evaluate(1);
    if (as_json) {
      rows.push_back(json{{"n", n}, {"polynomial", to_json(poly)}, {"at_one", to_json(at_one)}});
    } else {
      out << n << '\t' << to_string(poly) << '\t' << to_string(at_one) << '\n';
    }
  }
  if (as_json) out << json{{"rows", std::move(rows)}}.dump() << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact moment-cumulant transforms and connected-partition enumeration", "ncpart"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  std::string dist_text;
  std::string moments_file;
  std::string from_text = "classical";
  std::string to_text = "moments";
  std::string route_text = "recursive";
  std::size_t order = 0;
  auto* transform_cmd = app.add_subcommand("transform", "Convert a distribution between moment/cumulant flavors");
  transform_cmd->add_option("--dist", dist_text, "gaussian | poisson:RATE (rational or 'lambda') | custom")
      ->required();
  transform_cmd->add_option("--moments", moments_file, "JSON array of rationals for --dist custom");
  transform_cmd->add_option("--from", from_text, "Input flavor")->capture_default_str();
  transform_cmd->add_option("--to", to_text, "Output flavor")->capture_default_str();
  transform_cmd->add_option("--order", order, "Number of terms (1..16)")->required();
  transform_cmd->add_option("--route", route_text, "recursive | lattice | series")->capture_default_str();
  transform_cmd->add_flag("--json", as_json, "Machine-readable output");

  std::string kind_text;
  std::size_t max_n = 0;
  auto* count_cmd = app.add_subcommand("count", "Count a partition family for n = 1..max");
  count_cmd->add_option("kind", kind_text,
                        "all | noncrossing | interval | pairing | connected | irreducible | connected-pairing | "
                        "nc-irreducible")
      ->required();
  count_cmd->add_option("--max", max_n, "Largest n")->required();
  count_cmd->add_flag("--json", as_json, "Machine-readable output");

  std::size_t verify_max = 0;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  bool inject_fault = false;
  auto* verify_cmd = app.add_subcommand("verify", "Check the connected/irreducible cumulant formulas on random input");
  verify_cmd->add_option("--max-n", verify_max, "Largest n (1..9)")->required();
  verify_cmd->add_option("--trials", trials, "Random sequences per n")->capture_default_str();
  verify_cmd->add_option("--seed", seed, "Seed of the first trial")->capture_default_str();
  verify_cmd->add_flag("--json", as_json, "Accepted for uniformity; the report is always JSON");
  verify_cmd->add_flag("--inject-fault", inject_fault)->group("");

  std::size_t poly_max = 0;
  auto* poly_cmd = app.add_subcommand("blockpoly", "Block-count polynomials of connected partitions");
  poly_cmd->add_option("--max", poly_max, "Largest n (1..10)")->required();
  poly_cmd->add_flag("--json", as_json, "Machine-readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (transform_cmd->parsed()) {
      return cmd_transform(dist_text, moments_file, from_text, to_text, order, route_text, as_json, out);
    }
    if (count_cmd->parsed()) return cmd_count(kind_text, max_n, as_json, out);
    if (verify_cmd->parsed()) return cmd_verify(verify_max, trials, seed, inject_fault, out, err);
    if (poly_cmd->parsed()) return cmd_blockpoly(poly_max, as_json, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ncpart::cli
