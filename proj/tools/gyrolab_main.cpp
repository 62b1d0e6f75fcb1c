#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "gyrolab/checks.hpp"
#include "gyrolab/json.hpp"
#include "gyrolab/registry.hpp"
#include "gyrolab/subgyro.hpp"
#include "gyrolab/topology.hpp"

namespace {

using gyrolab::json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  double tolerance = 1e-9;
  bool as_json = false;
  std::optional<std::string> data_dir;
  int max_n = 256;
};

json mode_json(const gyrolab::Mode& mode) {
  if (const auto* s = std::get_if<gyrolab::Sampled>(&mode))
    return json{{"kind", "sampled"}, {"count", s->count}, {"seed", s->seed}};
  return json{{"kind", "exhaustive"}};
}

// Sampled runs must name their seed explicitly; a sampled request without one
// is a usage error, not a default.
gyrolab::Mode pick_mode(const gyrolab::GyrogroupContract& model,
                        const CommonOpts& opts) {
  if (opts.samples) {
    if (!opts.seed)
      throw CLI::ValidationError("--samples requires an explicit --seed");
    return gyrolab::Sampled{*opts.samples, *opts.seed};
  }
  if (!model.is_finite()) return gyrolab::Sampled{1000, opts.seed.value_or(0)};
  if (model.table().size() > opts.max_n)
    throw CLI::ValidationError(
        "carrier too large for exhaustive mode; pass --samples/--seed or raise "
        "--max-n");
  return gyrolab::Exhaustive{};
}

void emit(const json& out, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_verify(const std::string& input, const CommonOpts& opts) {
  auto model = gyrolab::resolve_model(input, {opts.tolerance, opts.tolerance},
                                      opts.data_dir);
  const auto mode = pick_mode(model, opts);
  const auto axioms = gyrolab::check_axioms(model, mode);
  const auto identities = gyrolab::check_identities(model, mode);
  const auto group = gyrolab::is_group(model, mode);
  const bool overall = axioms.overall() && identities.overall();

  json gj{{"is_group", group.group}, {"witness", nullptr}};
  if (group.witness) {
    json w = json::array();
    for (const auto& e : *group.witness) w.push_back(e.to_json());
    gj["witness"] = std::move(w);
  }
  json out{{"command", "verify"},     {"model", model.name},
           {"mode", mode_json(mode)}, {"tolerance", opts.tolerance},
           {"axioms", axioms.to_json()}, {"identities", identities.to_json()},
           {"group", std::move(gj)},  {"overall", overall}};

  std::string text = "model: " + model.name + "  mode: " + gyrolab::mode_str(mode) +
                     "\n-- axioms --\n" + axioms.to_text() + "-- identities --\n" +
                     identities.to_text() +
                     (group.group ? "group: yes (associative)\n"
                                  : "group: no, witness " +
                                        (*group.witness)[0].str() + " " +
                                        (*group.witness)[1].str() + " " +
                                        (*group.witness)[2].str() + "\n");
  emit(out, opts.as_json, text);
  return overall ? kExitPass : kExitCheckFailed;
}

int cmd_decompose(const std::string& input, const std::optional<std::string>& enum_csv,
                  const CommonOpts& opts) {
  auto model = gyrolab::resolve_model(input, {opts.tolerance, opts.tolerance},
                                      opts.data_dir);
  if (!model.is_finite())
    throw CLI::ValidationError("decompose requires a finite model");
  const auto& table = model.table();
  std::vector<int> enumeration;
  if (enum_csv) {
    std::size_t pos = 0;
    const std::string& s = *enum_csv;
    while (pos <= s.size()) {
      auto comma = s.find(',', pos);
      if (comma == std::string::npos) comma = s.size();
      enumeration.push_back(std::stoi(s.substr(pos, comma - pos)));
      pos = comma + 1;
    }
  }
  const auto dec = gyrolab::canonical_decomposition(table, enumeration);
  const auto report = gyrolab::verify_decomposition(table, dec);
  json out{{"command", "decompose"},
           {"model", model.name},
           {"decomposition", dec.to_json()},
           {"report", report.to_json()},
           {"overall", report.overall()}};
  std::string text = "model: " + model.name + "\n" + dec.to_json().dump(2) + "\n" +
                     report.to_text();
  emit(out, opts.as_json, text);
  return report.overall() ? kExitPass : kExitCheckFailed;
}

int cmd_topo(const std::string& input, const std::optional<std::string>& gyro,
             const std::vector<std::string>& base_literals, int bound,
             const CommonOpts& opts) {
  auto topology = gyrolab::resolve_topology(input);
  json out{{"command", "topo"}, {"input", input}};
  std::optional<gyrolab::TopoGyroModel> model;
  if (gyro) {
    auto g = gyrolab::resolve_model(*gyro, {opts.tolerance, opts.tolerance},
                                    opts.data_dir);
    if (!g.is_finite())
      throw CLI::ValidationError("topo pairing requires a finite model");
    std::optional<std::vector<std::uint64_t>> base;
    if (!base_literals.empty()) {
      base.emplace();
      for (const auto& lit : base_literals)
        base->push_back(gyrolab::Subset::parse(topology.n(), lit).to_mask());
    }
    model = gyrolab::make_topo_model(
        std::make_shared<gyrolab::FiniteGyrogroup>(g.table()), topology, base);
  }
  const json report =
      gyrolab::property_report(model ? model->topology : topology, bound,
                               model ? &*model : nullptr);
  out["report"] = report;
  emit(out, opts.as_json, report.dump(2) + "\n");
  return kExitPass;
}

int cmd_witness(const std::string& input, std::uint64_t budget,
                const CommonOpts& opts) {
  auto model = gyrolab::resolve_model(input, {opts.tolerance, opts.tolerance},
                                      opts.data_dir);
  const auto wit = gyrolab::nonassoc_witness(model, budget, opts.seed.value_or(0));
  json out{{"command", "witness"},
           {"model", model.name},
           {"budget", budget},
           {"found", wit.has_value()},
           {"witness", nullptr}};
  std::string text;
  if (wit) {
    json w = json::array();
    for (const auto& e : *wit) w.push_back(e.to_json());
    out["witness"] = w;
    text = "associativity fails at x=" + (*wit)[0].str() + " y=" + (*wit)[1].str() +
           " z=" + (*wit)[2].str() + "\n";
  } else {
    text = "none found (budget " + std::to_string(budget) + ")\n";
  }
  emit(out, opts.as_json, text);
  return kExitPass;
}

int cmd_cover(const std::string& input, const std::string& set_literal,
              const CommonOpts& opts) {
  auto model = gyrolab::resolve_model(input, {opts.tolerance, opts.tolerance},
                                      opts.data_dir);
  if (!model.is_finite()) throw CLI::ValidationError("cover requires a finite model");
  const auto& table = model.table();
  const auto U = gyrolab::Subset::parse(table.size(), set_literal);
  const auto cert = gyrolab::covering_number(table, U);
  json out{{"command", "cover"},
           {"model", model.name},
           {"certificate", cert.to_json()}};
  emit(out, opts.as_json,
       "minimal cover size " + std::to_string(cert.size) + " with A=" + cert.A.str() +
           (cert.exact ? " (exact)\n" : " (greedy upper bound)\n"));
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gyrolab: exact and sampled verification of gyrogroup models"};
  app.require_subcommand(1);
  CommonOpts opts;

  std::string input;
  std::optional<std::string> enumeration;
  std::optional<std::string> gyro;
  std::vector<std::string> base_literals;
  std::string set_literal;
  std::uint64_t budget = 100000;
  int bound = 20;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--samples", opts.samples, "sampled mode case count");
    cmd->add_option("--seed", opts.seed, "RNG seed for sampled mode");
    cmd->add_option("--tolerance", opts.tolerance, "numeric tolerance (default 1e-9)");
    cmd->add_flag("--json", opts.as_json, "emit the JSON report");
    cmd->add_option("--data", opts.data_dir, "data directory (k16.gyro lookup)");
    cmd->add_option("--max-n", opts.max_n,
                    "largest carrier allowed in exhaustive mode (default 256)");
  };

  auto* verify = app.add_subcommand("verify", "axiom and identity suites");
  verify->add_option("model", input, "builtin name or .gyro path")->required();
  add_common(verify);

  auto* decompose = app.add_subcommand("decompose", "canonical decomposition");
  decompose->add_option("model", input)->required();
  decompose->add_option("--enumeration", enumeration, "comma-separated permutation");
  add_common(decompose);

  auto* topo = app.add_subcommand("topo", "finite topology property report");
  topo->add_option("input", input, "builtin name or .topo path")->required();
  topo->add_option("--gyro", gyro, "pair with a finite model for continuity");
  topo->add_option("--base", base_literals,
                   "candidate neighborhood base member (repeatable)");
  topo->add_option("--bound", bound, "subset-scan carrier bound (default 20)");
  add_common(topo);

  auto* witness = app.add_subcommand("witness", "associativity counterexample");
  witness->add_option("model", input)->required();
  witness->add_option("--budget", budget, "random triples to try (continuous)");
  add_common(witness);

  auto* cover = app.add_subcommand("cover", "minimal covering certificate");
  cover->add_option("model", input)->required();
  cover->add_option("--set", set_literal, "subset U with 0, e.g. 0,1 or 0x3")
      ->required();
  add_common(cover);

  try {
    app.parse(argc, argv);
    if (verify->parsed()) return cmd_verify(input, opts);
    if (decompose->parsed()) return cmd_decompose(input, enumeration, opts);
    if (topo->parsed()) return cmd_topo(input, gyro, base_literals, bound, opts);
    if (witness->parsed()) return cmd_witness(input, budget, opts);
    if (cover->parsed()) return cmd_cover(input, set_literal, opts);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
