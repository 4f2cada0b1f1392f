// orbitcensus: batch verification of small-group censuses, coset bounds,
// star-inequality threshold scans, and regular-orbit scans.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "orbitcensus/census.hpp"
#include "orbitcensus/models.hpp"
#include "orbitcensus/orbitscan.hpp"
#include "orbitcensus/starcheck.hpp"
#include "orbitcensus/verify.hpp"

namespace oc = orbitcensus;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

void print_json(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

oc::Model build_model(const std::string& name, std::uint32_t q,
                      std::uint32_t m) {
  oc::ModelParams params;
  params.q = q;
  params.m = m;
  return oc::make_model(name, params);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbitcensus: exact censuses and star-inequality scans of "
               "small matrix groups"};
  app.require_subcommand(1);

  // census
  std::string census_model;
  std::string census_genfile;
  std::uint32_t census_q = 0, census_m = 0;
  bool census_json = false;
  CLI::App* census_cmd =
      app.add_subcommand("census", "element-order census of a registry model");
  census_cmd->add_option("model", census_model, "registry model name");
  census_cmd->add_option("--q", census_q, "model parameter q");
  census_cmd->add_option("--m", census_m, "model parameter m");
  census_cmd->add_option("--genfile", census_genfile,
                         "census a group loaded from a generator file");
  census_cmd->add_flag("--json", census_json, "emit JSON");

  // models
  bool models_json = false;
  CLI::App* models_cmd =
      app.add_subcommand("models", "list registry models with expected orders");
  models_cmd->add_flag("--json", models_json, "emit JSON");

  // star check / star scan
  CLI::App* star_cmd = app.add_subcommand("star", "star-inequality engine");
  star_cmd->require_subcommand(1);

  unsigned ck_e = 0, ck_b = 1, ck_m = 1;
  std::string ck_w, ck_variant = "corrected";
  bool ck_json = false;
  CLI::App* star_check = star_cmd->add_subcommand(
      "check", "evaluate the star inequality at one (W, b, m)");
  star_check->add_option("--e", ck_e, "case: 2,3,4,8,9,16")->required();
  star_check->add_option("--w", ck_w, "|W|, a prime power")->required();
  star_check->add_option("--b", ck_b, "b >= 1");
  star_check->add_option("--m", ck_m, "m with |W| = r^m");
  star_check->add_option("--variant", ck_variant, "paper|corrected");
  star_check->add_flag("--json", ck_json, "emit JSON");

  unsigned sc_e = 0, sc_b = 1;
  std::string sc_mode = "prime", sc_variant = "corrected", sc_max;
  bool sc_json = false;
  CLI::App* star_scan = star_cmd->add_subcommand(
      "scan", "scan all admissible |W| up to a cap, reporting failures");
  star_scan->add_option("--e", sc_e, "case: 2,3,4,8,9,16")->required();
  star_scan->add_option("--b", sc_b, "b >= 1");
  star_scan->add_option("--mode", sc_mode, "prime|prime-power");
  star_scan->add_option("--max", sc_max, "scan cap")->required();
  star_scan->add_option("--variant", sc_variant, "paper|corrected");
  star_scan->add_flag("--json", sc_json, "emit JSON");

  // orbit
  std::string orbit_model;
  std::uint32_t orbit_q = 0, orbit_m = 0;
  bool orbit_json = false;
  CLI::App* orbit_cmd = app.add_subcommand(
      "orbit", "brute-force regular-orbit scan of a registry model");
  orbit_cmd->add_option("model", orbit_model, "registry model name")
      ->required();
  orbit_cmd->add_option("--q", orbit_q, "model parameter q");
  orbit_cmd->add_option("--m", orbit_m, "model parameter m");
  orbit_cmd->add_flag("--json", orbit_json, "emit JSON");

  // verify
  std::vector<std::string> verify_names;
  bool verify_json = false;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "run named golden-value checks (or `all`)");
  verify_cmd
      ->add_option("checks", verify_names,
                   "all | lemma210 | lemma212 | lemma213-small | "
                   "star-thresholds | coset-bounds | ...")
      ->required();
  verify_cmd->add_flag("--json", verify_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (census_cmd->parsed()) {
      oc::CensusReport rep;
      std::string label;
      if (!census_genfile.empty()) {
        oc::GeneratorFile gf = oc::load_generators_file(census_genfile);
        oc::FiniteGroup g =
            oc::FiniteGroup::closure(gf.mod, gf.generators, 1u << 20);
        rep = oc::census(g);
        label = census_genfile;
      } else if (!census_model.empty()) {
        oc::Model m = build_model(census_model, census_q, census_m);
        rep = oc::census(m.group);
        label = m.name;
      } else {
        std::cerr << "census: need a model name or --genfile\n";
        return kExitUsage;
      }
      if (census_json) {
        print_json(rep.to_json());
      } else {
        std::cout << "census of " << label << "\n" << rep.to_json().dump(2)
                  << "\n";
      }
      return kExitPass;
    }

    if (models_cmd->parsed()) {
      if (models_json) {
        nlohmann::ordered_json arr(nlohmann::ordered_json::value_t::array);
        for (const oc::ModelInfo& info : oc::model_registry()) {
          nlohmann::ordered_json j;
          j["name"] = info.name;
          j["parameters"] = info.params_help;
          j["expected_order"] = info.expected_order;
          arr.push_back(j);
        }
        print_json(arr);
      } else {
        for (const oc::ModelInfo& info : oc::model_registry())
          std::cout << info.name
                    << (info.parameterized ? "  " + info.params_help : "")
                    << "  order " << info.expected_order << "\n";
      }
      return kExitPass;
    }

    if (star_check->parsed()) {
      oc::StarCase c =
          oc::builtin_case(ck_e, oc::variant_from_name(ck_variant));
      oc::BigInt W(ck_w);
      if (star_check->count("--m") == 0) {
        auto pp = oc::prime_power(W);
        if (pp) ck_m = static_cast<unsigned>(pp->second);
      }
      oc::StarVerdict v = oc::evaluate_star(c, W, ck_b, ck_m);
      if (ck_json)
        print_json(v.to_json());
      else
        std::cout << "star e=" << ck_e << " W=" << ck_w << " b=" << ck_b
                  << " m=" << ck_m << " [" << oc::variant_name(c.variant)
                  << "]: "
                  << (v.status == oc::StarStatus::holds
                          ? "holds"
                          : v.status == oc::StarStatus::fails
                                ? "fails"
                                : "indeterminate")
                  << "  lhs<=" << oc::to_decimal(v.lhs_upper)
                  << "  rhs=" << oc::to_decimal(v.rhs) << "\n";
      return v.status == oc::StarStatus::holds ? kExitPass : kExitCheckFailed;
    }

    if (star_scan->parsed()) {
      oc::ScanMode mode;
      if (sc_mode == "prime")
        mode = oc::ScanMode::prime;
      else if (sc_mode == "prime-power")
        mode = oc::ScanMode::prime_power;
      else
        throw std::invalid_argument("scan: mode must be prime|prime-power");
      oc::ScanResult r = oc::scan_thresholds(
          sc_e, oc::variant_from_name(sc_variant), sc_b, mode,
          oc::BigInt(sc_max));
      if (sc_json) {
        print_json(r.to_json());
      } else {
        std::cout << "star scan e=" << sc_e << " b=" << sc_b << " mode="
                  << sc_mode << " cap=" << sc_max << " ["
                  << oc::variant_name(r.variant) << "]\n"
                  << "failing:";
        for (const oc::BigInt& w : r.failing)
          std::cout << " " << oc::to_decimal(w);
        std::cout << "\nminimal_pass (no failures above): "
                  << oc::to_decimal(r.minimal_pass) << "\n";
        if (!r.indeterminate.empty()) {
          std::cout << "indeterminate:";
          for (const oc::BigInt& w : r.indeterminate)
            std::cout << " " << oc::to_decimal(w);
          std::cout << "\n";
        }
      }
      return kExitPass;
    }

    if (orbit_cmd->parsed()) {
      oc::Model m = build_model(orbit_model, orbit_q, orbit_m);
      oc::OrbitVerdict v = oc::regular_orbit_scan(m.group);
      if (orbit_json) {
        print_json(v.to_json());
      } else {
        std::cout << "orbit scan of " << m.name << ": "
                  << (v.has_regular_orbit ? "regular orbit exists"
                                          : "no regular orbit")
                  << "  free=" << oc::to_decimal(v.free_vector_count)
                  << "  covered=" << oc::to_decimal(v.covered_count) << "\n";
      }
      return kExitPass;
    }

    if (verify_cmd->parsed()) {
      oc::RunReport rep = oc::run_verify(verify_names);
      if (verify_json)
        print_json(rep.to_json());
      else
        std::cout << rep.to_text();
      return rep.ok() ? kExitPass : kExitCheckFailed;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
