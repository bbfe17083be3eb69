#include "pfcirc/acceptance.hpp"
#include "pfcirc/certs.hpp"
#include "pfcirc/circuit.hpp"
#include "pfcirc/invariants.hpp"
#include "pfcirc/json_io.hpp"
#include "pfcirc/swapsub.hpp"
#include "pfcirc/varieties.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using pfcirc::Scalar;
using json = nlohmann::ordered_json;

struct RunReport {
  std::vector<std::string> command;
  std::string inputs_digest = "0";
  uint64_t seed = 0;
  json results = json::object();
  json verdicts = json::object();
  double wall_ms = 0;

  bool all_pass() const {
    for (const auto& [name, ok] : verdicts.items())
      if (!ok.get<bool>()) return false;
    return true;
  }
};

struct Options {
  bool as_json = false;
  bool timings = false;
  uint64_t seed = 20260811;
};

uint64_t fnv1a(const std::string& bytes, uint64_t h = 1469598103934665603ull) {
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

std::string read_file(const std::string& path, uint64_t& digest) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string bytes = buf.str();
  digest = fnv1a(bytes, digest ? digest : 1469598103934665603ull);
  return bytes;
}

json load_json(const std::string& path, uint64_t& digest) {
  return json::parse(read_file(path, digest));
}

std::string fmt_complex(const Scalar& s) {
  std::ostringstream os;
  auto z = s.to_complex();
  os << z.real();
  if (z.imag() != 0) os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

json scalar_entry(const Scalar& s) {
  auto z = s.to_complex();
  return json{{"exact", s.to_string()}, {"float", {z.real(), z.imag()}}};
}

void emit(const RunReport& rep, const Options& opt) {
  if (opt.as_json) {
    json out{{"command", rep.command},
             {"inputs_digest", rep.inputs_digest},
             {"seed", rep.seed},
             {"results", rep.results},
             {"verdicts", rep.verdicts},
             {"ok", rep.all_pass()}};
    if (opt.timings) out["wall_ms"] = rep.wall_ms;
    std::cout << out.dump(2) << "\n";
  } else if (opt.timings) {
    std::cout << "wall clock: " << rep.wall_ms << " ms\n";
  }
}

pfcirc::SwapSolution solution_from_flags(bool use_reference, const std::string& params, pfcirc::Rng& rng) {
  if (use_reference || params.empty()) return pfcirc::reference_solution();
  std::array<Scalar, 4> p;
  std::stringstream ss(params);
  std::string item;
  for (int k = 0; k < 4; k++) {
    if (!std::getline(ss, item, ',')) throw std::invalid_argument("--params needs four scalars");
    p[k] = Scalar::parse(item);
  }
  (void)rng;
  return pfcirc::sample_solution(p);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pfaffian circuit toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.as_json, "machine-readable report on stdout");
  app.add_flag("--timings", opt.timings, "include wall-clock timing in the output");
  app.add_option("--seed", opt.seed, "seed for randomized commands");

  // eval
  std::string eval_file, eval_order = "auto";
  bool eval_oracle = false;
  CLI::App* eval = app.add_subcommand("eval", "evaluate a circuit file");
  eval->add_option("file", eval_file, "circuit JSON")->required();
  eval->add_flag("--oracle", eval_oracle, "also run the brute-force contraction");
  eval->add_option("--order", eval_order, "'auto' or an edge-order JSON file");

  // member
  std::string member_file, member_side;
  bool member_cone = false;
  CLI::App* member = app.add_subcommand("member", "Pfaffian variety membership");
  member->add_option("file", member_file, "tensor JSON")->required();
  member->add_option("--side", member_side, "gate|cogate")->required();
  member->add_flag("--cone", member_cone, "test the cone (no normalization)");

  // invariants
  std::string inv_file;
  bool inv_dual = false;
  CLI::App* inv = app.add_subcommand("invariants", "SL(2)^4 invariant values");
  inv->add_option("file", inv_file, "tensor JSON")->required();
  inv->add_flag("--dual", inv_dual, "covector route through the duality map");

  // swap-demo
  bool demo_reference = false;
  std::string demo_params;
  int demo_trials = 5;
  CLI::App* demo = app.add_subcommand("swap-demo", "SWAP substitution demonstration");
  demo->add_flag("--reference-solution", demo_reference, "use the built-in reference basis change");
  demo->add_option("--params", demo_params, "chart parameters b,c,f,d (exact scalars)");
  demo->add_option("--trials", demo_trials, "number of host circuits");

  // swap-obstruction
  int obs_k = 2, obs_trials = 5;
  CLI::App* obs = app.add_subcommand("swap-obstruction", "multi-SWAP obstruction report");
  obs->add_option("--k", obs_k, "number of SWAP factors (2 or 3)");
  obs->add_option("--trials", obs_trials, "number of sampled solution tuples");

  // cert
  std::string cert_system = "swap-cogate", cert_dump;
  int cert_degree = 0;
  CLI::App* cert = app.add_subcommand("cert", "ideal membership certificate");
  cert->add_option("--system", cert_system, "only 'swap-cogate' is built in");
  cert->add_option("--degree", cert_degree, "single degree bound instead of the ladder");
  cert->add_option("--dump", cert_dump, "write the multipliers to this file");

  // selftest
  CLI::App* selftest = app.add_subcommand("selftest", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  RunReport rep;
  for (int i = 0; i < argc; i++) rep.command.push_back(argv[i]);
  rep.seed = opt.seed;
  uint64_t digest = 0;
  auto t0 = std::chrono::steady_clock::now();

  try {
    if (*eval) {
      pfcirc::Circuit c = pfcirc::circuit_from_json(load_json(eval_file, digest));
      Scalar value;
      if (eval_order == "auto") {
        value = pfcirc::evaluate(c);
      } else {
        pfcirc::EdgeOrder o = pfcirc::edge_order_from_json(load_json(eval_order, digest));
        value = pfcirc::evaluate_with_order(c, o, false);
      }
      rep.results["value"] = scalar_entry(value);
      if (!opt.as_json) std::cout << "value: " << value << "  (~ " << fmt_complex(value) << ")\n";
      if (eval_oracle) {
        Scalar brute = pfcirc::evaluate_bruteforce(c);
        rep.results["oracle"] = scalar_entry(brute);
        rep.verdicts["oracle_equal"] = value == brute;
        if (!opt.as_json)
          std::cout << "oracle: " << brute << "\nequal: " << (value == brute ? "yes" : "NO")
                    << "\n";
      }
    } else if (*member) {
      pfcirc::QubitTensor t = pfcirc::tensor_from_json(load_json(member_file, digest));
      if (member_side != "gate" && member_side != "cogate")
        throw std::invalid_argument("--side must be gate or cogate");
      pfcirc::MembershipReport m = member_side == "gate"
                                       ? pfcirc::check_gate_membership(t, member_cone)
                                       : pfcirc::check_cogate_membership(t, member_cone);
      rep.results["member"] = m.member;
      if (!m.member) {
        rep.results["reason"] = m.reason;
        if (m.violated) rep.results["violated_relation"] = m.violated->describe();
        if (m.violation_value) rep.results["violation_value"] = m.violation_value->to_string();
      }
      rep.verdicts["member"] = m.member;
      if (!opt.as_json) {
        std::cout << (m.member ? "member of the variety\n" : "not a member: " + m.reason + "\n");
        if (m.violation_value) std::cout << "violation value: " << *m.violation_value << "\n";
      }
    } else if (*inv) {
      pfcirc::QubitTensor t = pfcirc::tensor_from_json(load_json(inv_file, digest));
      pfcirc::InvariantVector v =
          inv_dual ? pfcirc::dual_invariants(t) : pfcirc::evaluate_invariants(t);
      const char* names[] = {"H", "detL", "detM", "detB"};
      const Scalar* vals[] = {&v.H, &v.det_l, &v.det_m, &v.det_b};
      for (int k = 0; k < 4; k++) {
        rep.results[names[k]] = scalar_entry(*vals[k]);
        if (!opt.as_json)
          std::cout << names[k] << " = " << *vals[k] << "  (~ " << fmt_complex(*vals[k]) << ")\n";
      }
    } else if (*demo) {
      pfcirc::Rng rng(opt.seed);
      pfcirc::SwapSolution sol = solution_from_flags(demo_reference, demo_params, rng);
      rep.results["M"] = {sol.M.a.to_string(), sol.M.b.to_string(), sol.M.c.to_string(),
                          sol.M.d.to_string()};
      rep.results["N"] = {sol.N.a.to_string(), sol.N.b.to_string(), sol.N.c.to_string(),
                          sol.N.d.to_string()};
      rep.results["S"] = pfcirc::skew_to_json(sol.S);
      if (!opt.as_json) {
        std::cout << "M = [" << sol.M.a << ", " << sol.M.b << "; " << sol.M.c << ", " << sol.M.d
                  << "]\n";
        std::cout << "N = [" << sol.N.a << ", " << sol.N.b << "; " << sol.N.c << ", " << sol.N.d
                  << "]\n";
        std::cout << "S = " << pfcirc::skew_to_json(sol.S).dump() << "\n";
      }
      int equal = 0;
      json values = json::array();
      for (int trial = 0; trial < demo_trials; trial++) {
        pfcirc::DemoHost host = pfcirc::make_demo_host(rng, trial % 3);
        pfcirc::DemoResult res = pfcirc::demo_substitution(host.circuit, host.v, sol);
        bool ok = res.value_before == res.value_after && res.value_before == res.elementary_value;
        if (ok) equal++;
        values.push_back({{"before", res.value_before.to_string()},
                          {"after", res.value_after.to_string()},
                          {"elementary", res.elementary_value.to_string()},
                          {"equal", ok}});
        if (!opt.as_json)
          std::cout << "trial " << trial << ": before = " << res.value_before
                    << ", after = " << res.value_after << ", " << (ok ? "equal" : "NOT EQUAL")
                    << "\n";
      }
      rep.results["trials"] = values;
      rep.verdicts["all_equal"] = equal == demo_trials;
      if (!opt.as_json)
        std::cout << "verdict: " << equal << "/" << demo_trials << " substitutions preserved\n";
    } else if (*obs) {
      pfcirc::Rng rng(opt.seed);
      int obstructed = 0;
      json reports = json::array();
      for (int trial = 0; trial < obs_trials; trial++) {
        std::vector<pfcirc::SwapSolution> sols;
        for (int i = 0; i < obs_k; i++)
          sols.push_back(trial == 0 ? pfcirc::reference_solution() : pfcirc::random_solution(rng));
        pfcirc::ObstructionReport r = pfcirc::multi_swap_obstruction(obs_k, sols);
        bool hit = obs_k == 2 ? (!r.even_projection_in_cone && r.violated.has_value())
                              : (r.parity_decomposition_ok && r.defect_present);
        if (hit) obstructed++;
        json jr{{"parity_decomposition_ok", r.parity_decomposition_ok},
                {"defect_present", r.defect_present}};
        if (obs_k == 2) {
          jr["pp_in_cone"] = r.pp_in_cone;
          jr["even_projection_in_cone"] = r.even_projection_in_cone;
          if (r.violated) jr["violated_relation"] = r.violated->describe();
          if (r.violation_value) jr["violation_value"] = r.violation_value->to_string();
        }
        reports.push_back(std::move(jr));
        if (!opt.as_json) {
          std::cout << "trial " << trial << ": "
                    << (obs_k == 2
                            ? (hit ? "obstructed, violates " + r.violated->describe()
                                   : "NOT OBSTRUCTED")
                            : (hit ? "parity decomposition confirmed" : "parity check FAILED"))
                    << "\n";
        }
      }
      rep.results["reports"] = reports;
      rep.verdicts[obs_k == 2 ? "all_obstructed" : "parity_ok"] = obstructed == obs_trials;
      if (!opt.as_json) std::cout << "verdict: " << obstructed << "/" << obs_trials << "\n";
    } else if (*cert) {
      if (cert_system != "swap-cogate")
        throw std::invalid_argument("unknown system " + cert_system);
      pfcirc::CertSearchResult found =
          cert_degree > 0 ? pfcirc::swap_cogate_certificate({cert_degree}) : pfcirc::swap_cogate_certificate();
      bool ok = found.cert.has_value();
      bool verified =
          ok && pfcirc::verify_certificate(*found.cert, pfcirc::swap_cogate_generators());
      rep.results["found"] = ok;
      rep.verdicts["certificate"] = ok && verified;
      if (ok) {
        rep.results["degree_used"] = found.degree_used;
        rep.results["multipliers"] = found.cert->multipliers.size();
        rep.results["verified"] = verified;
        if (!opt.as_json)
          std::cout << "certificate found at degree " << found.degree_used << " ("
                    << found.cert->multipliers.size() << " multipliers), re-verification "
                    << (verified ? "passed" : "FAILED") << "\n";
        if (!cert_dump.empty()) {
          json dump{{"system", cert_system}, {"degree", found.degree_used}};
          json mults = json::array();
          for (const auto& [index, poly] : found.cert->multipliers)
            mults.push_back({{"generator", index}, {"poly", poly.to_string()}});
          dump["multipliers"] = std::move(mults);
          std::ofstream out(cert_dump);
          out << dump.dump(2) << "\n";
        }
      } else {
        rep.results["ladder"] = found.ladder;
        if (!opt.as_json)
          std::cout << "no certificate up to degree " << found.ladder.back()
                    << "; bound reached, open question flagged\n";
      }
    } else if (*selftest) {
      std::vector<pfcirc::CriterionResult> results =
          pfcirc::run_acceptance(opt.seed, opt.as_json ? nullptr : &std::cout);
      int failures = 0;
      json lines = json::array();
      for (const pfcirc::CriterionResult& r : results) {
        if (!r.pass) failures++;
        lines.push_back(
            {{"index", r.index}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      }
      if (opt.as_json) rep.results["criteria"] = lines;
      rep.verdicts["selftest"] = failures == 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  {
    std::ostringstream hex;
    hex << std::hex << digest;
    rep.inputs_digest = hex.str();
  }
  rep.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  emit(rep, opt);
  return rep.all_pass() ? 0 : 1;
}
