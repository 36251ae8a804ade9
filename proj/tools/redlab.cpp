// Command-line front end: schedule generation, relation decisions, point-to-
// space reductions, verification sweeps and the reducibility registry.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "redlab/descriptors.hpp"
#include "redlab/hierarchy.hpp"
#include "redlab/json_io.hpp"
#include "redlab/relations.hpp"
#include "redlab/schedule.hpp"
#include "redlab/verify.hpp"

namespace {

using redlab::errc;
using redlab::Json;

constexpr int kExitOk = 0;
constexpr int kExitBadArgs = 1;
constexpr int kExitDomain = 2;
constexpr int kExitNegative = 3;

int exit_code_for(errc kind) {
  switch (kind) {
    case errc::infeasible:
    case errc::schedule_invalid:
    case errc::schedule_mismatch:
    case errc::value_outside_p:
    case errc::domain_mismatch:
    case errc::oracle_bound_exceeded:
    case errc::not_successive:
    case errc::not_disjoint:
    case errc::invalid_exponents:
      return kExitDomain;
    default:
      return kExitBadArgs;
  }
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  redlab::require(in.good(), errc::malformed, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    redlab::fail(errc::malformed, "cannot parse '" + path + "': " + e.what());
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  redlab::require(out.good(), errc::invalid_input, "cannot write '" + out_path + "'");
  out << text;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("REDLAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      redlab::fail(errc::invalid_input, "REDLAB_SEED is not a valid integer");
    }
  }
  return 0;
}

struct DecideArgs {
  std::string relation;
  std::string file_a;
  std::string file_b;
  std::string out;
};

int run_decide(const DecideArgs& args) {
  const Json ja = load_json(args.file_a);
  const Json jb = load_json(args.file_b);
  Json verdict;
  bool related = false;
  if (args.relation == "h0") {
    const auto res = redlab::h0_decide(redlab::point_x0_from_json(ja),
                                       redlab::point_x0_from_json(jb));
    related = res.related;
    verdict["related"] = related;
    if (related) verdict["witness"] = res.witness;
  } else if (args.relation == "e0") {
    related = redlab::e0_decide(redlab::bit_point_from_json(ja),
                                redlab::bit_point_from_json(jb));
    verdict["related"] = related;
  } else if (args.relation == "e1") {
    related = redlab::e1_decide(redlab::real_seq_point_from_json(ja),
                                redlab::real_seq_point_from_json(jb));
    verdict["related"] = related;
  } else if (args.relation == "eplus" || args.relation == "=+") {
    related = redlab::eplus_decide(redlab::cycle_list_point_from_json(ja),
                                   redlab::cycle_list_point_from_json(jb));
    verdict["related"] = related;
  } else if (args.relation == "h0xeplus" || args.relation == "h0x=+") {
    auto parse_pair = [](const Json& j) {
      return std::pair{redlab::point_x0_from_json(j.at("pair").at(0)),
                       redlab::cycle_list_point_from_json(j.at("pair").at(1))};
    };
    const auto pa = redlab::json_guard([&] { return parse_pair(ja); });
    const auto pb = redlab::json_guard([&] { return parse_pair(jb); });
    related = redlab::product_decide(
        [](const auto& x, const auto& y) { return redlab::h0_decide(x, y).related; },
        [](const auto& x, const auto& y) { return redlab::eplus_decide(x, y); }, pa, pb);
    verdict["related"] = related;
  } else {
    redlab::fail(errc::invalid_input, "unknown relation '" + args.relation + "'");
  }
  emit(verdict.dump(2) + "\n", args.out);
  return related ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"truncation-scale lab for sequence-space reductions"};
  app.require_subcommand(1);

  // gen-params
  auto* gen = app.add_subcommand("gen-params", "generate a parameter schedule");
  std::string gen_flavor = "lp";
  double gen_base_p = 1.0, gen_margin = 0.5;
  int gen_n_max = 8;
  std::string gen_out;
  gen->add_option("--flavor", gen_flavor)->check(CLI::IsMember({"lp", "c0"}));
  gen->add_option("--base-p", gen_base_p);
  gen->add_option("--n-max", gen_n_max);
  gen->add_option("--margin", gen_margin);
  gen->add_option("--out", gen_out);

  // decide
  auto* decide = app.add_subcommand("decide", "decide a relation on two encoded points");
  DecideArgs decide_args;
  decide->add_option("--relation", decide_args.relation)->required();
  decide->add_option("point_a", decide_args.file_a)->required();
  decide->add_option("point_b", decide_args.file_b)->required();
  decide->add_option("--out", decide_args.out);

  // reduce
  auto* reduce = app.add_subcommand("reduce", "map encoded points to space descriptors");
  std::string reduce_map, reduce_schedule, reduce_base_p = "1", reduce_out;
  int reduce_n_max = 8;
  double reduce_margin = 0.5;
  std::vector<std::string> reduce_points;
  reduce->add_option("--map", reduce_map)->required()->check(CLI::IsMember({"lp", "c0", "Lp", "h"}));
  reduce->add_option("--schedule", reduce_schedule);
  reduce->add_option("--base-p", reduce_base_p);
  reduce->add_option("--n-max", reduce_n_max);
  reduce->add_option("--margin", reduce_margin);
  reduce->add_option("points", reduce_points)->expected(1, 2);
  reduce->add_option("--out", reduce_out);

  // verify
  auto* verify = app.add_subcommand("verify", "run a property suite and emit a CSV report");
  std::string verify_suite = "all", verify_schedule, verify_out;
  redlab::VerifyConfig vcfg;
  bool seed_given = false;
  verify->add_option("--suite", verify_suite);
  verify->add_option("--seed", vcfg.seed)->each([&](const std::string&) { seed_given = true; });
  verify->add_option("--tolerance", vcfg.tolerance);
  verify->add_option("--n-max", vcfg.n_max);
  verify->add_option("--oracle-bound", vcfg.oracle_bound);
  verify->add_option("--schedule", verify_schedule);
  verify->add_option("--out", verify_out);

  // hierarchy
  auto* hier = app.add_subcommand("hierarchy", "reducibility registry queries and export");
  std::string hier_action, hier_from, hier_to, hier_out;
  hier->add_option("action", hier_action)->required()->check(CLI::IsMember({"export", "query", "dump"}));
  hier->add_option("from", hier_from);
  hier->add_option("to", hier_to);
  hier->add_option("--out", hier_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitBadArgs;
  }

  try {
    if (gen->parsed()) {
      const auto flavor = gen_flavor == "lp" ? redlab::SumFlavor::lp : redlab::SumFlavor::c0;
      const auto sched = redlab::gen_params(flavor, gen_base_p, gen_n_max, gen_margin);
      emit(redlab::to_json(sched).dump(2) + "\n", gen_out);
      return kExitOk;
    }
    if (decide->parsed()) return run_decide(decide_args);
    if (reduce->parsed()) {
      if (reduce_map == "lp" || reduce_map == "c0") {
        redlab::require(!reduce_schedule.empty() && reduce_points.size() == 1,
                        errc::invalid_input, "need --schedule and one X0 point");
        const auto sched = redlab::schedule_from_json(load_json(reduce_schedule));
        const auto want = reduce_map == "lp" ? redlab::SumFlavor::lp : redlab::SumFlavor::c0;
        redlab::require(sched.flavor == want, errc::invalid_input,
                        "schedule flavor does not match the requested map");
        const auto desc =
            redlab::space_for(redlab::point_x0_from_json(load_json(reduce_points[0])), sched);
        emit(redlab::to_json(desc).dump(2) + "\n", reduce_out);
      } else if (reduce_map == "Lp") {
        redlab::require(reduce_points.size() == 1, errc::invalid_input, "need one Pomega point");
        const auto d = redlab::x_alpha(
            redlab::cycle_list_point_from_json(load_json(reduce_points[0])),
            redlab::parse_rational(reduce_base_p));
        emit(redlab::to_json(d).dump(2) + "\n", reduce_out);
      } else {  // h
        redlab::require(reduce_points.size() == 2, errc::invalid_input,
                        "need an X0 point and a Pomega point");
        const auto d = redlab::h_direct_sum(
            redlab::point_x0_from_json(load_json(reduce_points[0])),
            redlab::cycle_list_point_from_json(load_json(reduce_points[1])),
            redlab::parse_rational(reduce_base_p), reduce_n_max, reduce_margin);
        emit(redlab::to_json(d).dump(2) + "\n", reduce_out);
      }
      return kExitOk;
    }
    if (verify->parsed()) {
      if (!seed_given) vcfg.seed = default_seed();
      if (!verify_schedule.empty())
        vcfg.schedule = redlab::schedule_from_json(load_json(verify_schedule));
      const auto rows = redlab::run_suite(verify_suite, vcfg);
      std::ostringstream csv;
      redlab::write_csv(csv, rows);
      emit(csv.str(), verify_out);
      std::size_t failed = 0;
      for (const auto& r : rows) failed += r.holds ? 0 : 1;
      std::cerr << "suite=" << verify_suite << " seed=" << vcfg.seed << " cases=" << rows.size()
                << " failed=" << failed << " status=" << (failed == 0 ? "PASS" : "FAIL") << "\n";
      return failed == 0 ? kExitOk : kExitBadArgs;
    }
    if (hier->parsed()) {
      const auto graph = redlab::RelationGraph::seeded();
      if (hier_action == "export") {
        emit(graph.export_dot(), hier_out);
        return kExitOk;
      }
      if (hier_action == "dump") {
        emit(redlab::to_json(graph).dump(2) + "\n", hier_out);
        return kExitOk;
      }
      redlab::require(!hier_from.empty() && !hier_to.empty(), errc::invalid_input,
                      "query needs two node ids");
      const bool ok = graph.reachable(hier_from, hier_to);
      Json verdict{{"from", hier_from}, {"to", hier_to}, {"reachable", ok}};
      emit(verdict.dump(2) + "\n", hier_out);
      return ok ? kExitOk : kExitNegative;
    }
  } catch (const redlab::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  }
  return kExitBadArgs;
}
