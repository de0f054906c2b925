// teuler: count, decide, enumerate and certify tight Euler trails/tours in
// k-uniform hypergraphs.
//
// Exit codes: 0 success / positive answer, 1 negative answer (no tour, a
// certificate that does not verify), 2 input error, 3 internal invariant
// failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "teuler/counting.hpp"
#include "teuler/errors.hpp"
#include "teuler/generators.hpp"
#include "teuler/io.hpp"
#include "teuler/reduction.hpp"
#include "teuler/search.hpp"
#include "teuler/walk.hpp"

namespace {

using nlohmann::json;
using namespace teuler;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

Hypergraph load_hypergraph(const std::string& path) {
  if (path.empty() || path == "-") return read_hypergraph(std::cin);
  return read_hypergraph_file(path);
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write to '" + path + "'");
  out << content;
}

struct CountArgs {
  std::string input;
  int threads = 1;
  bool force_large = false;
  bool as_json = false;
};

void add_count_flags(CLI::App* cmd, CountArgs& args) {
  cmd->add_option("input", args.input, "hypergraph file ('-' or empty: stdin)");
  cmd->add_option("--threads", args.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--force-large", args.force_large,
                "allow m > 30 despite the 2^m cost");
  cmd->add_flag("--json", args.as_json, "JSON output");
}

json count_json(const char* op, const CountReport& rep, int threads) {
  json j;
  j["schema"] = "count.v1";
  j["op"] = op;
  j["subsets_processed"] = rep.subsets_processed;
  j["wall_time_ms"] = rep.wall_time_ms;
  j["peak_workspace_bytes"] = rep.peak_workspace_bytes;
  j["threads"] = threads;
  return j;
}

int cmd_count_trails(const CountArgs& args) {
  Hypergraph h = load_hypergraph(args.input);
  CountReport rep =
      count_euler_trails_report(h, {args.threads, args.force_large});
  if (args.as_json) {
    json j = count_json("count-trails", rep, args.threads);
    j["trail_count"] = rep.trail_count.str();
    std::cout << j.dump() << '\n';
  } else {
    std::cout << rep.trail_count.str() << '\n';
  }
  return kExitOk;
}

int cmd_count_tours(const CountArgs& args) {
  Hypergraph h = load_hypergraph(args.input);
  CountReport rep =
      count_euler_tours_report(h, {args.threads, args.force_large});
  if (args.as_json) {
    json j = count_json("count-tours", rep, args.threads);
    j["tour_count"] = rep.tour_count.str();
    std::cout << j.dump() << '\n';
  } else {
    std::cout << rep.tour_count.str() << '\n';
  }
  return kExitOk;
}

int cmd_exists_tour(const CountArgs& args) {
  Hypergraph h = load_hypergraph(args.input);
  bool exists = exists_euler_tour(h, {args.threads, args.force_large});
  if (args.as_json) {
    json j;
    j["schema"] = "exists.v1";
    j["exists"] = exists;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << (exists ? "yes" : "no") << '\n';
  }
  return exists ? kExitOk : kExitNegative;
}

struct EnumerateArgs {
  std::string input;
  std::string what;
  std::string format = "lines";
  std::uint64_t limit = 0;
  bool has_limit = false;
};

int cmd_enumerate(const EnumerateArgs& args) {
  Hypergraph h = load_hypergraph(args.input);
  std::optional<std::uint64_t> limit;
  if (args.has_limit) limit = args.limit;

  std::vector<std::vector<int>> seqs;
  bool closed = args.what == "tours";
  if (closed) {
    for (auto& t : enumerate_euler_tours(h, limit)) {
      seqs.push_back(std::move(t.verts));
    }
  } else {
    for (auto& t : enumerate_euler_trails(h, limit)) {
      seqs.push_back(std::move(t.verts));
    }
  }

  if (args.format == "json") {
    json j;
    j["schema"] = "enumerate.v1";
    j["what"] = args.what;
    j["count"] = seqs.size();
    j["closed"] = closed;
    j["sequences"] = seqs;
    std::cout << j.dump() << '\n';
  } else {
    for (const auto& s : seqs) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) std::cout << ' ';
        std::cout << s[i];
      }
      std::cout << '\n';
    }
  }
  return kExitOk;
}

int cmd_verify(const std::string& hg_path, const std::string& walk_path,
               bool as_json) {
  Hypergraph h = load_hypergraph(hg_path);
  WalkSeq w = read_walk_file(walk_path);
  VerifyResult res = verify_euler(h, w);
  if (as_json) {
    json j;
    j["schema"] = "verify.v1";
    j["verdict"] = to_string(res.verdict);
    j["reason"] = res.reason;
    j["edges_covered"] = res.edges_covered;
    std::cout << j.dump() << '\n';
  } else if (res.verdict == EulerVerdict::NotEuler) {
    std::cout << to_string(res.verdict) << ": " << res.reason << '\n';
  } else {
    std::cout << to_string(res.verdict) << '\n';
  }
  return res.verdict == EulerVerdict::NotEuler ? kExitNegative : kExitOk;
}

int cmd_reduce(const std::string& cnf_path, const std::string& out_path,
               const std::string& map_path) {
  CnfFormula raw = parse_dimacs_file(cnf_path);
  CnfFormula f = preprocess(raw, /*require_min_vars=*/false);
  if (f.num_vars < 2) {
    // The spine cycle needs t >= 2; answer tiny formulas directly.
    auto w = sat_brute_force(f);
    std::cerr << "formula has fewer than 2 variables after preprocessing; "
                 "not reducible\n";
    std::cout << "satisfiable: " << (w ? "yes" : "no") << '\n';
    return w ? kExitOk : kExitNegative;
  }
  ReducedInstance inst = reduce(f);
  write_output(out_path, write_hypergraph(inst.graph));
  write_output(map_path, map_to_json(inst.map));
  std::cerr << "reduced: t=" << f.t() << " p=" << f.p()
            << " |V|=" << inst.graph.n() << " |E|=" << inst.graph.m() << '\n';
  return kExitOk;
}

Assignment parse_assignment(const std::string& text) {
  std::istringstream in(text);
  Assignment w;
  std::string tok;
  while (in >> tok) {
    if (tok == "1") {
      w.push_back(true);
    } else if (tok == "0") {
      w.push_back(false);
    } else {
      throw InputError("assignment must be space-separated 0/1 values");
    }
  }
  return w;
}

int cmd_certify(const std::string& cnf_path, const std::string& map_path,
                const std::string& assignment, const std::string& out_path) {
  CnfFormula f = preprocess(parse_dimacs_file(cnf_path));
  ReductionMap map = map_from_json_file(map_path);
  ReducedInstance inst = reduce(f);
  if (!(inst.map == map)) {
    throw InputError("map file does not match the formula");
  }
  WalkSeq tour = tour_from_assignment(f, map, parse_assignment(assignment));
  write_output(out_path, write_walk(tour));
  return kExitOk;
}

int cmd_decode(const std::string& cnf_path, const std::string& map_path,
               const std::string& tour_path) {
  CnfFormula f = preprocess(parse_dimacs_file(cnf_path));
  ReductionMap map = map_from_json_file(map_path);
  WalkSeq tour = read_walk_file(tour_path);
  Assignment w = assignment_from_tour(f, map, tour);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) std::cout << ' ';
    std::cout << (w[i] ? 1 : 0);
  }
  std::cout << '\n';
  return kExitOk;
}

struct GenArgs {
  int n = 0, k = 3, t = 0, ell = 0, m = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string labels_path;
  std::vector<int> perm;
};

int run(int argc, char** argv) {
  CLI::App app{"tight Euler trails and tours in k-uniform hypergraphs"};
  app.require_subcommand(1);

  CountArgs trails_args, tours_args, exists_args;
  add_count_flags(app.add_subcommand("count-trails",
                                     "count tight Euler trails exactly"),
                  trails_args);
  add_count_flags(app.add_subcommand("count-tours",
                                     "count tight Euler tours exactly"),
                  tours_args);
  add_count_flags(app.add_subcommand("exists-tour",
                                     "decide whether a tight Euler tour exists"),
                  exists_args);

  EnumerateArgs enum_args;
  auto* cmd_enum = app.add_subcommand("enumerate",
                                      "backtracking enumeration of trails/tours");
  cmd_enum->add_option("input", enum_args.input, "hypergraph file or stdin");
  cmd_enum->add_option("--what", enum_args.what, "trails or tours")
      ->required()
      ->check(CLI::IsMember({"trails", "tours"}));
  auto* limit_opt = cmd_enum->add_option("--limit", enum_args.limit,
                                         "stop after this many results");
  cmd_enum->add_option("--format", enum_args.format, "lines or json")
      ->check(CLI::IsMember({"lines", "json"}));

  std::string verify_hg, verify_walk;
  bool verify_json = false;
  auto* cmd_ver = app.add_subcommand("verify", "verify a walk certificate");
  cmd_ver->add_option("hypergraph", verify_hg, "hypergraph file")->required();
  cmd_ver->add_option("walk", verify_walk, "walk certificate file")->required();
  cmd_ver->add_flag("--json", verify_json, "JSON output");

  auto* cmd_gen = app.add_subcommand("gen", "generate hypergraph families");
  cmd_gen->require_subcommand(1);
  GenArgs g;

  auto* gen_cycle = cmd_gen->add_subcommand("cycle", "tight cycle C_n");
  gen_cycle->add_option("-n", g.n, "vertices")->required();
  gen_cycle->add_option("-k", g.k, "uniformity (default 3)");
  gen_cycle->add_option("-o,--out", g.out, "output file (default stdout)");

  auto* gen_path_cmd = cmd_gen->add_subcommand("path", "tight path P_t");
  gen_path_cmd->add_option("-t", g.t, "parameter t >= 2")->required();
  gen_path_cmd->add_option("-o,--out", g.out, "output file");

  auto* gen_hell = cmd_gen->add_subcommand("hell", "torus gadget H_ell");
  gen_hell->add_option("-l,--ell", g.ell, "parameter ell > 4")->required();
  gen_hell->add_option("-o,--out", g.out, "output file");
  gen_hell->add_option("--labels", g.labels_path,
                       "also write the symbolic label table as JSON");

  auto* gen_complete_cmd =
      cmd_gen->add_subcommand("complete", "complete k-uniform hypergraph");
  gen_complete_cmd->add_option("-n", g.n, "vertices")->required();
  gen_complete_cmd->add_option("-k", g.k, "uniformity (default 3)");
  gen_complete_cmd->add_option("-o,--out", g.out, "output file");

  auto* gen_wreath_cmd = cmd_gen->add_subcommand("wreath", "wreath hypergraph");
  gen_wreath_cmd->add_option("-n", g.n, "vertices")->required();
  gen_wreath_cmd->add_option("-k", g.k, "uniformity (default 3)");
  gen_wreath_cmd->add_option("--perm", g.perm,
                             "vertex permutation (default identity)");
  gen_wreath_cmd->add_option("-o,--out", g.out, "output file");

  auto* gen_random_cmd =
      cmd_gen->add_subcommand("random", "uniform random k-uniform hypergraph");
  gen_random_cmd->add_option("-n", g.n, "vertices")->required();
  gen_random_cmd->add_option("-k", g.k, "uniformity (default 3)");
  gen_random_cmd->add_option("-m", g.m, "edge count")->required();
  gen_random_cmd->add_option("--seed", g.seed, "RNG seed")->required();
  gen_random_cmd->add_option("-o,--out", g.out, "output file");

  std::string red_cnf, red_out, red_map;
  auto* cmd_red = app.add_subcommand("reduce",
                                     "3-SAT to tight-Euler-tour reduction");
  cmd_red->add_option("--cnf", red_cnf, "DIMACS CNF input")->required();
  cmd_red->add_option("--out", red_out, "hypergraph output file")->required();
  cmd_red->add_option("--map", red_map, "reduction map JSON output")->required();

  std::string cert_cnf, cert_map, cert_assignment, cert_out;
  auto* cmd_cert = app.add_subcommand(
      "certify", "turn a satisfying assignment into an Euler tour");
  cmd_cert->add_option("--cnf", cert_cnf, "DIMACS CNF input")->required();
  cmd_cert->add_option("--map", cert_map, "reduction map JSON")->required();
  cmd_cert->add_option("--assignment", cert_assignment, "e.g. \"1 0 1\"")
      ->required();
  cmd_cert->add_option("--out", cert_out,
                       "tour certificate file (default stdout)");

  std::string dec_cnf, dec_map, dec_tour;
  auto* cmd_dec = app.add_subcommand(
      "decode", "turn an Euler tour into a satisfying assignment");
  cmd_dec->add_option("--cnf", dec_cnf, "DIMACS CNF input")->required();
  cmd_dec->add_option("--map", dec_map, "reduction map JSON")->required();
  cmd_dec->add_option("--tour", dec_tour, "tour certificate file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;  // stable code for bad command lines
  }

  if (app.got_subcommand("count-trails")) return cmd_count_trails(trails_args);
  if (app.got_subcommand("count-tours")) return cmd_count_tours(tours_args);
  if (app.got_subcommand("exists-tour")) return cmd_exists_tour(exists_args);
  if (app.got_subcommand("enumerate")) {
    enum_args.has_limit = limit_opt->count() > 0;
    return cmd_enumerate(enum_args);
  }
  if (app.got_subcommand("verify")) {
    return cmd_verify(verify_hg, verify_walk, verify_json);
  }
  if (app.got_subcommand("reduce")) return cmd_reduce(red_cnf, red_out, red_map);
  if (app.got_subcommand("certify")) {
    return cmd_certify(cert_cnf, cert_map, cert_assignment, cert_out);
  }
  if (app.got_subcommand("decode")) return cmd_decode(dec_cnf, dec_map, dec_tour);

  if (app.got_subcommand("gen")) {
    auto* gen = app.get_subcommand("gen");
    if (gen->got_subcommand("cycle")) {
      write_output(g.out, write_hypergraph(gen_tight_cycle(g.n, g.k)));
    } else if (gen->got_subcommand("path")) {
      write_output(g.out, write_hypergraph(gen_path(g.t)));
    } else if (gen->got_subcommand("hell")) {
      HellGadget gadget = gen_h_ell(g.ell);
      write_output(g.out, write_hypergraph(gadget.graph));
      if (!g.labels_path.empty()) {
        json labels;
        labels["schema"] = "hell-labels.v1";
        labels["ell"] = g.ell;
        json table = json::object();
        for (int id = 0; id < gadget.labels.count(); ++id) {
          table[gadget.labels.name(id)] = id;
        }
        labels["labels"] = table;
        write_output(g.labels_path, labels.dump(2) + "\n");
      }
    } else if (gen->got_subcommand("complete")) {
      write_output(g.out, write_hypergraph(gen_complete(g.n, g.k)));
    } else if (gen->got_subcommand("wreath")) {
      std::vector<int> perm = g.perm;
      if (perm.empty()) {
        perm.resize(g.n);
        for (int i = 0; i < g.n; ++i) perm[i] = i;
      }
      write_output(g.out, write_hypergraph(gen_wreath(g.n, g.k, perm)));
    } else if (gen->got_subcommand("random")) {
      write_output(g.out, write_hypergraph(gen_random(g.n, g.k, g.m, g.seed)));
    }
    return kExitOk;
  }
  return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
}
