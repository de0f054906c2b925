#include "teuler/reduction.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "teuler/errors.hpp"
#include "teuler/generators.hpp"

namespace teuler {

using nlohmann::json;

bool satisfies(const CnfFormula& f, const Assignment& w) {
  if (static_cast<int>(w.size()) != f.num_vars) {
    throw InputError("assignment has " + std::to_string(w.size()) +
                     " values, formula has " + std::to_string(f.num_vars) +
                     " variables");
  }
  for (const auto& clause : f.clauses) {
    bool sat = false;
    for (int lit : clause) {
      int var = std::abs(lit);
      if (var < 1 || var > f.num_vars) {
        throw InputError("literal " + std::to_string(lit) + " out of range");
      }
      if ((lit > 0) == static_cast<bool>(w[var - 1])) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

CnfFormula parse_dimacs(std::istream& in) {
  std::vector<long long> nums;
  bool have_header = false;
  int header_vars = 0, header_clauses = 0;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c") continue;
    if (first == "p") {
      if (have_header) throw InputError("duplicate 'p' header");
      std::string fmt;
      if (!(ls >> fmt >> header_vars >> header_clauses) || fmt != "cnf") {
        throw InputError("malformed header, expected 'p cnf <vars> <clauses>'");
      }
      if (header_vars < 0 || header_clauses < 0) {
        throw InputError("negative counts in 'p cnf' header");
      }
      have_header = true;
      continue;
    }
    ls.clear();
    ls.seekg(0);
    long long v;
    while (ls >> v) nums.push_back(v);
    if (!ls.eof()) throw InputError("unexpected token in clause data: " + line);
  }
  if (!have_header) throw InputError("missing 'p cnf' header");

  CnfFormula f;
  f.num_vars = header_vars;
  std::vector<int> clause;
  for (long long v : nums) {
    if (v == 0) {
      if (clause.size() != 3) {
        throw InputError("clause has " + std::to_string(clause.size()) +
                         " literals, exactly 3 required");
      }
      f.clauses.push_back({clause[0], clause[1], clause[2]});
      clause.clear();
      continue;
    }
    long long var = v < 0 ? -v : v;
    if (var > header_vars) {
      throw InputError("literal " + std::to_string(v) +
                       " exceeds declared variable count " +
                       std::to_string(header_vars));
    }
    clause.push_back(static_cast<int>(v));
  }
  if (!clause.empty()) throw InputError("last clause not terminated by 0");
  if (f.p() != header_clauses) {
    throw InputError("header declares " + std::to_string(header_clauses) +
                     " clauses, found " + std::to_string(f.p()));
  }
  return f;
}

CnfFormula parse_dimacs_string(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

CnfFormula parse_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open CNF file '" + path + "'");
  return parse_dimacs(in);
}

CnfFormula preprocess(const CnfFormula& f, bool require_min_vars) {
  std::vector<std::array<int, 3>> kept;
  for (const auto& clause : f.clauses) {
    bool tautology = false;
    for (int a = 0; a < 3 && !tautology; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        if (clause[a] == clause[b]) {
          throw InputError("clause contains literal " +
                           std::to_string(clause[a]) + " twice");
        }
        if (clause[a] == -clause[b]) {
          tautology = true;  // always true, delete
          break;
        }
      }
    }
    if (!tautology) kept.push_back(clause);
  }

  // Dense renumbering of the surviving variables, order-preserving.
  std::vector<int> old_vars;
  for (const auto& clause : kept) {
    for (int lit : clause) old_vars.push_back(std::abs(lit));
  }
  std::sort(old_vars.begin(), old_vars.end());
  old_vars.erase(std::unique(old_vars.begin(), old_vars.end()),
                 old_vars.end());
  std::unordered_map<int, int> renumber;
  for (std::size_t i = 0; i < old_vars.size(); ++i) {
    renumber[old_vars[i]] = static_cast<int>(i) + 1;
  }

  CnfFormula out;
  out.num_vars = static_cast<int>(old_vars.size());
  for (const auto& clause : kept) {
    std::array<int, 3> c{};
    for (int i = 0; i < 3; ++i) {
      int nv = renumber[std::abs(clause[i])];
      c[i] = clause[i] > 0 ? nv : -nv;
    }
    out.clauses.push_back(c);
  }
  if (require_min_vars && out.num_vars < 2) {
    throw InputError("reduction needs at least 2 variables after "
                     "preprocessing, got " + std::to_string(out.num_vars));
  }
  return out;
}

std::optional<Assignment> sat_brute_force(const CnfFormula& f) {
  if (f.num_vars > 24) {
    throw InputError("brute force is capped at 24 variables");
  }
  std::uint64_t total = std::uint64_t{1} << f.num_vars;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Assignment w(f.num_vars);
    for (int i = 0; i < f.num_vars; ++i) w[i] = (mask >> i) & 1;
    if (satisfies(f, w)) return w;
  }
  return std::nullopt;
}

int ell_for_occurrences(int occ) {
  if (occ < 1) throw InputError("variable must occur at least once");
  int ell = 2 * occ + 3;
  if (ell % 3 == 1) ++ell;
  return ell;
}

namespace {

struct Layout {
  std::vector<int> occ;        // per variable, 1-based index shifted by -1
  std::vector<int> ell;
  std::vector<int> base;       // global id of each gadget's local vertex 0
  int total_vertices = 0;

  explicit Layout(const CnfFormula& f) {
    occ.assign(f.num_vars, 0);
    for (const auto& clause : f.clauses) {
      for (int lit : clause) ++occ[std::abs(lit) - 1];
    }
    for (int i = 0; i < f.num_vars; ++i) {
      if (occ[i] == 0) {
        throw InputError("variable " + std::to_string(i + 1) +
                         " does not occur; preprocess the formula first");
      }
      ell.push_back(ell_for_occurrences(occ[i]));
    }
    base.resize(f.num_vars);
    int next = 0;
    for (int i = 0; i < f.num_vars; ++i) {
      base[i] = next;
      next += 3 * ell[i];
    }
    total_vertices = next;
  }

  // var is 1-based throughout, matching the formula.
  int va(int var, int idx) const {
    return base[var - 1] + ell[var - 1] + 1 + idx;
  }
  int vb(int var, int idx) const { return base[var - 1] + 2 * ell[var - 1] + idx; }
};

void check_preprocessed(const CnfFormula& f) {
  if (f.num_vars < 2) {
    throw InputError("reduction requires at least 2 variables");
  }
  for (const auto& clause : f.clauses) {
    for (int a = 0; a < 3; ++a) {
      int var = std::abs(clause[a]);
      if (var < 1 || var > f.num_vars) {
        throw InputError("literal " + std::to_string(clause[a]) +
                         " out of range");
      }
      for (int b = a + 1; b < 3; ++b) {
        if (std::abs(clause[a]) == std::abs(clause[b])) {
          throw InputError("clause with a repeated variable; preprocess the "
                           "formula first");
        }
      }
    }
  }
}

// Splices tour `guest` into tour `host` at the consecutive pair {x, y},
// which must appear consecutively (in either direction) in both. The guest
// is reversed if its traversal direction disagrees. Both tours are closed
// vertex sequences; the result starts at the shared pair.
std::vector<int> splice_tours(const std::vector<int>& host,
                              const std::vector<int>& guest, int x, int y) {
  auto find_adjacent = [](const std::vector<int>& seq, int a,
                          int b) -> std::ptrdiff_t {
    std::size_t s = seq.size();
    for (std::size_t i = 0; i < s; ++i) {
      if (seq[i] == a && seq[(i + 1) % s] == b) {
        return static_cast<std::ptrdiff_t>(i);
      }
    }
    return -1;
  };
  // First position in the host where the pair appears, either direction.
  std::size_t hs = host.size();
  std::ptrdiff_t hpos = -1;
  int a = x, b = y;
  for (std::size_t i = 0; i < hs && hpos < 0; ++i) {
    int u = host[i], v = host[(i + 1) % hs];
    if ((u == x && v == y) || (u == y && v == x)) {
      hpos = static_cast<std::ptrdiff_t>(i);
      a = u;
      b = v;
    }
  }
  if (hpos < 0) {
    throw InternalError("connector pair " + std::to_string(x) + "," +
                        std::to_string(y) + " is not adjacent in host tour");
  }
  std::vector<int> g = guest;
  std::ptrdiff_t gpos = find_adjacent(g, a, b);
  if (gpos < 0) {
    std::reverse(g.begin(), g.end());
    gpos = find_adjacent(g, a, b);
  }
  if (gpos < 0) {
    throw InternalError("connector pair " + std::to_string(x) + "," +
                        std::to_string(y) + " is not adjacent in guest tour");
  }
  std::vector<int> out;
  out.reserve(host.size() + g.size());
  for (std::size_t i = 0; i < host.size(); ++i) {
    out.push_back(host[(hpos + i) % host.size()]);
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    out.push_back(g[(gpos + i) % g.size()]);
  }
  return out;
}

std::vector<int> translate(const std::vector<int>& local,
                           const std::vector<int>& table) {
  std::vector<int> out;
  out.reserve(local.size());
  for (int v : local) out.push_back(table[v]);
  return out;
}

}  // namespace

ReducedInstance reduce(const CnfFormula& f) {
  check_preprocessed(f);
  Layout layout(f);
  int t = f.num_vars;
  int p = f.p();

  ReductionMap map;
  std::vector<std::vector<int>> edges;

  // Variable gadgets H^i, edges in gadget-local order.
  for (int i = 1; i <= t; ++i) {
    HellGadget g = gen_h_ell(layout.ell[i - 1]);
    std::vector<int> ids(3 * layout.ell[i - 1]);
    std::iota(ids.begin(), ids.end(), layout.base[i - 1]);
    for (const auto& e : g.graph.edges()) edges.push_back(translate(e, ids));
    map.variables.push_back({i, layout.ell[i - 1], std::move(ids)});
  }

  // Clause cycles C_6^j. The o-th occurrence of a variable connects through
  // v_{2o} and v_{2o+1}; the first of the pair is on the a-side for a
  // negated occurrence and on the b-side for a positive one.
  std::vector<int> occ_counter(t, 0);
  Hypergraph c6 = gen_tight_cycle(6, 3);
  for (int j = 1; j <= p; ++j) {
    const auto& clause = f.clauses[j - 1];
    std::vector<std::pair<int, int>> slots;  // (variable, literal)
    for (int lit : clause) slots.emplace_back(std::abs(lit), lit);
    std::sort(slots.begin(), slots.end());

    ReductionClause entry;
    entry.index = j;
    std::vector<int> cycle_ids(6);
    for (int s = 0; s < 3; ++s) {
      auto [var, lit] = slots[s];
      int o = ++occ_counter[var - 1];
      bool positive = lit > 0;
      if (2 * o + 1 > layout.ell[var - 1] - 2) {
        // ell >= 2*occ + 3 keeps clause connectors clear of the spine pair
        throw InternalError("clause connector index collides with the spine");
      }
      int first = positive ? layout.vb(var, 2 * o) : layout.va(var, 2 * o);
      int second = layout.va(var, 2 * o + 1);
      cycle_ids[2 * s] = first;
      cycle_ids[2 * s + 1] = second;
      entry.connectors.push_back(
          {s, var, o, positive, {first, second}});
    }
    std::copy(cycle_ids.begin(), cycle_ids.end(),
              entry.cycle_vertex_ids.begin());
    for (const auto& e : c6.edges()) edges.push_back(translate(e, cycle_ids));
    map.clauses.push_back(std::move(entry));
  }

  // Spine cycle on 2t vertices; vertex 2i-2 is v^a_{ell_i - 1} of H^i and
  // 2i-1 is v^b_{ell_i - 1}.
  std::vector<int> spine_ids(2 * t);
  for (int i = 1; i <= t; ++i) {
    spine_ids[2 * i - 2] = layout.va(i, layout.ell[i - 1] - 1);
    spine_ids[2 * i - 1] = layout.vb(i, layout.ell[i - 1] - 1);
  }
  Hypergraph spine = gen_tight_cycle(2 * t, 3);
  for (const auto& e : spine.edges()) edges.push_back(translate(e, spine_ids));
  map.spine_vertex_ids = std::move(spine_ids);

  return ReducedInstance{Hypergraph(3, layout.total_vertices, edges),
                         std::move(map)};
}

WalkSeq tour_from_assignment(const CnfFormula& f, const ReductionMap& map,
                             const Assignment& w) {
  if (!satisfies(f, w)) {
    throw InputError("assignment does not satisfy the formula");
  }
  int t = f.num_vars;
  if (static_cast<int>(map.variables.size()) != t ||
      static_cast<int>(map.clauses.size()) != f.p()) {
    throw InputError("reduction map does not match the formula");
  }

  // Per-variable gadget tour: type T for true, type F for false.
  std::vector<std::vector<int>> gadget_tours(t);
  for (int i = 1; i <= t; ++i) {
    const auto& var = map.variables[i - 1];
    TypedTour tt =
        tour_of_type(var.ell, w[i - 1] ? TourType::T : TourType::F);
    if (!tt.eulerian) {
      throw InternalError("gadget tour for variable " + std::to_string(i) +
                          " is not Eulerian");
    }
    gadget_tours[i - 1] = translate(tt.walk.verts, var.vertex_ids);
  }

  // Glue each clause cycle into the gadget of its lowest satisfied literal.
  for (const auto& clause : map.clauses) {
    const ReductionConnector* chosen = nullptr;
    for (const auto& conn : clause.connectors) {
      if (conn.positive == static_cast<bool>(w[conn.variable - 1])) {
        chosen = &conn;
        break;  // connectors are in ascending variable order
      }
    }
    if (!chosen) {
      throw InternalError("no satisfied literal in clause " +
                          std::to_string(clause.index));
    }
    std::vector<int> cycle_tour(clause.cycle_vertex_ids.begin(),
                                clause.cycle_vertex_ids.end());
    auto& host = gadget_tours[chosen->variable - 1];
    host = splice_tours(host, cycle_tour, chosen->pair[0], chosen->pair[1]);
  }

  // Glue every combined gadget tour into the spine.
  std::vector<int> result = map.spine_vertex_ids;
  for (int i = 1; i <= t; ++i) {
    int x = map.spine_vertex_ids[2 * i - 2];
    int y = map.spine_vertex_ids[2 * i - 1];
    result = splice_tours(result, gadget_tours[i - 1], x, y);
  }
  return WalkSeq{std::move(result), true};
}

Assignment assignment_from_tour(const CnfFormula& f, const ReductionMap& map,
                                const WalkSeq& tour) {
  ReducedInstance inst = reduce(f);
  if (!(inst.map == map)) {
    throw InputError("reduction map does not match the formula");
  }
  VerifyResult v = verify_euler(inst.graph, tour);
  if (v.verdict != EulerVerdict::Tour) {
    throw InputError("certificate is not an Euler tour: " +
                     (v.reason.empty() ? std::string("walk is open") : v.reason));
  }

  // Ordered window of every edge, by edge id.
  const std::vector<int>& verts = tour.verts;
  std::size_t s = verts.size();
  std::vector<std::array<int, 3>> window_of(inst.graph.m());
  for (std::size_t i = 0; i < s; ++i) {
    std::array<int, 3> triple = {verts[i], verts[(i + 1) % s],
                                 verts[(i + 2) % s]};
    int id = inst.graph.find_edge({triple.begin(), triple.end()});
    if (id < 0) throw InternalError("verified tour has a non-edge window");
    window_of[id] = triple;
  }

  Assignment w(f.num_vars);
  for (const auto& var : map.variables) {
    OrderingClassifier classifier(var.ell);
    std::unordered_map<int, int> to_local;
    for (std::size_t local = 0; local < var.vertex_ids.size(); ++local) {
      to_local[var.vertex_ids[local]] = static_cast<int>(local);
    }
    HellGadget g = gen_h_ell(var.ell);
    bool first = true;
    TourType type = TourType::N;
    for (const auto& local_edge : g.graph.edges()) {
      int id = inst.graph.find_edge(translate(local_edge, var.vertex_ids));
      if (id < 0) {
        throw InternalError("gadget edge missing from reduced hypergraph");
      }
      std::array<int, 3> local_triple{};
      for (int i = 0; i < 3; ++i) local_triple[i] = to_local.at(window_of[id][i]);
      TourType t = classifier.classify(local_edge, local_triple);
      if (t == TourType::N) {
        throw InternalError("edge ordering of type N inside gadget " +
                            std::to_string(var.index) +
                            "; uniformity is violated");
      }
      if (first) {
        type = t;
        first = false;
      } else if (t != type) {
        throw InternalError("mixed ordering types inside gadget " +
                            std::to_string(var.index) +
                            "; uniformity is violated");
      }
    }
    w[var.index - 1] = (type == TourType::T);
  }

  if (!satisfies(f, w)) {
    throw InternalError("decoded assignment does not satisfy the formula");
  }
  return w;
}

namespace {
constexpr const char* kMapSchema = "reduction-map.v1";
}

std::string map_to_json(const ReductionMap& map) {
  json j;
  j["schema"] = kMapSchema;
  j["variables"] = json::array();
  for (const auto& var : map.variables) {
    j["variables"].push_back({{"index", var.index},
                              {"ell", var.ell},
                              {"vertex_ids", var.vertex_ids}});
  }
  j["clauses"] = json::array();
  for (const auto& clause : map.clauses) {
    json connectors = json::array();
    for (const auto& c : clause.connectors) {
      connectors.push_back({{"slot", c.slot},
                            {"variable", c.variable},
                            {"occurrence", c.occurrence},
                            {"positive", c.positive},
                            {"pair", c.pair}});
    }
    j["clauses"].push_back({{"index", clause.index},
                            {"cycle_vertex_ids", clause.cycle_vertex_ids},
                            {"connectors", connectors}});
  }
  j["spine"] = {{"vertex_ids", map.spine_vertex_ids}};
  return j.dump(2) + "\n";
}

ReductionMap map_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid map JSON: ") + e.what());
  }
  try {
    if (j.at("schema").get<std::string>() != kMapSchema) {
      throw InputError("unsupported map schema '" +
                       j.at("schema").get<std::string>() + "'");
    }
    ReductionMap map;
    for (const auto& var : j.at("variables")) {
      ReductionVariable v;
      v.index = var.at("index").get<int>();
      v.ell = var.at("ell").get<int>();
      v.vertex_ids = var.at("vertex_ids").get<std::vector<int>>();
      map.variables.push_back(std::move(v));
    }
    for (const auto& clause : j.at("clauses")) {
      ReductionClause c;
      c.index = clause.at("index").get<int>();
      auto ids = clause.at("cycle_vertex_ids").get<std::vector<int>>();
      if (ids.size() != 6) throw InputError("cycle_vertex_ids must have 6 ids");
      std::copy(ids.begin(), ids.end(), c.cycle_vertex_ids.begin());
      for (const auto& conn : clause.at("connectors")) {
        ReductionConnector rc;
        rc.slot = conn.at("slot").get<int>();
        rc.variable = conn.at("variable").get<int>();
        rc.occurrence = conn.at("occurrence").get<int>();
        rc.positive = conn.at("positive").get<bool>();
        auto pair = conn.at("pair").get<std::vector<int>>();
        if (pair.size() != 2) throw InputError("connector pair must have 2 ids");
        rc.pair = {pair[0], pair[1]};
        c.connectors.push_back(rc);
      }
      map.clauses.push_back(std::move(c));
    }
    map.spine_vertex_ids =
        j.at("spine").at("vertex_ids").get<std::vector<int>>();
    return map;
  } catch (const json::exception& e) {
    throw InputError(std::string("map JSON missing fields: ") + e.what());
  }
}

ReductionMap map_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open map file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return map_from_json(ss.str());
}

}  // namespace teuler
