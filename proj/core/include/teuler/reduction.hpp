#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "teuler/hypergraph.hpp"
#include "teuler/walk.hpp"

namespace teuler {

// 3-SAT to tight-Euler-tour reduction with constructive certificates in
// both directions: a satisfying assignment turns into a verifiable Euler
// tour by gluing gadget tours, and an Euler tour decodes back into a
// satisfying assignment by classifying the gadget edge orderings.

/// 3-CNF formula over variables 1..num_vars; literals are DIMACS-style
/// signed indices, three per clause.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;

  int t() const { return num_vars; }
  int p() const { return static_cast<int>(clauses.size()); }

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// assignment[i] is the value of variable i+1.
using Assignment = std::vector<bool>;

bool satisfies(const CnfFormula& f, const Assignment& w);

CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs_string(const std::string& text);
CnfFormula parse_dimacs_file(const std::string& path);

/// Drops tautological clauses (a variable together with its negation),
/// rejects clauses with a duplicated same-sign literal, renumbers the
/// surviving variables densely. With require_min_vars (the library
/// default), fewer than two remaining variables is an error: the spine
/// cycle of the reduction needs t >= 2.
CnfFormula preprocess(const CnfFormula& f, bool require_min_vars = true);

/// Exhaustive satisfiability check, t <= 24. Returns the first satisfying
/// assignment in increasing binary order (all-false first), or nullopt.
std::optional<Assignment> sat_brute_force(const CnfFormula& f);

/// Smallest ell >= 2*occ + 3 with ell != 1 (mod 3).
int ell_for_occurrences(int occ);

struct ReductionConnector {
  int slot = 0;        // 0,1,2: which C_6 pair (0,1),(2,3),(4,5)
  int variable = 0;    // 1-based
  int occurrence = 0;  // 1-based, in clause order
  bool positive = false;
  std::array<int, 2> pair{0, 0};  // global ids of the identified pair

  friend bool operator==(const ReductionConnector&,
                         const ReductionConnector&) = default;
};

struct ReductionVariable {
  int index = 0;  // 1-based
  int ell = 0;
  std::vector<int> vertex_ids;  // global id of each local H_ell vertex

  friend bool operator==(const ReductionVariable&,
                         const ReductionVariable&) = default;
};

struct ReductionClause {
  int index = 0;  // 1-based
  std::array<int, 6> cycle_vertex_ids{};
  std::vector<ReductionConnector> connectors;

  friend bool operator==(const ReductionClause&,
                         const ReductionClause&) = default;
};

struct ReductionMap {
  std::vector<ReductionVariable> variables;
  std::vector<ReductionClause> clauses;
  std::vector<int> spine_vertex_ids;  // 2t ids, spine vertex order

  friend bool operator==(const ReductionMap&, const ReductionMap&) = default;
};

struct ReducedInstance {
  Hypergraph graph;
  ReductionMap map;
};

/// The reduction: per variable a copy of H_{ell_i}, per clause a copy of
/// C_6, one spine cycle on 2t vertices, glued by vertex identification.
/// |E| = 6*sum(ell_i) + 6p + 2t, |V| = 3*sum(ell_i), max codegree <= 4.
/// Requires a preprocessed formula with t >= 2.
ReducedInstance reduce(const CnfFormula& f);

/// Builds a tight Euler tour of reduce(f) from a satisfying assignment by
/// gluing the per-variable type-T/F tours, the clause cycles and the spine.
/// Throws InputError if w does not satisfy f.
WalkSeq tour_from_assignment(const CnfFormula& f, const ReductionMap& map,
                             const Assignment& w);

/// Recovers a satisfying assignment from a tight Euler tour of reduce(f):
/// variable i is true iff its gadget's edge orderings are of type T. All
/// 6*ell_i orderings per gadget are classified and checked for uniformity.
Assignment assignment_from_tour(const CnfFormula& f, const ReductionMap& map,
                                const WalkSeq& tour);

std::string map_to_json(const ReductionMap& map);
ReductionMap map_from_json(const std::string& text);
ReductionMap map_from_json_file(const std::string& path);

}  // namespace teuler
