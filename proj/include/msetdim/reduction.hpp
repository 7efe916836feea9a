#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "msetdim/graph.hpp"
#include "msetdim/solver.hpp"

namespace msetdim {

struct Literal {
    int var = 0;          // 1-based
    bool positive = true;
};

struct Clause {
    std::array<Literal, 3> lits;
};

/// 3-CNF over variables 1..variable_count. Every clause has three distinct
/// variables; in particular no clause contains a variable in both
/// polarities.
struct CnfFormula {
    int variable_count = 0;
    std::vector<Clause> clauses;

    int clause_count() const { return static_cast<int>(clauses.size()); }
};

/// DIMACS CNF reader. Rejects clauses that are not 3 literals over 3
/// distinct variables, reporting the offending line.
CnfFormula parse_dimacs(std::string_view text);

struct Assignment {
    std::vector<bool> values; // values[i-1] is variable i

    bool value(int var) const { return values[static_cast<std::size_t>(var) - 1]; }
};

bool satisfies(const CnfFormula& f, const Assignment& a);

/// First satisfying assignment in lexicographic order (x1 most significant,
/// false < true), or nullopt. Guard: variable_count <= 20.
std::optional<Assignment> sat_brute_force(const CnfFormula& f);

/// Gadget graph encoding a 3-CNF instance, plus the vertex <-> role map.
///
/// Per variable i: true/false ends T:i, F:i; selector vertices a:i:1, a:i:2
/// (truth) and b:i:1, b:i:2 (falsity); a tail path d:i:1..d:i:t_i ending in
/// the twin tips e:i:1, e:i:2, with t_i = 5(i+1).
/// Per clause j: the path c:j:1 - c:j:2 - c:j:3 and a tail path
/// f:j:1..f:j:s_j ending in the twin tips g:j:1, g:j:2, with
/// s_j = 5(n+j+1). Clause-to-variable edges depend on how (and whether)
/// variable i occurs in clause j.
struct ReductionGraph {
    Graph graph;
    std::vector<std::string> roles;            // role name per vertex index
    std::unordered_map<std::string, int> index; // inverse of roles
    std::vector<int> tail_t;                   // t_i per variable (1-based at [i-1])
    std::vector<int> tail_s;                   // s_j per clause
    int variable_count = 0;
    int clause_count = 0;

    int vertex(const std::string& role) const;
    /// "index<TAB>role" per line.
    std::string role_map_text() const;
};

ReductionGraph build_reduction(const CnfFormula& f);

/// Search budget for the decision question: 2n + m.
int target_k(const CnfFormula& f);

/// The canonical witness for a satisfying assignment: every e:i:1, every
/// g:j:1, and a:i:1 or b:i:1 by truth value. Sorted indices, size 2n + m.
std::vector<int> witness_from_assignment(const ReductionGraph& rg, const Assignment& a);

/// Reads the truth assignment back out of a multiset resolving set of size
/// 2n + m: variable i is true iff a:i:1 or a:i:2 is in S. Throws
/// std::invalid_argument if some variable has no selector in S.
Assignment assignment_from_basis(const ReductionGraph& rg, std::span<const int> s);

/// The one-per-group constraint groups justifying the search budget:
/// e-pairs, then g-pairs, then a/b selector quads.
std::vector<std::vector<int>> constraint_groups(const ReductionGraph& rg);

struct ReductionReport {
    bool sat = false;
    bool exists_witness = false;
    bool agreement = false;               // sat == exists_witness
    std::optional<std::vector<int>> witness;
    std::optional<bool> roundtrip_satisfies; // extracted assignment satisfies f
    std::uint64_t candidates_total = 0;
    double wall_time_ms = 0.0;

    std::string to_key_value() const;
};

/// Runs both directions at budget 2n + m: the brute-force SAT oracle, and
/// the constrained one-per-group enumeration on the gadget graph. The two
/// answers must agree; when both are positive the witness round-trips
/// through assignment extraction.
ReductionReport verify_reduction(const CnfFormula& f, const SolverOptions& opts = {});

} // namespace msetdim
