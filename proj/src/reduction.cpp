#include "msetdim/reduction.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <unordered_set>

#include "msetdim/errors.hpp"

namespace msetdim {

namespace {

std::string role(const char* kind, int i) { return std::string(kind) + ":" + std::to_string(i); }
std::string role(const char* kind, int i, int h) {
    return std::string(kind) + ":" + std::to_string(i) + ":" + std::to_string(h);
}

void validate_clause(const std::vector<int>& lits, int variable_count, int lineno) {
    if (lits.size() != 3)
        throw ParseError("clause has " + std::to_string(lits.size()) + " literals, expected 3",
                         lineno);
    for (int lit : lits) {
        int var = std::abs(lit);
        if (var < 1 || var > variable_count)
            throw ParseError("variable " + std::to_string(var) + " out of range", lineno);
    }
    for (std::size_t a = 0; a < lits.size(); ++a) {
        for (std::size_t b = a + 1; b < lits.size(); ++b) {
            if (lits[a] == -lits[b])
                throw ParseError("clause contains both polarities of variable " +
                                     std::to_string(std::abs(lits[a])),
                                 lineno);
            if (lits[a] == lits[b])
                throw ParseError("clause repeats variable " + std::to_string(std::abs(lits[a])),
                                 lineno);
        }
    }
}

} // namespace

CnfFormula parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    bool have_header = false;
    long long want_clauses = 0;
    CnfFormula f;
    std::vector<int> current;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c" || tok[0] == 'c') continue;
        if (tok == "p") {
            if (have_header) throw ParseError("duplicate problem line", lineno);
            std::string fmt;
            long long nv = -1, nc = -1;
            if (!(ls >> fmt >> nv >> nc) || fmt != "cnf" || nv < 0 || nc < 0)
                throw ParseError("malformed problem line, expected \"p cnf <vars> <clauses>\"",
                                 lineno);
            have_header = true;
            f.variable_count = static_cast<int>(nv);
            want_clauses = nc;
            continue;
        }
        if (!have_header) throw ParseError("literal before the problem line", lineno);
        ls.clear();
        ls.str(line);
        long long lit = 0;
        while (ls >> lit) {
            if (lit == 0) {
                validate_clause(current, f.variable_count, lineno);
                Clause clause;
                for (int t = 0; t < 3; ++t)
                    clause.lits[static_cast<std::size_t>(t)] = {std::abs(current[static_cast<std::size_t>(t)]),
                                                                current[static_cast<std::size_t>(t)] > 0};
                f.clauses.push_back(clause);
                current.clear();
            } else {
                current.push_back(static_cast<int>(lit));
            }
        }
        if (!ls.eof()) throw ParseError("unexpected token", lineno);
    }
    if (!have_header) throw ParseError("missing problem line");
    if (!current.empty()) throw ParseError("unterminated clause at end of input", lineno);
    if (f.clause_count() != want_clauses)
        throw ParseError("header promised " + std::to_string(want_clauses) + " clauses, found " +
                         std::to_string(f.clause_count()));
    return f;
}

bool satisfies(const CnfFormula& f, const Assignment& a) {
    for (const Clause& clause : f.clauses) {
        bool ok = false;
        for (const Literal& lit : clause.lits)
            if (a.value(lit.var) == lit.positive) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

std::optional<Assignment> sat_brute_force(const CnfFormula& f) {
    const int n = f.variable_count;
    if (n > 20)
        throw GuardError("brute-force satisfiability guard: " + std::to_string(n) +
                         " variables exceed the limit of 20");
    Assignment a;
    a.values.assign(static_cast<std::size_t>(n), false);
    // x1 is the most significant position, false sorts before true
    for (std::uint64_t word = 0; word < (std::uint64_t{1} << n); ++word) {
        for (int i = 1; i <= n; ++i)
            a.values[static_cast<std::size_t>(i) - 1] = (word >> (n - i)) & 1;
        if (satisfies(f, a)) return a;
    }
    return std::nullopt;
}

int ReductionGraph::vertex(const std::string& name) const {
    auto it = index.find(name);
    if (it == index.end()) throw std::invalid_argument("unknown role: " + name);
    return it->second;
}

std::string ReductionGraph::role_map_text() const {
    std::string out;
    for (std::size_t v = 0; v < roles.size(); ++v)
        out += std::to_string(v) + "\t" + roles[v] + "\n";
    return out;
}

ReductionGraph build_reduction(const CnfFormula& f) {
    const int n = f.variable_count;
    const int m = f.clause_count();

    ReductionGraph rg;
    rg.variable_count = n;
    rg.clause_count = m;
    for (int i = 1; i <= n; ++i) rg.tail_t.push_back(5 * (i + 1));
    for (int j = 1; j <= m; ++j) rg.tail_s.push_back(5 * (n + j + 1));

    auto add = [&rg](std::string name) {
        rg.index.emplace(name, static_cast<int>(rg.roles.size()));
        rg.roles.push_back(std::move(name));
    };
    for (int i = 1; i <= n; ++i) {
        add(role("T", i));
        add(role("F", i));
        add(role("a", i, 1));
        add(role("a", i, 2));
        add(role("b", i, 1));
        add(role("b", i, 2));
        for (int h = 1; h <= rg.tail_t[static_cast<std::size_t>(i) - 1]; ++h) add(role("d", i, h));
        add(role("e", i, 1));
        add(role("e", i, 2));
    }
    for (int j = 1; j <= m; ++j) {
        add(role("c", j, 1));
        add(role("c", j, 2));
        add(role("c", j, 3));
        for (int h = 1; h <= rg.tail_s[static_cast<std::size_t>(j) - 1]; ++h) add(role("f", j, h));
        add(role("g", j, 1));
        add(role("g", j, 2));
    }

    std::vector<std::pair<int, int>> edges;
    auto link = [&](const std::string& u, const std::string& v) {
        edges.emplace_back(rg.index.at(u), rg.index.at(v));
    };

    for (int i = 1; i <= n; ++i) {
        const int t = rg.tail_t[static_cast<std::size_t>(i) - 1];
        link(role("a", i, 1), role("b", i, 1));
        link(role("a", i, 2), role("b", i, 2));
        link(role("T", i), role("a", i, 1));
        link(role("T", i), role("a", i, 2));
        link(role("F", i), role("b", i, 1));
        link(role("F", i), role("b", i, 2));
        link(role("d", i, 1), role("T", i));
        link(role("d", i, 1), role("F", i));
        for (int h = 1; h < t; ++h) link(role("d", i, h), role("d", i, h + 1));
        link(role("d", i, t), role("e", i, 1));
        link(role("d", i, t), role("e", i, 2));
        // T:i-F:i and e:i:1-e:i:2 stay non-edges; the tips must remain open twins
    }
    for (int j = 1; j <= m; ++j) {
        const int s = rg.tail_s[static_cast<std::size_t>(j) - 1];
        link(role("c", j, 1), role("c", j, 2));
        link(role("c", j, 2), role("c", j, 3));
        link(role("c", j, 2), role("f", j, 1));
        for (int h = 1; h < s; ++h) link(role("f", j, h), role("f", j, h + 1));
        link(role("f", j, s), role("g", j, 1));
        link(role("f", j, s), role("g", j, 2));

        const Clause& clause = f.clauses[static_cast<std::size_t>(j) - 1];
        for (int i = 1; i <= n; ++i) {
            link(role("c", j, 1), role("T", i));
            link(role("c", j, 1), role("F", i));
            const Literal* occurrence = nullptr;
            for (const Literal& lit : clause.lits)
                if (lit.var == i) occurrence = &lit;
            if (occurrence == nullptr) {
                link(role("c", j, 3), role("T", i));
                link(role("c", j, 3), role("F", i));
            } else if (occurrence->positive) {
                link(role("c", j, 3), role("F", i));
            } else {
                link(role("c", j, 3), role("T", i));
            }
        }
    }

    rg.graph = Graph::from_edge_list(static_cast<int>(rg.roles.size()), edges, rg.roles);
    return rg;
}

int target_k(const CnfFormula& f) { return 2 * f.variable_count + f.clause_count(); }

std::vector<int> witness_from_assignment(const ReductionGraph& rg, const Assignment& a) {
    std::vector<int> s;
    for (int i = 1; i <= rg.variable_count; ++i) {
        s.push_back(rg.vertex(role("e", i, 1)));
        s.push_back(rg.vertex(a.value(i) ? role("a", i, 1) : role("b", i, 1)));
    }
    for (int j = 1; j <= rg.clause_count; ++j) s.push_back(rg.vertex(role("g", j, 1)));
    std::sort(s.begin(), s.end());
    return s;
}

Assignment assignment_from_basis(const ReductionGraph& rg, std::span<const int> s) {
    if (static_cast<int>(s.size()) != 2 * rg.variable_count + rg.clause_count)
        throw std::invalid_argument("basis size must be 2n + m");
    std::unordered_set<int> chosen(s.begin(), s.end());
    Assignment a;
    a.values.assign(static_cast<std::size_t>(rg.variable_count), false);
    for (int i = 1; i <= rg.variable_count; ++i) {
        const bool has_a = chosen.count(rg.vertex(role("a", i, 1))) ||
                           chosen.count(rg.vertex(role("a", i, 2)));
        const bool has_b = chosen.count(rg.vertex(role("b", i, 1))) ||
                           chosen.count(rg.vertex(role("b", i, 2)));
        if (!has_a && !has_b)
            throw std::invalid_argument("no truth selector for variable " + std::to_string(i) +
                                        " in the basis");
        a.values[static_cast<std::size_t>(i) - 1] = has_a;
    }
    return a;
}

std::vector<std::vector<int>> constraint_groups(const ReductionGraph& rg) {
    std::vector<std::vector<int>> groups;
    for (int i = 1; i <= rg.variable_count; ++i)
        groups.push_back({rg.vertex(role("e", i, 1)), rg.vertex(role("e", i, 2))});
    for (int j = 1; j <= rg.clause_count; ++j)
        groups.push_back({rg.vertex(role("g", j, 1)), rg.vertex(role("g", j, 2))});
    for (int i = 1; i <= rg.variable_count; ++i)
        groups.push_back({rg.vertex(role("a", i, 1)), rg.vertex(role("a", i, 2)),
                          rg.vertex(role("b", i, 1)), rg.vertex(role("b", i, 2))});
    return groups;
}

std::string ReductionReport::to_key_value() const {
    std::string out;
    auto flag = [](bool b) { return b ? "true" : "false"; };
    out += std::string("sat = ") + flag(sat) + "\n";
    out += std::string("exists_witness = ") + flag(exists_witness) + "\n";
    out += std::string("agreement = ") + flag(agreement) + "\n";
    if (witness) {
        out += "witness = ";
        for (std::size_t i = 0; i < witness->size(); ++i) {
            if (i) out += ',';
            out += std::to_string((*witness)[i]);
        }
        out += "\n";
    }
    if (roundtrip_satisfies)
        out += std::string("roundtrip_satisfies = ") + flag(*roundtrip_satisfies) + "\n";
    out += "candidates_total = " + std::to_string(candidates_total) + "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "wall_time_ms = %.3f\n", wall_time_ms);
    out += buf;
    return out;
}

ReductionReport verify_reduction(const CnfFormula& f, const SolverOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    ReductionReport report;
    report.sat = sat_brute_force(f).has_value();

    const ReductionGraph rg = build_reduction(f);
    const auto groups = constraint_groups(rg);
    report.candidates_total = 1;
    for (const auto& group : groups) report.candidates_total *= group.size();

    auto witness =
        multiset_dimension_constrained(rg.graph, groups, target_k(f), opts);
    report.exists_witness = witness.has_value();
    report.agreement = (report.sat == report.exists_witness);
    if (witness) {
        Assignment extracted = assignment_from_basis(rg, *witness);
        report.roundtrip_satisfies = satisfies(f, extracted);
        report.witness = std::move(witness);
    }
    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

} // namespace msetdim
