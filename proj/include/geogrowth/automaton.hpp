#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "geodesic.hpp"
#include "graph.hpp"

namespace geogrowth {

// Per-length geodesic counts; the universal comparison format.
struct CensusReport {
    std::string method;
    std::vector<Integer> counts;  // counts[k] = geodesic words of length k
};

// Deterministic acceptor of the RACG geodesic language. States are the
// cliques of the graph; the state reached by a geodesic w is the set of
// letters a that would close a factorization x a y a with y on Link(a)
// if appended. Any earlier member of that set must link every later
// letter, so the set is a clique, and appending b from state sigma
// (b outside sigma) leads to {b} union (sigma intersect Link(b)).
class CliqueAutomaton {
public:
    explicit CliqueAutomaton(const SimplicialGraph& graph)
        : graph_(graph), states_(enumerate_cliques(graph)) {
        std::map<Clique, int> index;
        for (std::size_t s = 0; s < states_.size(); ++s) index[states_[s]] = static_cast<int>(s);
        const int n = graph.vertex_count();
        transitions_.assign(states_.size(), std::vector<int>(n, -1));
        for (std::size_t s = 0; s < states_.size(); ++s) {
            const Clique& sigma = states_[s];
            for (int b = 0; b < n; ++b) {
                if (std::binary_search(sigma.begin(), sigma.end(), b)) continue;
                Clique target{b};
                for (int v : sigma)
                    if (graph.is_adjacent(v, b)) target.push_back(v);
                std::sort(target.begin(), target.end());
                auto it = index.find(target);
                if (it == index.end()) throw std::logic_error("transition target is not a clique");
                transitions_[s][b] = it->second;
            }
        }
    }

    const SimplicialGraph& graph() const { return graph_; }
    const std::vector<Clique>& states() const { return states_; }
    std::size_t state_count() const { return states_.size(); }

    // -1 when letter is forbidden (would destroy geodesity).
    int transition(int state, int letter) const { return transitions_[state][letter]; }

private:
    SimplicialGraph graph_;
    std::vector<Clique> states_;
    std::vector<std::vector<int>> transitions_;
};

inline CliqueAutomaton build_automaton(const SimplicialGraph& g) { return CliqueAutomaton(g); }

// counts[k] = number of length-k paths from the start state (the empty clique).
inline CensusReport automaton_census(const CliqueAutomaton& a, std::size_t max_len) {
    CensusReport report;
    report.method = "automaton";
    report.counts.assign(max_len + 1, Integer(0));
    std::vector<Integer> occ(a.state_count(), Integer(0));
    occ[0] = 1;  // start = empty clique, first in size-then-lex order
    report.counts[0] = 1;
    const int n = a.graph().vertex_count();
    for (std::size_t k = 1; k <= max_len; ++k) {
        std::vector<Integer> next(a.state_count(), Integer(0));
        for (std::size_t s = 0; s < a.state_count(); ++s) {
            if (occ[s] == 0) continue;
            for (int b = 0; b < n; ++b) {
                int t = a.transition(static_cast<int>(s), b);
                if (t >= 0) next[t] += occ[s];
            }
        }
        occ = std::move(next);
        Integer total(0);
        for (const Integer& c : occ) total += c;
        report.counts[k] = total;
    }
    return report;
}

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded() : std::runtime_error("brute-force census budget exceeded") {}
};

// Depth-first enumeration of geodesic words, pruning non-geodesic
// prefixes (prefixes of geodesics are geodesic). Independent of the
// automaton: only the incremental last-letter criterion is used.
inline CensusReport brute_census(const SimplicialGraph& g, std::size_t max_len, GroupKind kind,
                                 unsigned long long budget = 20'000'000ULL) {
    CensusReport report;
    report.method = kind == GroupKind::RACG ? "brute" : "raag-brute";
    report.counts.assign(max_len + 1, Integer(0));
    report.counts[0] = 1;

    std::vector<Letter> alphabet;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (kind == GroupKind::RAAG) alphabet.push_back({v, true});
        alphabet.push_back({v, false});
    }

    std::vector<Letter> word;
    unsigned long long visited = 0;
    auto dfs = [&](auto&& self) -> void {
        if (word.size() == max_len) return;
        for (const Letter& x : alphabet) {
            word.push_back(x);
            if (!detail::last_letter_cancels(g, word, word.size() - 1, kind)) {
                if (++visited > budget) throw BudgetExceeded();
                report.counts[word.size()] += 1;
                self(self);
            }
            word.pop_back();
        }
    };
    dfs(dfs);
    return report;
}

// RAAG census through the double graph: the geodesic language of the
// RAAG on Gamma has the same counts as the RACG on the double of Gamma.
inline CensusReport raag_census_via_double(const SimplicialGraph& g, std::size_t max_len) {
    CensusReport report = automaton_census(build_automaton(double_graph(g)), max_len);
    report.method = "raag-double";
    return report;
}

}  // namespace geogrowth
