#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace geogrowth {

using Clique = std::vector<int>;  // sorted, no duplicates

// Finite simple graph with 0-based vertex indices.
class SimplicialGraph {
public:
    explicit SimplicialGraph(int vertex_count) : adj_(check_count(vertex_count)) {}

    SimplicialGraph(int vertex_count, const std::vector<std::pair<int, int>>& edges)
        : SimplicialGraph(vertex_count) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loop edge");
        if (is_adjacent(u, v)) throw std::invalid_argument("duplicate edge");
        insert_sorted(adj_[u], v);
        insert_sorted(adj_[v], u);
    }

    bool is_adjacent(int u, int v) const {
        const auto& a = adj_[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    int edge_count() const {
        std::size_t total = 0;
        for (const auto& a : adj_) total += a.size();
        return static_cast<int>(total / 2);
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool is_clique(const Clique& sigma) const {
        for (std::size_t i = 0; i < sigma.size(); ++i) {
            check_vertex(sigma[i]);
            for (std::size_t j = i + 1; j < sigma.size(); ++j) {
                if (sigma[i] == sigma[j] || !is_adjacent(sigma[i], sigma[j])) return false;
            }
        }
        return true;
    }

private:
    static int check_count(int n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        return n;
    }
    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count()) throw std::out_of_range("vertex index out of range");
    }
    static void insert_sorted(std::vector<int>& a, int v) {
        a.insert(std::lower_bound(a.begin(), a.end(), v), v);
    }

    std::vector<std::vector<int>> adj_;
};

// Vertices outside sigma adjacent to every member of sigma.
inline std::vector<int> link(const SimplicialGraph& g, const Clique& sigma) {
    if (!g.is_clique(sigma)) throw std::invalid_argument("vertex set is not a clique");
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (std::binary_search(sigma.begin(), sigma.end(), v)) continue;
        bool all = true;
        for (int u : sigma)
            if (!g.is_adjacent(u, v)) {
                all = false;
                break;
            }
        if (all) out.push_back(v);
    }
    return out;
}

inline std::vector<int> star(const SimplicialGraph& g, const Clique& sigma) {
    std::vector<int> out = link(g, sigma);
    out.insert(out.end(), sigma.begin(), sigma.end());
    std::sort(out.begin(), out.end());
    return out;
}

// All cliques including the empty one, ordered by size then lexicographically.
inline std::vector<Clique> enumerate_cliques(const SimplicialGraph& g) {
    std::vector<Clique> out;
    Clique current;
    auto extend = [&](auto&& self, int from) -> void {
        out.push_back(current);
        for (int v = from; v < g.vertex_count(); ++v) {
            bool ok = true;
            for (int u : current)
                if (!g.is_adjacent(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            current.push_back(v);
            self(self, v + 1);
            current.pop_back();
        }
    };
    extend(extend, 0);
    std::stable_sort(out.begin(), out.end(), [](const Clique& a, const Clique& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

// Coefficient of z^k counts the k-cliques; constant term 1 for the empty clique.
inline Polynomial f_polynomial(const SimplicialGraph& g) {
    std::vector<Rational> coeffs;
    for (const Clique& c : enumerate_cliques(g)) {
        if (c.size() >= coeffs.size()) coeffs.resize(c.size() + 1, Rational(0));
        coeffs[c.size()] += 1;
    }
    return Polynomial(std::move(coeffs));
}

struct LinkRegularParams {
    long n = 0;
    long l = 0;
    long q = 0;

    friend bool operator==(const LinkRegularParams&, const LinkRegularParams&) = default;
};

// Two same-size cliques whose links differ in size.
struct LinkRegularityWitness {
    Clique first;
    std::size_t first_link_size = 0;
    Clique second;
    std::size_t second_link_size = 0;
};

struct LinkRegularityReport {
    std::optional<LinkRegularParams> params;  // set iff link-regular for sizes 1..3
    std::optional<LinkRegularityWitness> witness;
    bool tetra_free = false;

    bool is_link_regular() const { return params.has_value(); }
};

inline LinkRegularityReport check_link_regular(const SimplicialGraph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
    LinkRegularityReport report;
    std::vector<Clique> cliques = enumerate_cliques(g);
    report.tetra_free = std::none_of(cliques.begin(), cliques.end(),
                                     [](const Clique& c) { return c.size() >= 4; });
    // Per-size equality of link cardinalities, sizes 1..3.
    std::optional<std::size_t> size_of[4];
    Clique first_of[4];
    for (const Clique& c : cliques) {
        if (c.empty() || c.size() > 3) continue;
        std::size_t ls = link(g, c).size();
        auto& seen = size_of[c.size()];
        if (!seen) {
            seen = ls;
            first_of[c.size()] = c;
        } else if (*seen != ls) {
            report.witness = LinkRegularityWitness{first_of[c.size()], *seen, c, ls};
            return report;
        }
    }
    LinkRegularParams p;
    p.n = g.vertex_count();
    p.l = size_of[1] ? static_cast<long>(*size_of[1]) : 0;
    p.q = size_of[2] ? static_cast<long>(*size_of[2]) : 0;
    report.params = p;
    return report;
}

// Advisory realizability facts: edge count n*l/2, triangle count n*l*q/6.
inline bool params_realizable(const LinkRegularParams& p) {
    return (p.n * p.l) % 2 == 0 && (p.n * p.l * p.q) % 6 == 0;
}

// Double graph: two copies of V; each edge {u,v} yields the four edges
// {u,v}, {u',v}, {u,v'}, {u',v'}; never an edge {v,v'}.
inline SimplicialGraph double_graph(const SimplicialGraph& g) {
    int n = g.vertex_count();
    SimplicialGraph d(2 * n);
    for (auto [u, v] : g.edges()) {
        d.add_edge(u, v);
        d.add_edge(u + n, v);
        d.add_edge(u, v + n);
        d.add_edge(u + n, v + n);
    }
    return d;
}

}  // namespace geogrowth
