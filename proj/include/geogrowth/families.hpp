#pragma once

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace geogrowth {

namespace detail {

inline long parse_long(std::string_view s) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("invalid size in family spec: '" + std::string(s) + "'");
    return value;
}

inline std::vector<long> parse_sizes(std::string_view s, std::size_t expected) {
    std::vector<long> out;
    while (!s.empty()) {
        std::size_t comma = s.find(',');
        out.push_back(parse_long(s.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    if (out.size() != expected)
        throw std::invalid_argument("family spec expects " + std::to_string(expected) +
                                    " size argument(s)");
    return out;
}

}  // namespace detail

inline SimplicialGraph discrete_graph(int n) { return SimplicialGraph(n); }

inline SimplicialGraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires at least 3 vertices");
    SimplicialGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline SimplicialGraph complete_graph(int n) {
    SimplicialGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline SimplicialGraph complete_bipartite_graph(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("invalid bipartite part size");
    SimplicialGraph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

inline SimplicialGraph petersen_graph() {
    SimplicialGraph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);      // outer pentagon
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);            // spokes
    }
    return g;
}

// The m-fold double of the triangle; params (3*2^m, 2*2^m, 2^m).
inline SimplicialGraph triangle_double_graph(int m) {
    if (m < 0) throw std::invalid_argument("invalid doubling depth");
    SimplicialGraph g = complete_graph(3);
    for (int i = 0; i < m; ++i) g = double_graph(g);
    return g;
}

inline SimplicialGraph disjoint_union(const SimplicialGraph& a, const SimplicialGraph& b) {
    SimplicialGraph g(a.vertex_count() + b.vertex_count());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(u + a.vertex_count(), v + a.vertex_count());
    return g;
}

// Specs: discrete:n, cycle:n, complete:n, complete_bipartite:a,b,
// petersen, triangle_double:m.
inline SimplicialGraph generate_family(std::string_view spec) {
    std::size_t colon = spec.find(':');
    std::string_view name = spec.substr(0, colon);
    std::string_view args = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
    if (name == "petersen") {
        if (!args.empty()) throw std::invalid_argument("petersen takes no size");
        return petersen_graph();
    }
    if (name == "discrete") return discrete_graph(static_cast<int>(detail::parse_sizes(args, 1)[0]));
    if (name == "cycle") return cycle_graph(static_cast<int>(detail::parse_sizes(args, 1)[0]));
    if (name == "complete") return complete_graph(static_cast<int>(detail::parse_sizes(args, 1)[0]));
    if (name == "complete_bipartite") {
        auto s = detail::parse_sizes(args, 2);
        return complete_bipartite_graph(static_cast<int>(s[0]), static_cast<int>(s[1]));
    }
    if (name == "triangle_double")
        return triangle_double_graph(static_cast<int>(detail::parse_sizes(args, 1)[0]));
    throw std::invalid_argument("unknown graph family: '" + std::string(name) + "'");
}

}  // namespace geogrowth
