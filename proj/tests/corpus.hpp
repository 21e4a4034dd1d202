#pragma once

#include <string>
#include <utility>
#include <vector>

#include <geogrowth/families.hpp>
#include <geogrowth/graph.hpp>

namespace corpus {

inline geogrowth::SimplicialGraph two_disjoint_squares() {
    return geogrowth::disjoint_union(geogrowth::cycle_graph(4), geogrowth::cycle_graph(4));
}

inline geogrowth::SimplicialGraph octahedron() { return geogrowth::triangle_double_graph(1); }

// Graphs used across the cross-validation suites.
inline std::vector<std::pair<std::string, geogrowth::SimplicialGraph>> all() {
    using geogrowth::generate_family;
    std::vector<std::pair<std::string, geogrowth::SimplicialGraph>> out;
    for (int n = 1; n <= 5; ++n)
        out.emplace_back("discrete:" + std::to_string(n), generate_family("discrete:" + std::to_string(n)));
    out.emplace_back("cycle:5", generate_family("cycle:5"));
    out.emplace_back("cycle:8", generate_family("cycle:8"));
    out.emplace_back("two_squares", two_disjoint_squares());
    out.emplace_back("k33", generate_family("complete_bipartite:3,3"));
    out.emplace_back("triangle", generate_family("cycle:3"));
    out.emplace_back("octahedron", octahedron());
    out.emplace_back("petersen", generate_family("petersen"));
    out.emplace_back("triangle_double:2", generate_family("triangle_double:2"));
    return out;
}

}  // namespace corpus
