#pragma once

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace geogrowth {

struct GraphParseError : std::runtime_error {
    GraphParseError(const std::string& what, int line)
        : std::runtime_error(what + " at line " + std::to_string(line)), line_number(line) {}
    int line_number;
};

// Format: `#` starts a comment; first significant token is the vertex
// count; every following significant line declares one edge `u v`.
inline SimplicialGraph parse_graph_file(std::string_view text) {
    std::vector<std::pair<std::string, int>> rows;  // significant line, line number
    int lineno = 0;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        rows.emplace_back(line, lineno);
    }
    if (rows.empty()) throw GraphParseError("missing vertex count", lineno + 1);

    auto parse_ints = [](const std::pair<std::string, int>& row) {
        std::vector<long> out;
        std::istringstream ls(row.first);
        std::string tok;
        while (ls >> tok) {
            long v = 0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc{} || p != tok.data() + tok.size())
                throw GraphParseError("malformed token '" + tok + "'", row.second);
            out.push_back(v);
        }
        return out;
    };

    auto header = parse_ints(rows[0]);
    if (header.size() != 1 || header[0] < 0)
        throw GraphParseError("expected a nonnegative vertex count", rows[0].second);
    SimplicialGraph g(static_cast<int>(header[0]));

    for (std::size_t i = 1; i < rows.size(); ++i) {
        auto nums = parse_ints(rows[i]);
        if (nums.size() != 2)
            throw GraphParseError("expected an edge 'u v'", rows[i].second);
        long u = nums[0], v = nums[1];
        if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
            throw GraphParseError("vertex index out of range", rows[i].second);
        if (u == v) throw GraphParseError("loop", rows[i].second);
        if (g.is_adjacent(static_cast<int>(u), static_cast<int>(v)))
            throw GraphParseError("duplicate edge", rows[i].second);
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

// Emits the same format with edges sorted (u < v, lexicographic).
inline std::string write_graph_file(const SimplicialGraph& g) {
    std::string out = std::to_string(g.vertex_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace geogrowth
