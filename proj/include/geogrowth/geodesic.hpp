#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "formulas.hpp"
#include "graph.hpp"

namespace geogrowth {

// Generator letter: a vertex, possibly inverted (RAAG only; RACG
// generators are involutions and never carry an inverse).
struct Letter {
    int vertex = 0;
    bool inverse = false;

    friend bool operator==(const Letter&, const Letter&) = default;

    // Total order used by the shortlex normal form: by vertex, inverse first.
    friend bool operator<(const Letter& a, const Letter& b) {
        if (a.vertex != b.vertex) return a.vertex < b.vertex;
        return a.inverse && !b.inverse;
    }
};

struct Word {
    GroupKind kind = GroupKind::RACG;
    std::vector<Letter> letters;

    friend bool operator==(const Word&, const Word&) = default;
};

namespace detail {

inline void check_word(const SimplicialGraph& g, const Word& w) {
    for (const Letter& x : w.letters) {
        if (x.vertex < 0 || x.vertex >= g.vertex_count())
            throw std::out_of_range("word letter out of range");
        if (w.kind == GroupKind::RACG && x.inverse)
            throw std::invalid_argument("inverse letter in a RACG word");
    }
}

// True iff appending letters[j] to the geodesic prefix letters[0..j)
// breaks geodesity: some earlier occurrence of the same vertex (with the
// cancelling sign, for RAAG) is separated from j only by letters linked
// to that vertex.
inline bool last_letter_cancels(const SimplicialGraph& g, const std::vector<Letter>& letters,
                                std::size_t j, GroupKind kind) {
    const Letter& last = letters[j];
    for (std::size_t i = j; i-- > 0;) {
        if (letters[i].vertex == last.vertex) {
            if (kind == GroupKind::RACG) return true;
            if (letters[i].inverse != last.inverse) return true;
            return false;  // same signed letter blocks the commuting window
        }
        if (!g.is_adjacent(letters[i].vertex, last.vertex)) return false;
    }
    return false;
}

}  // namespace detail

inline bool is_geodesic(const SimplicialGraph& g, const Word& w) {
    detail::check_word(g, w);
    for (std::size_t j = 0; j < w.letters.size(); ++j)
        if (detail::last_letter_cancels(g, w.letters, j, w.kind)) return false;
    return true;
}

// Shortlex-least word representing the same group element, obtained by
// exhausting cancellations (nil moves) and then taking the least
// representative of the commutation class (braid moves only).
inline Word normal_form(const SimplicialGraph& g, const Word& w) {
    detail::check_word(g, w);
    std::vector<Letter> letters = w.letters;

    // Cancellation pass: delete pairs a...a (RACG) or a^e...a^-e (RAAG)
    // separated only by letters in Link(a), until the word is geodesic.
    bool reduced = true;
    while (reduced) {
        reduced = false;
        for (std::size_t j = 0; j < letters.size() && !reduced; ++j) {
            const Letter& last = letters[j];
            for (std::size_t i = j; i-- > 0;) {
                if (letters[i].vertex == last.vertex) {
                    bool cancels = w.kind == GroupKind::RACG || letters[i].inverse != last.inverse;
                    if (cancels) {
                        letters.erase(letters.begin() + j);
                        letters.erase(letters.begin() + i);
                        reduced = true;
                    }
                    break;
                }
                if (!g.is_adjacent(letters[i].vertex, last.vertex)) break;
            }
        }
    }

    // Greedy least-letter extraction within the commutation class.
    std::vector<Letter> out;
    out.reserve(letters.size());
    while (!letters.empty()) {
        std::size_t best = letters.size();
        for (std::size_t p = 0; p < letters.size(); ++p) {
            bool movable = true;
            for (std::size_t i = 0; i < p; ++i)
                if (!g.is_adjacent(letters[i].vertex, letters[p].vertex)) {
                    movable = false;
                    break;
                }
            if (movable && (best == letters.size() || letters[p] < letters[best])) best = p;
        }
        out.push_back(letters[best]);
        letters.erase(letters.begin() + best);
    }
    return Word{w.kind, std::move(out)};
}

}  // namespace geogrowth
