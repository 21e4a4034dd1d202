#pragma once

// Randomized property suites shared by the property-test binary and the
// acceptance runner. Every suite draws its own deterministic generator,
// so each is runnable standalone.

#include <random>
#include <vector>

#include <geogrowth/geogrowth.hpp>

namespace properties {

constexpr unsigned kSeed = 20240615;
constexpr int kInstances = 200;

using namespace geogrowth;

inline Polynomial random_poly(std::mt19937& rng, int max_deg = 4, int max_abs = 6) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coeff(-max_abs, max_abs);
    std::vector<Rational> v(deg(rng) + 1);
    for (auto& c : v) c = coeff(rng);
    return Polynomial(std::move(v));
}

inline Polynomial random_nonzero_poly(std::mt19937& rng, int max_deg = 4, int max_abs = 6) {
    for (;;) {
        Polynomial p = random_poly(rng, max_deg, max_abs);
        if (!p.is_zero()) return p;
    }
}

inline SimplicialGraph random_graph(std::mt19937& rng, int max_vertices = 6) {
    std::uniform_int_distribution<int> nv(1, max_vertices);
    int n = nv(rng);
    SimplicialGraph g(n);
    std::bernoulli_distribution edge(0.5);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(rng)) g.add_edge(u, v);
    return g;
}

inline Word random_word(std::mt19937& rng, const SimplicialGraph& g, GroupKind kind,
                        int max_len = 8) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> vertex(0, g.vertex_count() - 1);
    std::bernoulli_distribution sign(0.5);
    Word w;
    w.kind = kind;
    int k = len(rng);
    for (int i = 0; i < k; ++i)
        w.letters.push_back({vertex(rng), kind == GroupKind::RAAG && sign(rng)});
    return w;
}

// (a+b)c = ac+bc and divmod reconstruction.
inline bool polynomial_ring_axioms() {
    std::mt19937 rng(kSeed);
    for (int i = 0; i < kInstances; ++i) {
        Polynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        if (!((a + b) * c == a * c + b * c)) return false;
        Polynomial d = random_nonzero_poly(rng);
        auto [q, r] = Polynomial::divmod(a, d);
        if (!(q * d + r == a)) return false;
        if (!(r.is_zero() || r.degree() < d.degree())) return false;
    }
    return true;
}

// gcd divides both arguments; gcd(ag, bg) = g*gcd(a,b) up to canonical scaling.
inline bool gcd_laws() {
    std::mt19937 rng(kSeed + 1);
    for (int i = 0; i < kInstances; ++i) {
        Polynomial a = random_nonzero_poly(rng), b = random_nonzero_poly(rng);
        Polynomial g = Polynomial::gcd(a, b);
        if (!Polynomial::divmod(a, g).second.is_zero()) return false;
        if (!Polynomial::divmod(b, g).second.is_zero()) return false;
        Polynomial m = random_nonzero_poly(rng, 2, 3);
        Polynomial lhs = Polynomial::gcd(a * m, b * m);
        Polynomial rhs = (g * m).primitive_part();
        if (!(lhs == rhs)) return false;
    }
    return true;
}

// series(f*g) is the Cauchy convolution of series(f) and series(g).
inline bool series_convolution_law() {
    std::mt19937 rng(kSeed + 2);
    const std::size_t len = 8;
    for (int i = 0; i < kInstances; ++i) {
        Polynomial dens[2];
        for (auto& d : dens) {
            for (;;) {
                d = random_nonzero_poly(rng, 3, 4);
                if (d.coeff(0) != 0) break;
            }
        }
        RationalFunction f(random_poly(rng), dens[0]);
        RationalFunction g(random_poly(rng), dens[1]);
        auto sf = series_coefficients(f, len);
        auto sg = series_coefficients(g, len);
        auto sfg = series_coefficients(f * g, len);
        for (std::size_t k = 0; k <= len; ++k) {
            Rational acc(0);
            for (std::size_t j = 0; j <= k; ++j) acc += sf[j] * sg[k - j];
            if (acc != sfg[k]) return false;
        }
    }
    return true;
}

// Re-normalizing a canonical fraction changes nothing, and equality is
// exactly cross-multiplication.
inline bool normalization_idempotent() {
    std::mt19937 rng(kSeed + 3);
    for (int i = 0; i < kInstances; ++i) {
        RationalFunction f(random_poly(rng), random_nonzero_poly(rng));
        RationalFunction again(f.num(), f.den());
        if (!(f.num() == again.num() && f.den() == again.den())) return false;
        Polynomial m = random_nonzero_poly(rng, 2, 3);
        if (!(f == RationalFunction(f.num() * m, f.den() * m))) return false;
    }
    return true;
}

// A x - b vanishes exactly, componentwise.
inline bool solver_residual_zero() {
    std::mt19937 rng(kSeed + 4);
    std::uniform_int_distribution<int> dim(1, 4);
    int checked = 0;
    while (checked < kInstances) {
        int n = dim(rng);
        std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n));
        std::vector<Polynomial> b(n);
        for (auto& row : a)
            for (auto& e : row) e = random_poly(rng, 2, 3);
        for (auto& e : b) e = random_poly(rng, 2, 3);
        std::vector<RationalFunction> x;
        try {
            x = solve_linear_system(a, b);
        } catch (const SingularSystem&) {
            continue;
        }
        for (int i = 0; i < n; ++i) {
            RationalFunction acc = -RationalFunction(b[i]);
            for (int j = 0; j < n; ++j) acc = acc + RationalFunction(a[i][j]) * x[j];
            if (!acc.is_zero()) return false;
        }
        ++checked;
    }
    return true;
}

// Every prefix of a geodesic is geodesic.
inline bool prefix_closure() {
    std::mt19937 rng(kSeed + 5);
    int checked = 0;
    while (checked < kInstances) {
        SimplicialGraph g = random_graph(rng);
        GroupKind kind = checked % 2 == 0 ? GroupKind::RACG : GroupKind::RAAG;
        Word w = random_word(rng, g, kind);
        if (!is_geodesic(g, w)) continue;
        Word prefix{kind, {}};
        for (const Letter& x : w.letters) {
            prefix.letters.push_back(x);
            if (!is_geodesic(g, prefix)) return false;
        }
        ++checked;
    }
    return true;
}

// Length never grows; geodesic iff length preserved; idempotent; and
// normal forms are invariant under normalizing a prefix first.
inline bool normal_form_laws() {
    std::mt19937 rng(kSeed + 6);
    for (int i = 0; i < kInstances; ++i) {
        SimplicialGraph g = random_graph(rng);
        GroupKind kind = i % 2 == 0 ? GroupKind::RACG : GroupKind::RAAG;
        Word w = random_word(rng, g, kind);
        Word nf = normal_form(g, w);
        if (nf.letters.size() > w.letters.size()) return false;
        if (is_geodesic(g, w) != (nf.letters.size() == w.letters.size())) return false;
        if (!(normal_form(g, nf) == nf)) return false;

        // normalize(u . v) = normalize(normalize(u) . v)
        std::uniform_int_distribution<std::size_t> cut(0, w.letters.size());
        std::size_t c = cut(rng);
        Word u{kind, {w.letters.begin(), w.letters.begin() + c}};
        Word nu = normal_form(g, u);
        Word mixed = nu;
        mixed.letters.insert(mixed.letters.end(), w.letters.begin() + c, w.letters.end());
        if (!(normal_form(g, mixed) == nf)) return false;
    }
    return true;
}

}  // namespace properties
