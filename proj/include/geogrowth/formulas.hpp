#pragma once

#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "linear_solver.hpp"
#include "polynomial.hpp"
#include "rational_function.hpp"

namespace geogrowth {

enum class GroupKind { RACG, RAAG };

// Coefficient polynomials of the geodesic-count linear system for a
// link-regular tetrahedron-free graph with parameters (n, l, q).
inline Polynomial p_delta(long n, long l, long q) {
    return Polynomial({Rational(1), Rational(-(n + l - 2 * q - 3)),
                       Rational(2 * (n - l - 1) * (l - q - 1) - l * (n - 2 * l + q))});
}

inline Rational p_e(long n, long l, long q) {
    return Rational(n * n + l * l - 2 * q * q + n * l - 2 * n * q - 2 * l * q - 4 * n - 6 * l +
                    10 * q + 7);
}

inline Rational p_v(long n, long l, long q) {
    long t = n - l - 1;
    return Rational(t * t * t + 2 * l * (n - 2 * l + q) * (n - q - 2) + l * q * (n - 3 * l + 3 * q));
}

// Closed form of the geodesic growth series of the RACG, constant term
// included:
//   G(z) = 1 + n z (1 + (5-l-q) z + (lq-3l+6) z^2) /
//          (1 + (6-n-l-q) z + (nl+lq+qn-5n-3l-q+11) z^2 + (3nl+6-nlq-6n) z^3)
inline RationalFunction closed_formula_racg(const LinkRegularParams& p) {
    long n = p.n, l = p.l, q = p.q;
    Polynomial num = Polynomial::monomial(Rational(n), 1) *
                     Polynomial({Rational(1), Rational(5 - l - q), Rational(l * q - 3 * l + 6)});
    Polynomial den({Rational(1), Rational(6 - n - l - q),
                    Rational(n * l + l * q + q * n - 5 * n - 3 * l - q + 11),
                    Rational(3 * n * l + 6 - n * l * q - 6 * n)});
    return RationalFunction(num + den, den);
}

// Triangle-free specialization:
//   G(z) = 1 + n z (1 + (2-l) z) / (1 + (3-n-l) z + (nl-2n+2) z^2)
inline RationalFunction triangle_free_formula(long n, long l) {
    Polynomial num = Polynomial::monomial(Rational(n), 1) * Polynomial({Rational(1), Rational(2 - l)});
    Polynomial den({Rational(1), Rational(3 - n - l), Rational(n * l - 2 * n + 2)});
    return RationalFunction(num + den, den);
}

// RAAG series over the doubled parameters (2n, 2l, 2q).
inline RationalFunction closed_formula_raag(const LinkRegularParams& p) {
    return closed_formula_racg({2 * p.n, 2 * p.l, 2 * p.q});
}

// The displayed RAAG fraction, built term by term; must agree with
// closed_formula_raag on every triple.
inline RationalFunction closed_formula_raag_displayed(const LinkRegularParams& p) {
    long n = p.n, l = p.l, q = p.q;
    Polynomial num = Polynomial::monomial(Rational(2 * n), 1) *
                     Polynomial({Rational(1), Rational(5 - 2 * l - 2 * q),
                                 Rational(4 * l * q - 6 * l + 6)});
    Polynomial den({Rational(1), Rational(6 - 2 * n - 2 * l - 2 * q),
                    Rational(4 * n * l + 4 * l * q + 4 * q * n - 10 * n - 6 * l - 2 * q + 11),
                    Rational(12 * n * l + 6 - 8 * n * l * q - 12 * n)});
    return RationalFunction(num + den, den);
}

// Closed form for the iterated-double triangle family, k = 2^m:
//   G(z) = -(6 z^3 + (2k^2-7k+11) z^2 - 3(k-2) z + 1) /
//          ((z(k-1)-1)(2z(k-1)-1)(3z(k-1)-1))
inline RationalFunction example_family_formula(long k) {
    if (k < 1) throw std::invalid_argument("family parameter must be >= 1");
    Polynomial num({Rational(1), Rational(-3 * (k - 2)), Rational(2 * k * k - 7 * k + 11),
                    Rational(6)});
    Polynomial f1({Rational(-1), Rational(k - 1)});
    Polynomial f2({Rational(-1), Rational(2 * (k - 1))});
    Polynomial f3({Rational(-1), Rational(3 * (k - 1))});
    return RationalFunction(-num, f1 * f2 * f3);
}

// Solved values of the five unknowns of the geodesic-count system:
// G-1 and the partial sums over geodesics ending in a vertex, an edge,
// a triangle, and a length-4 suffix.
struct SystemBundle {
    RationalFunction g;       // G(z), constant term included
    RationalFunction e_v;     // sum over vertices of E_a
    RationalFunction e_e;     // sum over edges of E_e
    RationalFunction e_delta; // sum over triangles of E_Delta
    RationalFunction e_abcd;  // sum over length-4 suffixes
};

// Sets up the five equations in the unknowns
//   x0 = G - 1, x1 = sum E_a, x2 = sum E_e, x3 = sum E_Delta, x4 = sum E_abcd
// and solves them exactly over Q(z).
inline SystemBundle build_and_solve_system(const LinkRegularParams& p) {
    long n = p.n, l = p.l, q = p.q;
    const Polynomial zero, one = Polynomial::constant(1);
    const Polynomial z = Polynomial::z();
    auto mono = [](long c, std::size_t k) { return Polynomial::monomial(Rational(c), k); };

    std::vector<std::vector<Polynomial>> a(5, std::vector<Polynomial>(5, zero));
    std::vector<Polynomial> b(5, zero);

    // x1 - x0 = 0
    a[0][0] = -one;
    a[0][1] = one;

    // x2 - (1-(n-l-1)z) x0 = -n z
    a[1][0] = -(one - mono(n - l - 1, 1));
    a[1][2] = one;
    b[1] = mono(-n, 1);

    // x3 - p_delta x0 = -n z + n(l-2q-2) z^2
    a[2][0] = -p_delta(n, l, q);
    a[2][3] = one;
    b[2] = mono(-n, 1) + mono(n * (l - 2 * q - 2), 2);

    // x4 - x0 = -n z - n(n-1) z^2 - (n(n-1)(n-2)+n(n-l-1)) z^3
    a[3][0] = -one;
    a[3][4] = one;
    b[3] = mono(-n, 1) + mono(-n * (n - 1), 2) +
           mono(-(n * (n - 1) * (n - 2) + n * (n - l - 1)), 3);

    // x4 = (n+l+q-6) z x3 + p_e z^2 x2 + p_v z^3 x1
    a[4][1] = Polynomial::monomial(-p_v(n, l, q), 3);
    a[4][2] = Polynomial::monomial(-p_e(n, l, q), 2);
    a[4][3] = mono(-(n + l + q - 6), 1);
    a[4][4] = one;

    std::vector<RationalFunction> x = solve_linear_system(a, b);
    SystemBundle bundle;
    bundle.g = x[0] + RationalFunction::constant(Rational(1));
    bundle.e_v = x[1];
    bundle.e_e = x[2];
    bundle.e_delta = x[3];
    bundle.e_abcd = x[4];
    return bundle;
}

}  // namespace geogrowth
