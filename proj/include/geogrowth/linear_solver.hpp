#pragma once

#include <stdexcept>
#include <vector>

#include "polynomial.hpp"
#include "rational_function.hpp"

namespace geogrowth {

struct SingularSystem : std::runtime_error {
    SingularSystem() : std::runtime_error("singular linear system") {}
};

// Exact Gaussian elimination over the fraction field Q(z).
// Pivot: first row (from the current one down) with a nonzero entry,
// so results are reproducible.
inline std::vector<RationalFunction> solve_linear_system(
    const std::vector<std::vector<Polynomial>>& a_in,
    const std::vector<Polynomial>& b_in) {
    const std::size_t n = a_in.size();
    if (b_in.size() != n) throw std::invalid_argument("matrix/vector size mismatch");
    std::vector<std::vector<RationalFunction>> m(n, std::vector<RationalFunction>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        if (a_in[i].size() != n) throw std::invalid_argument("matrix is not square");
        for (std::size_t j = 0; j < n; ++j) m[i][j] = RationalFunction(a_in[i][j]);
        m[i][n] = RationalFunction(b_in[i]);
    }

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw SingularSystem();
        std::swap(m[col], m[pivot]);
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col].is_zero()) continue;
            RationalFunction f = m[row][col] / m[col][col];
            for (std::size_t j = col; j <= n; ++j) m[row][j] = m[row][j] - f * m[col][j];
        }
    }

    std::vector<RationalFunction> x(n);
    for (std::size_t i = n; i-- > 0;) {
        RationalFunction acc = m[i][n];
        for (std::size_t j = i + 1; j < n; ++j) acc = acc - m[i][j] * x[j];
        x[i] = acc / m[i][i];
    }
    return x;
}

}  // namespace geogrowth
