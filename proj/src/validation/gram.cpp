#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pdm/quadrature.hpp"
#include "pdm/validation.hpp"

namespace pdm {

GramMatrices gram_matrices(const StateSet& states) {
    const std::size_t n = states.size();
    if (n < 2) throw std::invalid_argument("insufficient states: Gram matrices need at least two");
    GramMatrices g{ComplexMatrix(n, std::vector<complex>(n)), ComplexMatrix(n, std::vector<complex>(n))};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            g.bilinear[i][j] = bilinear_pair(states.psi(i), states.psi(j));
            g.sesquilinear[i][j] = sesquilinear_pair(states.psi(i), states.psi(j));
        }
    }
    return g;
}

real max_normalized_offdiagonal(const ComplexMatrix& g) {
    real worst = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (i == j) continue;
            const real scale = std::sqrt(std::abs(g[i][i]) * std::abs(g[j][j]));
            worst = std::max(worst, std::abs(g[i][j]) / scale);
        }
    }
    return worst;
}

}  // namespace pdm
