#include <cmath>
#include <stdexcept>

#include "pdm/errors.hpp"
#include "pdm/ladder.hpp"

namespace pdm {

void ModelParams::validate() const {
    if (!(std::isfinite(hbar) && hbar > 0)) throw ParameterError("hbar must be a positive finite number");
    if (!(std::isfinite(delta_e) && delta_e > 0)) throw ParameterError("delta_e must be a positive finite number");
    if (!std::isfinite(lambda)) throw ParameterError("lambda must be finite");
    if (!std::isfinite(anchor)) throw ParameterError("anchor must be finite");
    if (!std::isfinite(a) || a == 0) throw ParameterError("ladder constant a must be finite and nonzero");
    if (a != hbar && !expert_a_override) {
        throw ParameterError("ladder constant a must equal hbar (set the expert override to study a != hbar)");
    }
}

void OrderingParams::validate() const {
    const real sum = alpha + beta + gamma;
    if (!(std::fabs(sum + 1) <= 1e-12L * (1 + std::fabs(alpha) + std::fabs(beta) + std::fabs(gamma)))) {
        throw ParameterError("von Roos ordering parameters must satisfy alpha + beta + gamma = -1");
    }
}

real energy(int n, const ModelParams& params) {
    if (n < 0) throw std::invalid_argument("energy level must be non-negative");
    return (static_cast<real>(n) + 0.5L) * params.delta_e + params.lambda * params.lambda / 2;
}

}  // namespace pdm
