#include <cmath>
#include <stdexcept>

#include "pdm/validation.hpp"

namespace pdm {

namespace {

// Errors at or below this are treated as roundoff; no order can be fitted.
constexpr real exact_threshold = 1e-13L;

}  // namespace

ConvergenceStudy convergence_order(const std::function<real(std::size_t)>& error_for_size,
                                   const std::vector<std::size_t>& sizes, real span) {
    if (sizes.size() < 3) throw std::invalid_argument("convergence study needs at least three grid sizes");
    ConvergenceStudy study;
    study.sizes = sizes;
    for (std::size_t n : sizes) {
        if (n < 2) throw std::invalid_argument("grid size must be at least 2");
        study.spacings.push_back(span / static_cast<real>(n - 1));
    }
    const real ratio = study.spacings[0] / study.spacings[1];
    for (std::size_t i = 1; i + 1 < sizes.size(); ++i) {
        const real r = study.spacings[i] / study.spacings[i + 1];
        if (std::abs(r - ratio) > 1e-9L * ratio || ratio <= 1)
            throw std::invalid_argument("grid spacings must shrink geometrically");
    }

    for (std::size_t n : sizes) study.errors.push_back(error_for_size(n));

    bool all_exact = true;
    for (real e : study.errors) all_exact = all_exact && e <= exact_threshold;
    if (all_exact) {
        study.exact = true;
        study.note = "error at roundoff level on every grid";
        return study;
    }
    for (std::size_t i = 0; i + 1 < study.errors.size(); ++i) {
        if (!(study.errors[i + 1] < study.errors[i])) {
            study.note = "error does not decrease monotonically; no order fitted";
            return study;
        }
    }

    const std::size_t k = sizes.size();
    real sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const real lx = std::log(study.spacings[i]);
        const real ly = std::log(study.errors[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const real kk = static_cast<real>(k);
    study.slope = (kk * sxy - sx * sy) / (kk * sxx - sx * sx);
    return study;
}

}  // namespace pdm
