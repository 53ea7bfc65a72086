#pragma once

#include <cmath>
#include <string>

#include "pdm/ladder.hpp"
#include "pdm/profile.hpp"

namespace pdm::test {

inline bool near(real a, real b, real tol) { return std::abs(a - b) <= tol; }

inline LadderSystem make_system(const std::string& m, real lo, real hi, std::size_t n, real lambda = 0,
                                real anchor = 0, Stencil stencil = Stencil::fourth) {
    ModelParams p;
    p.lambda = lambda;
    p.anchor = anchor;
    return LadderSystem(make_profile(m, {lo, hi}), p, Grid(lo, hi, n), stencil);
}

}  // namespace pdm::test
