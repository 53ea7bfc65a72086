#include "pdm/profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "pdm/errors.hpp"

namespace pdm {

namespace {

constexpr real derivative_tolerance = 1e-6L;

real probe_x(const Interval& d, int i) {
    return d.lo + d.width() * static_cast<real>(i) / static_cast<real>(MassProfile::probe_points - 1);
}

}  // namespace

// Reports the edge of the first violating run: the floor crossing next to an
// admissible probe, located by bisection; the first probe if none is admissible.
void MassProfile::check_positivity() const {
    auto admissible = [&](real x) { return m_(x) >= floor_; };
    std::vector<char> ok(probe_points);
    for (int i = 0; i < probe_points; ++i) ok[i] = admissible(probe_x(domain_, i));
    if (std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; })) return;
    for (int i = 0; i + 1 < probe_points; ++i) {
        if (ok[i] == ok[i + 1]) continue;
        real good = probe_x(domain_, ok[i] ? i : i + 1);
        real bad = probe_x(domain_, ok[i] ? i + 1 : i);
        for (int k = 0; k < 64; ++k) {
            const real mid = (good + bad) / 2;
            (admissible(mid) ? good : bad) = mid;
        }
        throw PositivityError(bad, m_(bad), floor_);
    }
    throw PositivityError(domain_.lo, m_(domain_.lo), floor_);
}

MassProfile::MassProfile(Expr m, Interval domain, real floor)
    : m_(std::move(m)), m1_(differentiate(m_)), m2_(differentiate(m1_)), domain_(domain), floor_(floor) {
    if (!(std::isfinite(domain.lo) && std::isfinite(domain.hi)) || !(domain.lo < domain.hi)) {
        throw std::invalid_argument("profile domain must be a nonempty finite interval");
    }
    if (!(floor > 0)) throw std::invalid_argument("positivity floor must be > 0");

    check_positivity();

    const DerivativeCheck dc = check_derivatives(*this);
    if (dc.first > derivative_tolerance || dc.second > derivative_tolerance) {
        throw Error("symbolic derivatives disagree with finite differences (first " +
                    std::to_string(static_cast<double>(dc.first)) + ", second " +
                    std::to_string(static_cast<double>(dc.second)) + ")");
    }
}

real MassProfile::mass(real x) const {
    const real v = m_(x);
    if (!(v >= floor_)) throw PositivityError(x, v, floor_);
    return v;
}

MassProfile make_profile(std::string_view m_text, Interval domain, real floor) {
    return MassProfile(parse(m_text), domain, floor);
}

DerivativeCheck check_derivatives(const MassProfile& profile) {
    const Interval& d = profile.domain();
    const real h = 1e-4L * d.width();
    std::vector<real> sym1, sym2, fd1, fd2;
    for (int i = 0; i < MassProfile::probe_points; ++i) {
        const real x = probe_x(d, i);
        if (x - 2 * h < d.lo || x + 2 * h > d.hi) continue;
        const real fm2 = profile.m()(x - 2 * h), fm1 = profile.m()(x - h), f0 = profile.m()(x);
        const real fp1 = profile.m()(x + h), fp2 = profile.m()(x + 2 * h);
        fd1.push_back((fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h));
        fd2.push_back((-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h));
        sym1.push_back(profile.m1()(x));
        sym2.push_back(profile.m2()(x));
    }
    // relative to the derivative's magnitude over the domain (a pointwise ratio is
    // meaningless at the derivative's zeros)
    auto rel = [](const std::vector<real>& sym, const std::vector<real>& fd) {
        real scale = 0, worst = 0;
        for (real v : sym) scale = std::max(scale, std::fabs(v));
        scale = std::max(scale, real{1e-12L});
        for (std::size_t i = 0; i < sym.size(); ++i) worst = std::max(worst, std::fabs(sym[i] - fd[i]) / scale);
        return worst;
    };
    return {rel(sym1, fd1), rel(sym2, fd2)};
}

}  // namespace pdm
