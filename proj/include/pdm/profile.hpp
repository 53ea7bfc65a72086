#pragma once

#include <string>
#include <string_view>

#include "pdm/expr.hpp"
#include "pdm/types.hpp"

namespace pdm {

struct Interval {
    real lo = 0;
    real hi = 0;

    real width() const noexcept { return hi - lo; }
    bool contains(real x) const noexcept { return lo <= x && x <= hi; }
};

/// A mass profile m(x) with its exact first and second derivatives, validated
/// strictly positive (m >= floor) on a closed domain.
class MassProfile {
public:
    static constexpr real default_floor = 1e-8L;

    /// Number of uniform probe points used for the positivity and derivative checks.
    static constexpr int probe_points = 1001;

    MassProfile(Expr m, Interval domain, real floor = default_floor);

    const Expr& m() const noexcept { return m_; }
    const Expr& m1() const noexcept { return m1_; }
    const Expr& m2() const noexcept { return m2_; }
    const Interval& domain() const noexcept { return domain_; }
    real floor() const noexcept { return floor_; }

    /// m(x), throwing PositivityError when it falls below the floor.
    real mass(real x) const;
    real mass_prime(real x) const { return m1_(x); }
    real mass_second(real x) const { return m2_(x); }

    std::string text() const { return m_.to_string(); }

private:
    void check_positivity() const;
    Expr m_;
    Expr m1_;
    Expr m2_;
    Interval domain_;
    real floor_;
};

/// Parses, differentiates twice and validates. Throws ParseError, PositivityError
/// (carrying the offending x), DomainError, or std::invalid_argument for a bad
/// domain/floor.
MassProfile make_profile(std::string_view m_text, Interval domain, real floor = MassProfile::default_floor);

/// Largest relative disagreement between the symbolic derivatives and five-point
/// central differences at the interior probe points (first, second derivative).
struct DerivativeCheck {
    real first = 0;
    real second = 0;
};
DerivativeCheck check_derivatives(const MassProfile& profile);

}  // namespace pdm
