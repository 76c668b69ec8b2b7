#pragma once

#include <array>

#include "urh/eos.hpp"
#include "urh/state.hpp"

namespace urh {

// Post-shock state together with the shock speed that produced it.
struct ShockState {
    PrimState behind;
    double speed;
};

// Shock branch of a wave curve: maps the post-shock normal velocity vx to
// the shock speed (the physical root of a cubic in Vs), the post-shock
// density, and the post-shock tangential speed.
class ShockCurve {
  public:
    ShockCurve(const PrimState& ahead, const EosParams& eos, Family family);

    const PrimState& ahead() const { return ahead_; }
    Family family() const { return family_; }

    // Characteristic speed of the ahead state in this family; Lax bound
    // for admissible shock speeds.
    double ahead_xi() const { return xi_a_; }

    // Physical shock speed for post-shock normal velocity vx: the extremal
    // real root in (-1, 1) obeying the Lax ordering (Vs >= xi+(ahead) for
    // right-moving shocks, Vs <= xi-(ahead) for left-moving ones).
    double shock_speed(double vx) const;

    // Density behind the shock, from the jump conditions at (vx, Vs).
    double post_shock_density(double vx, double vs) const;

    // Tangential speed behind the shock; the momentum jump conditions
    // collapse to vt = vt_ahead (1 - vx Vs)/(1 - vx_ahead Vs).
    double post_shock_tangential(double vx, double vs) const;

    // Full post-shock state. vx == ahead.vx returns the zero-strength
    // result (ahead state, speed xi_ahead) without touching the cubic.
    ShockState evaluate(double vx) const;

    double rho_of_vx(double vx) const { return evaluate(vx).behind.rho; }

  private:
    PrimState ahead_;
    EosParams eos_;
    Family family_;
    double w2a_;   // ahead Lorentz factor squared
    double xi_a_;
};

// Rankine-Hugoniot residuals of the four jump conditions for a candidate
// (ahead, behind, speed) triple, each normalized by max(|lhs|, |rhs|, 1).
// Exactly zero iff the triple satisfies the jump conditions.
std::array<double, 4> rh_residuals(const PrimState& ahead, const PrimState& behind,
                                   double shock_speed, const EosParams& eos);

}  // namespace urh
