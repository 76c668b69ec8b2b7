#pragma once

#include <utility>

#include "urh/eos.hpp"
#include "urh/state.hpp"

namespace urh {

// Densities below this are treated as vacuum rather than returned.
inline constexpr double kRhoFloor = 1e-300;

// Self-similar rarefaction wave curve through a given ahead state.
//
// Along the fan the quantity a = rho^kappa W vt is invariant, and with
// psi(vx) = 2 atanh(vx) the curve satisfies
//
//     s * psi(vx) = Phi(rho) + K,   s = +1 right-moving, -1 left-moving,
//
// where Phi is an explicit monotone function of rho (built from
// B = sqrt(1 + (1-cs2) a^2 rho^(-2 kappa))) and K is fixed by the ahead
// state. Phi is evaluated in log space so that tiny invariants and tiny
// densities cost no precision. For a = 0 the relation collapses to
// psi = (2 kappa / cs) ln rho + K.
class RarefactionCurve {
  public:
    RarefactionCurve(const PrimState& ahead, const EosParams& eos, Family family);

    const PrimState& ahead() const { return ahead_; }
    Family family() const { return family_; }

    // Fan invariant rho^kappa W vt of the ahead state (0 on the a = 0 branch).
    double invariant_a() const { return a_; }
    bool zero_tangential_branch() const { return zero_a_; }

    // R~(rho) = 1 + a^2 rho^(-2 kappa) = W^2 (1 - vx^2) along the curve.
    double rtilde(double rho) const;

    // Density on the curve at normal velocity vx. Throws VacuumLimitError
    // once vx passes the point where the curve reaches zero density.
    double rho_of_vx(double vx) const;
    double log_rho_of_vx(double vx) const;

    // Inverse of rho_of_vx; explicit, no iteration.
    double vx_of_rho(double rho) const;

    // Full state on the curve; vt is reconstructed from the invariant.
    PrimState state_at(double vx, double rho) const;
    PrimState state_at_vx(double vx) const;

    // Characteristic speed of the ahead edge of the fan.
    double head_speed() const { return xi_head_; }

    // (head, tail) speeds for a fan ending at the given star state, which
    // must lie on this curve (checked; InconsistentInputError otherwise).
    std::pair<double, double> head_tail_speeds(double star_vx, double star_rho) const;

    // State inside the fan at similarity coordinate xi = x/t.
    PrimState state_in_fan(double xi) const;

    // psi = 2 atanh(vx) at the zero-density end of the curve; -+inf when
    // the invariant vanishes and the curve never reaches vacuum.
    double psi_at_vacuum() const;

  private:
    double phi_of_lnq(double lnq) const;
    double dphi_dlnq(double lnq) const;
    double phi_at_rho(double rho) const;
    double lnq_of_phi(double target) const;  // inverts phi, Newton + bracket
    // Family characteristic speed at an on-curve point, computed through
    // W^2 (1 - vx^2) = rtilde(rho); immune to the 1 - v^2 cancellation that
    // hits eigenvalues() for near-vacuum, near-luminal fan states.
    double family_xi(double vx, double rho) const;

    PrimState ahead_;
    EosParams eos_;
    Family family_;
    double sign_;     // +1 right family, -1 left
    double a_;        // invariant
    double ln_a_;     // log(a), valid when !zero_a_
    bool zero_a_;
    double K_;        // curve constant
    double xi_head_;
};

}  // namespace urh
