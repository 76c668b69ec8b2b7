#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "urh/eos.hpp"
#include "urh/rarefaction.hpp"
#include "urh/shock.hpp"
#include "urh/state.hpp"

namespace urh {

enum class WaveType { Shock, Rarefaction };

// One of the two genuinely nonlinear waves of a solution. `outer` is the
// edge adjacent to the initial state, `inner` the edge adjacent to the star
// region; for shocks they coincide. Waves of zero strength keep the
// degenerate speed xi_family(ahead) and are flagged.
struct WaveInfo {
    WaveType type;
    bool zero_strength;
    double outer;
    double inner;
};

// Self-similar solution of the Riemann problem: two constant star states
// separated by a contact, bounded by a shock or rarefaction on each side.
// Density and normal velocity are continuous across the contact; the
// tangential velocity generally jumps.
class RiemannSolution {
  public:
    const PrimState& left() const { return left_; }
    const PrimState& right() const { return right_; }
    const EosParams& eos() const { return eos_; }

    double star_vx() const { return star_vx_; }
    double star_rho() const { return star_rho_; }
    double star_p() const { return star_p_; }
    double contact_speed() const { return star_vx_; }

    // Tangential speed on each side of the contact.
    double vt_left_star() const { return vtl_; }
    double vt_right_star() const { return vtr_; }

    const WaveInfo& left_wave() const { return lwave_; }
    const WaveInfo& right_wave() const { return rwave_; }

    // Two letters, left wave then right: S(hock), R(arefaction), or N for a
    // wave of zero strength.
    const std::string& pattern() const { return pattern_; }

    // State at similarity coordinate xi = x/t. Interval convention is
    // half-open, left-closed: xi exactly on a wave edge or on the contact
    // returns the region to its right.
    PrimState sample(double xi) const;

    // Profile at time t > 0 over the given x positions; |x/t| >= 1 clamps
    // to the corresponding initial state.
    std::vector<PrimState> snapshot(double t, std::span<const double> xs) const;

  private:
    friend RiemannSolution solve(const PrimState&, const PrimState&, const EosParams&);
    RiemannSolution() = default;

    PrimState left_{}, right_{};
    EosParams eos_{};
    double star_vx_ = 0.0, star_rho_ = 0.0, star_p_ = 0.0;
    double vtl_ = 0.0, vtr_ = 0.0;
    WaveInfo lwave_{}, rwave_{};
    std::string pattern_;

    // Fans are kept in canonical orientation: the solve may mirror the
    // problem so that mirrored inputs yield exactly mirrored solutions.
    bool flipped_ = false;
    std::optional<RarefactionCurve> lfan_, rfan_;
};

// Exact solution of the Riemann problem (left, right). Throws
// NoIntersectionError when the wave curves do not intersect (the data would
// open a vacuum region, which is outside this solver's scope).
RiemannSolution solve(const PrimState& left, const PrimState& right, const EosParams& eos);

}  // namespace urh
