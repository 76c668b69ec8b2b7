#pragma once

#include "urh/eos.hpp"

namespace urh {

// Velocities this close to the light cone (v^2 >= 1 - kLuminalMargin) are
// rejected rather than propagated into 1/(1-v^2) blowups.
inline constexpr double kLuminalMargin = 1e-12;

// Which outer state a wave faces: Left waves move into the left initial
// state, Right waves into the right one.
enum class Family { Left, Right };

// Unit vector in the tangential (y-z) plane.
struct TangentDir {
    double y = 1.0;
    double z = 0.0;
};

// Primitive description: density, normal velocity, tangential speed and
// direction. vt is a magnitude (>= 0); the direction lives in tdir so that
// the solver core can work with scalars. Pressure is implied by the EOS.
struct PrimState {
    double rho;
    double vx;
    double vt;
    TangentDir tdir{};
};

// Conserved (lab-frame) densities: energy and three momentum components.
struct ConsState {
    double E;
    double Sx;
    double Sy;
    double Sz;
};

// x-directed flux of the conserved quantities.
struct Flux {
    double E;
    double Sx;
    double Sy;
    double Sz;
};

// Characteristic speeds of the x-split system; `zero` is twofold degenerate
// (entropy and tangential-velocity waves both ride the contact).
struct Eigenvalues {
    double minus;
    double zero;
    double plus;
};

double lorentz(const PrimState& q);

// Throws DomainError unless q is a usable state (rho > 0, v^2 subluminal
// with margin, tdir normalized when vt > 0).
void validate(const PrimState& q);

ConsState prim_to_cons(const PrimState& q, const EosParams& eos);

// Exact inversion: with p = cs2*rho the map has a closed form through the
// larger root of  x^2 - (1+cs2) E x + cs2 |S|^2 = 0,  x = E + p.
// Throws UnphysicalStateError when |S| >= E or E <= 0.
PrimState cons_to_prim(const ConsState& u, const EosParams& eos);

Flux flux_x(const PrimState& q, const EosParams& eos);

Eigenvalues eigenvalues(const PrimState& q, const EosParams& eos);

// Reflection x -> -x: flips vx, keeps the tangential part.
inline PrimState mirror_x(const PrimState& q)
{
    return PrimState{q.rho, -q.vx, q.vt, q.tdir};
}

}  // namespace urh
