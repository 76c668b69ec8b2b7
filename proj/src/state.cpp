#include "urh/state.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <string>

namespace urh {

double lorentz(const PrimState& q)
{
    const double v2 = q.vx * q.vx + q.vt * q.vt;
    return 1.0 / std::sqrt(1.0 - v2);
}

void validate(const PrimState& q)
{
    if (!(q.rho > 0.0) || !std::isfinite(q.rho))
        throw DomainError("state: rho must be positive and finite");
    if (!std::isfinite(q.vx) || !std::isfinite(q.vt))
        throw DomainError("state: velocities must be finite");
    if (q.vt < 0.0)
        throw DomainError("state: vt is a magnitude and must be >= 0");
    const double v2 = q.vx * q.vx + q.vt * q.vt;
    if (v2 >= 1.0 - kLuminalMargin)
        throw DomainError("state: v^2 = " + std::to_string(v2) + " too close to luminal");
    if (q.vt > 0.0) {
        const double n2 = q.tdir.y * q.tdir.y + q.tdir.z * q.tdir.z;
        if (std::abs(n2 - 1.0) > 1e-12)
            throw DomainError("state: tdir must be a unit vector when vt > 0");
    }
}

ConsState prim_to_cons(const PrimState& q, const EosParams& eos)
{
    const double p = eos.cs2 * q.rho;
    const double W = lorentz(q);
    const double x = (q.rho + p) * W * W;  // (rho + p) W^2 = E + p
    const double vy = q.vt * q.tdir.y;
    const double vz = q.vt * q.tdir.z;
    return ConsState{x - p, x * q.vx, x * vy, x * vz};
}

PrimState cons_to_prim(const ConsState& u, const EosParams& eos)
{
    if (!(u.E > 0.0) || !std::isfinite(u.E))
        throw UnphysicalStateError("cons_to_prim: E must be positive");
    const double m2 = u.Sx * u.Sx + u.Sy * u.Sy + u.Sz * u.Sz;
    const double m = std::sqrt(m2);
    if (m >= u.E)
        throw UnphysicalStateError("cons_to_prim: |S| >= E admits no subluminal state");

    const double cs2 = eos.cs2;
    // Larger quadratic root; the smaller one gives v > 1.
    const double disc = (1.0 + cs2) * (1.0 + cs2) * u.E * u.E - 4.0 * cs2 * m2;
    assert(disc > 0.0);  // disc >= (1-cs2)^2 E^2 whenever m < E
    const double x = 0.5 * ((1.0 + cs2) * u.E + std::sqrt(disc));

    const double vx = u.Sx / x;
    const double vy = u.Sy / x;
    const double vz = u.Sz / x;
    const double v2 = vx * vx + vy * vy + vz * vz;
    if (v2 >= 1.0 - kLuminalMargin)
        throw UnphysicalStateError("cons_to_prim: recovered v^2 too close to luminal");

    const double rho = x * (1.0 - v2) / (1.0 + cs2);
    const double vt = std::hypot(vy, vz);
    TangentDir dir{1.0, 0.0};
    if (vt > 0.0) dir = TangentDir{vy / vt, vz / vt};
    return PrimState{rho, vx, vt, dir};
}

Flux flux_x(const PrimState& q, const EosParams& eos)
{
    const double p = eos.cs2 * q.rho;
    const double W = lorentz(q);
    const double x = (q.rho + p) * W * W;
    const double vy = q.vt * q.tdir.y;
    const double vz = q.vt * q.tdir.z;
    return Flux{x * q.vx, x * q.vx * q.vx + p, x * q.vx * vy, x * q.vx * vz};
}

Eigenvalues eigenvalues(const PrimState& q, const EosParams& eos)
{
    // Near-vacuum fan states can have vx^2 + vt^2 round to 1 or a hair above;
    // clamp so the acoustic cone degenerates to the flow line instead of NaN.
    const double v2 = std::min(q.vx * q.vx + q.vt * q.vt,
                               1.0 - std::numeric_limits<double>::epsilon());
    assert(1.0 - v2 * eos.cs2 > 0.0);  // characteristic matrix stays regular
    const double W2 = 1.0 / (1.0 - v2);
    // A is the sound speed composed with the tangential Lorentz contraction:
    // 1/A^2 = 1 + W^2 (1 - vx^2)(1 - cs2)/cs2; for vt = 0, A reduces to cs.
    const double inv_a2 = 1.0 + W2 * (1.0 - q.vx * q.vx) * (1.0 - eos.cs2) / eos.cs2;
    const double A = 1.0 / std::sqrt(inv_a2);
    return Eigenvalues{(q.vx - A) / (1.0 - q.vx * A), q.vx, (q.vx + A) / (1.0 + q.vx * A)};
}

}  // namespace urh
