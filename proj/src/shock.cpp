#include "urh/shock.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "urh/errors.hpp"

namespace urh {

namespace {

// Real roots of c3 x^3 + c2 x^2 + c1 x + c0, degree-degenerate cases
// included. Closed form (trig for three real roots, Cardano for one)
// followed by two Newton steps on the original polynomial.
std::vector<double> cubic_real_roots(double c3, double c2, double c1, double c0)
{
    std::vector<double> roots;
    const double scale = std::max({std::abs(c3), std::abs(c2), std::abs(c1), std::abs(c0)});
    if (scale == 0.0) return roots;

    if (std::abs(c3) < 1e-14 * scale) {
        if (std::abs(c2) < 1e-14 * scale) {
            if (std::abs(c1) >= 1e-14 * scale) roots.push_back(-c0 / c1);
            return roots;
        }
        const double disc = c1 * c1 - 4.0 * c2 * c0;
        if (disc < 0.0) return roots;
        const double sq = std::sqrt(disc);
        // Citardauq pairing avoids cancellation for the small root.
        const double r1 = (c1 >= 0.0) ? (-c1 - sq) / (2.0 * c2) : (-c1 + sq) / (2.0 * c2);
        roots.push_back(r1);
        if (r1 != 0.0) roots.push_back(c0 / (c2 * r1));
        else roots.push_back(-c1 / c2);
        return roots;
    }

    // Depressed form t^3 + p t + q, x = t - c2/(3 c3).
    const double shift = c2 / (3.0 * c3);
    const double p = c1 / c3 - 3.0 * shift * shift;
    const double q = ((2.0 * shift * shift - c1 / c3) * shift + c0 / c3);
    const double half_q = 0.5 * q;
    const double delta = half_q * half_q + (p / 3.0) * (p / 3.0) * (p / 3.0);

    if (delta > 0.0) {
        const double s = std::sqrt(delta);
        const double u = std::cbrt(-half_q + ((half_q <= 0.0) ? s : -s));
        // u holds the large-magnitude branch; recover the partner stably.
        const double t = (u == 0.0) ? 0.0 : u - p / (3.0 * u);
        roots.push_back(t - shift);
    } else {
        const double m = 2.0 * std::sqrt(std::max(0.0, -p / 3.0));
        double arg = (m == 0.0) ? 0.0 : 3.0 * q / (p * m);
        arg = std::clamp(arg, -1.0, 1.0);
        const double theta = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k)
            roots.push_back(m * std::cos(theta - 2.0 * M_PI * k / 3.0) - shift);
    }

    for (double& r : roots) {
        for (int it = 0; it < 2; ++it) {
            const double f = ((c3 * r + c2) * r + c1) * r + c0;
            const double df = (3.0 * c3 * r + 2.0 * c2) * r + c1;
            if (df != 0.0) r -= f / df;
        }
    }
    return roots;
}

}  // namespace

ShockCurve::ShockCurve(const PrimState& ahead, const EosParams& eos, Family family)
    : ahead_(ahead), eos_(eos), family_(family)
{
    validate(ahead);
    const double W = lorentz(ahead);
    w2a_ = W * W;
    const Eigenvalues xi = eigenvalues(ahead, eos);
    xi_a_ = (family == Family::Right) ? xi.plus : xi.minus;
}

double ShockCurve::shock_speed(double vx) const
{
    if (vx == ahead_.vx) return xi_a_;
    if (!(std::abs(vx) < 1.0))
        throw DomainError("shock_speed: |vx| must be < 1");

    // The jump conditions reduce to a cubic in the shock speed V:
    //  (1 - b V)[(1 - u V)(1 - b V) - (1/cs2)(u - V)(b - V)]
    //      - w (1 - u V)(1 - V^2) = 0,
    // with u = vx (behind), b = ahead vx, w = ahead vt^2.
    const double u = vx, b = ahead_.vx, w = ahead_.vt * ahead_.vt;
    const double cs2 = eos_.cs2;
    const double a0 = 1.0 - u * b / cs2;
    const double a1 = (u + b) * (1.0 - cs2) / cs2;
    const double a2 = u * b - 1.0 / cs2;
    const double c3 = -b * a2 - w * u;
    const double c2 = a2 - b * a1 + w;
    const double c1 = a1 - b * a0 + w * u;
    const double c0 = a0 - w;

    const double tol = 1e-9 * (1.0 + std::abs(xi_a_));
    double best = 0.0;
    bool found = false;
    for (double r : cubic_real_roots(c3, c2, c1, c0)) {
        if (!(std::abs(r) < 1.0)) continue;
        if (family_ == Family::Right) {
            if (r < xi_a_ - tol) continue;
            if (!found || r > best) { best = r; found = true; }
        } else {
            if (r > xi_a_ + tol) continue;
            if (!found || r < best) { best = r; found = true; }
        }
    }
    if (!found)
        throw SolverFailureError("shock_speed: no admissible root (vx=" + std::to_string(vx) + ")");
    return best;
}

double ShockCurve::post_shock_density(double vx, double vs) const
{
    if (vx == vs)
        throw DegenerateContactError("post_shock_density: vx equals shock speed");
    const double b = ahead_.vx, w = ahead_.vt;
    const double num = ahead_.rho * w2a_ * (b - vs)
        * ((1.0 - vx * vx) * (1.0 - b * vs) * (1.0 - b * vs)
           - w * w * (1.0 - vx * vs) * (1.0 - vx * vs));
    const double den = (vx - vs) * (1.0 - vx * vs) * (1.0 - b * vs);
    const double rho = num / den;
    if (!(rho > 0.0) || !std::isfinite(rho))
        throw SolverFailureError("post_shock_density: nonpositive density");
    return rho;
}

double ShockCurve::post_shock_tangential(double vx, double vs) const
{
    return ahead_.vt * (1.0 - vx * vs) / (1.0 - ahead_.vx * vs);
}

ShockState ShockCurve::evaluate(double vx) const
{
    if (vx == ahead_.vx) return ShockState{ahead_, xi_a_};
    const double vs = shock_speed(vx);
    const double rho = post_shock_density(vx, vs);
    const double vt = post_shock_tangential(vx, vs);
    if (vx * vx + vt * vt >= 1.0)
        throw SolverFailureError("shock: superluminal post-shock state");
    return ShockState{PrimState{rho, vx, vt, ahead_.tdir}, vs};
}

std::array<double, 4> rh_residuals(const PrimState& ahead, const PrimState& behind,
                                   double shock_speed, const EosParams& eos)
{
    const double k = eos.kappa;
    auto dens = [](const PrimState& q) {
        return q.rho / (1.0 - q.vx * q.vx - q.vt * q.vt);  // rho W^2
    };
    const double da = dens(ahead), db = dens(behind);
    const double vya = ahead.vt * ahead.tdir.y, vza = ahead.vt * ahead.tdir.z;
    const double vyb = behind.vt * behind.tdir.y, vzb = behind.vt * behind.tdir.z;

    // Jumps of (density, flux) pairs for the four conserved quantities,
    // shock-frame form [[U]] Vs = [[F]], each scaled by its largest side.
    const double U[4] = {db - k * behind.rho - (da - k * ahead.rho),
                         db * behind.vx - da * ahead.vx,
                         db * vyb - da * vya,
                         db * vzb - da * vza};
    const double F[4] = {db * behind.vx - da * ahead.vx,
                         db * behind.vx * behind.vx + k * behind.rho
                             - (da * ahead.vx * ahead.vx + k * ahead.rho),
                         db * behind.vx * vyb - da * ahead.vx * vya,
                         db * behind.vx * vzb - da * ahead.vx * vza};

    std::array<double, 4> res{};
    for (int i = 0; i < 4; ++i) {
        const double lhs = U[i] * shock_speed;
        res[i] = (lhs - F[i]) / std::max({std::abs(lhs), std::abs(F[i]), 1.0});
    }
    return res;
}

}  // namespace urh
