#include "urh/rarefaction.hpp"

#include <cassert>
#include <cmath>
#include <limits>

namespace urh {

namespace {

constexpr double kPsiTiny = 1e-150;   // Phi below this counts as vacuum
constexpr double kLnRhoFloor = -690.7755278982137;  // ln(kRhoFloor)

double psi(double vx) { return 2.0 * std::atanh(vx); }

}  // namespace

RarefactionCurve::RarefactionCurve(const PrimState& ahead, const EosParams& eos, Family family)
    : ahead_(ahead), eos_(eos), family_(family)
{
    validate(ahead);
    sign_ = (family == Family::Right) ? 1.0 : -1.0;

    const double W = lorentz(ahead);
    const double qbar = W * ahead.vt;  // = a * rho^(-kappa) at the ahead state
    a_ = std::pow(ahead.rho, eos.kappa) * qbar;
    // With (1-cs2) qbar^2 below resolvable size the a = 0 relation is the
    // same curve to machine precision and avoids log(a) entirely.
    zero_a_ = (1.0 - eos.cs2) * qbar * qbar < 1e-12;
    ln_a_ = zero_a_ ? -std::numeric_limits<double>::infinity() : std::log(a_);

    if (zero_a_)
        K_ = sign_ * psi(ahead.vx) - (2.0 * eos.kappa / eos.cs) * std::log(ahead.rho);
    else
        K_ = sign_ * psi(ahead.vx) - phi_of_lnq(std::log(qbar));

    const Eigenvalues xi = eigenvalues(ahead, eos);
    xi_head_ = (family == Family::Right) ? xi.plus : xi.minus;
}

// Phi as a function of ln q, q = a rho^(-kappa):
//   Phi = (1/cs) ln((B+1)/(B-1)) + ln((B-cs)/(B+cs)),  B = sqrt(1+(1-cs2) q^2).
// Both logs are taken through log1p of small exact ratios: with
// B - sqrt(lam) q = 1/(B + sqrt(lam) q),
//   (B+1)/(sqrt(lam) q) = 1 + (1 + 1/(B + sqrt(lam) q))/(sqrt(lam) q)
//   (B-cs)/(B+cs)       = 1 - 2 cs/(B + cs),
// so Phi keeps full relative accuracy from q -> 0 (where it diverges like
// -(2/cs) ln q) to q -> inf (where it decays like 2 lam/(cs B)); forming it
// from separate large logs instead loses Phi entirely below ~1e-14.
double RarefactionCurve::phi_of_lnq(double lnq) const
{
    const double lam = 1.0 - eos_.cs2;
    const double cs = eos_.cs;
    const double q = std::exp(lnq);
    const double sq = std::sqrt(lam) * q;
    const double B = std::hypot(1.0, sq);
    const double t1 = 2.0 * std::log1p((1.0 + 1.0 / (B + sq)) / sq) / cs;
    const double t2 = std::log1p(-2.0 * cs / (B + cs));
    return t1 + t2;
}

double RarefactionCurve::dphi_dlnq(double lnq) const
{
    const double lam = 1.0 - eos_.cs2;
    const double q = std::exp(lnq);
    const double B = std::hypot(1.0, std::sqrt(lam) * q);
    // d Phi / d ln q = -2 B / (cs (1 + q^2)); written with the same guards.
    return -2.0 * (B / (1.0 + q * q)) / eos_.cs;
}

double RarefactionCurve::phi_at_rho(double rho) const
{
    assert(!zero_a_);
    return phi_of_lnq(ln_a_ - eos_.kappa * std::log(rho));
}

double RarefactionCurve::lnq_of_phi(double target) const
{
    // Phi is strictly decreasing from +inf (q -> 0) to 0 (q -> inf); any
    // on-curve target is comfortably bracketed by these bounds.
    double lo = -350.0, hi = 350.0;

    // Asymptotic seeds: B -> 1 regime for large Phi, B ~ sqrt(lam) q for small.
    const double lam = 1.0 - eos_.cs2;
    const double cs = eos_.cs;
    const double edge = phi_of_lnq(0.0);
    double t;
    if (target > edge)
        t = 0.5 * (2.0 * std::log(2.0) - std::log(lam)
                   - cs * (target - std::log((1.0 - cs) / (1.0 + cs))));
    else
        t = std::log(2.0 * std::sqrt(lam) / cs) - std::log(target);
    t = std::min(std::max(t, lo + 1.0), hi - 1.0);

    for (int it = 0; it < 120; ++it) {
        const double g = phi_of_lnq(t) - target;
        if (g > 0.0) lo = t; else hi = t;
        double tn = t - g / dphi_dlnq(t);
        if (!(tn > lo && tn < hi)) tn = 0.5 * (lo + hi);
        if (std::abs(tn - t) <= 1e-15 * std::max(1.0, std::abs(t)))
            return tn;
        t = tn;
    }
    throw SolverFailureError("rarefaction: Phi inversion failed to converge");
}

double RarefactionCurve::rtilde(double rho) const
{
    if (!(rho > 0.0) || !std::isfinite(rho))
        throw DomainError("rtilde: rho must be positive and finite");
    if (zero_a_) return 1.0;
    const double q = std::exp(ln_a_ - eos_.kappa * std::log(rho));
    return 1.0 + q * q;
}

double RarefactionCurve::log_rho_of_vx(double vx) const
{
    if (!(std::abs(vx) < 1.0))
        throw DomainError("rarefaction: |vx| must be < 1");
    const double T = sign_ * psi(vx) - K_;
    double ln_rho;
    if (zero_a_) {
        ln_rho = T * eos_.cs / (2.0 * eos_.kappa);
    } else {
        if (T <= kPsiTiny)
            throw VacuumLimitError("rarefaction: curve reaches vacuum before this vx");
        ln_rho = (ln_a_ - lnq_of_phi(T)) / eos_.kappa;
    }
    if (ln_rho < kLnRhoFloor)
        throw VacuumLimitError("rarefaction: density underflow along curve");
    return ln_rho;
}

double RarefactionCurve::rho_of_vx(double vx) const
{
    return std::exp(log_rho_of_vx(vx));
}

double RarefactionCurve::vx_of_rho(double rho) const
{
    if (!(rho > 0.0) || !std::isfinite(rho))
        throw DomainError("rarefaction: rho must be positive and finite");
    const double phi = zero_a_ ? (2.0 * eos_.kappa / eos_.cs) * std::log(rho)
                               : phi_at_rho(rho);
    return std::tanh(0.5 * sign_ * (phi + K_));
}

PrimState RarefactionCurve::state_at(double vx, double rho) const
{
    if (!(std::abs(vx) < 1.0))
        throw DomainError("rarefaction: |vx| must be < 1");
    if (!(rho > 0.0) || !std::isfinite(rho))
        throw DomainError("rarefaction: rho must be positive and finite");
    if (zero_a_)
        return PrimState{rho, vx, 0.0, ahead_.tdir};
    // vt = q / W with W^2 = (1 + q^2)/(1 - vx^2); grouped so that huge q
    // (deep in the fan) cannot overflow: q/hypot(1,q) <= 1.
    const double q = std::exp(ln_a_ - eos_.kappa * std::log(rho));
    const double vt = (q / std::hypot(1.0, q)) * std::sqrt((1.0 - vx) * (1.0 + vx));
    return PrimState{rho, vx, vt, ahead_.tdir};
}

PrimState RarefactionCurve::state_at_vx(double vx) const
{
    return state_at(vx, rho_of_vx(vx));
}

std::pair<double, double> RarefactionCurve::head_tail_speeds(double star_vx, double star_rho) const
{
    if (!(star_rho <= ahead_.rho * (1.0 + 1e-9)))
        throw InconsistentInputError("rarefaction: star density above ahead density");
    const double phi = zero_a_ ? (2.0 * eos_.kappa / eos_.cs) * std::log(star_rho)
                               : phi_at_rho(star_rho);
    const double resid = sign_ * psi(star_vx) - phi - K_;
    if (std::abs(resid) > 1e-8 * std::max(1.0, std::abs(psi(star_vx))))
        throw InconsistentInputError("rarefaction: star state not on this curve");

    return {xi_head_, family_xi(star_vx, star_rho)};
}

double RarefactionCurve::family_xi(double vx, double rho) const
{
    // On the curve W^2 (1 - vx^2) = 1 + q^2 = rtilde, so the acoustic speed
    // in the normal frame is A = cs / sqrt(cs2 + rtilde (1 - cs2)). This
    // stays accurate toward vacuum, where vt -> 1 and 1 - v^2 computed from
    // the velocities rounds to zero or below; rtilde -> inf simply gives
    // A -> 0 and xi -> vx, the correct limit.
    const double rt = rtilde(rho);
    const double A = eos_.cs / std::sqrt(eos_.cs2 + rt * (1.0 - eos_.cs2));
    return (family_ == Family::Right) ? (vx + A) / (1.0 + vx * A)
                                      : (vx - A) / (1.0 - vx * A);
}

double RarefactionCurve::psi_at_vacuum() const
{
    if (zero_a_) return sign_ * -std::numeric_limits<double>::infinity();
    return sign_ * K_;
}

PrimState RarefactionCurve::state_in_fan(double xi) const
{
    // Bisect on ln rho, not vx: near vacuum the whole tail of the curve
    // collapses into a few ulps of vx, while ln rho keeps the fan resolved
    // all the way down to the density floor. Every evaluation here is a
    // forward map (rho -> vx -> xi), so no Phi inversion is involved.
    double lo = kLnRhoFloor, hi = std::log(ahead_.rho);

    auto xi_at = [&](double lnr) {
        const double rho = std::exp(lnr);
        return family_xi(vx_of_rho(rho), rho);
    };

    const double xi_lo = xi_at(lo), xi_hi = xi_at(hi);
    if (!(xi >= std::min(xi_lo, xi_hi) - 1e-12 && xi <= std::max(xi_lo, xi_hi) + 1e-12))
        throw DomainError("state_in_fan: xi outside the fan");

    // xi is monotone in rho along the curve: increasing for the right
    // family (both vx and the acoustic speed grow with rho), decreasing
    // for the left.
    const bool up = (family_ == Family::Right);
    for (int it = 0; it < 200 && hi - lo > 1e-14 * (1.0 + std::abs(lo) + std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((xi_at(mid) < xi) == up) lo = mid; else hi = mid;
    }
    const double rho = std::exp(0.5 * (lo + hi));
    return state_at(vx_of_rho(rho), rho);
}

}  // namespace urh
