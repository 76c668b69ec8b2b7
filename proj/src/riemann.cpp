#include "urh/riemann.hpp"

#include <cassert>
#include <cmath>
#include <limits>

#include "urh/errors.hpp"

namespace urh {

namespace {

constexpr double kZeroStrengthTol = 1e-13;  // |star_vx - ahead.vx| below this
constexpr double kInf = std::numeric_limits<double>::infinity();


// Both branches of one wave curve, evaluated as log density so that the
// star search sees comparable magnitudes across many decades.
struct SideCurves {
    SideCurves(const PrimState& ahead, const EosParams& eos, Family fam)
        : rare(ahead, eos, fam), shock(ahead, eos, fam), fam(fam), vx_a(ahead.vx) {}

    double log_rho(double vx) const
    {
        const bool shock_side = (fam == Family::Right) ? (vx >= vx_a) : (vx < vx_a);
        return shock_side ? std::log(shock.rho_of_vx(vx)) : rare.log_rho_of_vx(vx);
    }

    RarefactionCurve rare;
    ShockCurve shock;
    Family fam;
    double vx_a;
};

// Mirror-antisymmetric orientation predicate; guarantees that solving the
// mirrored problem reproduces the mirrored solution bit for bit.
bool should_flip(const PrimState& l, const PrimState& r)
{
    const double key = l.vx + r.vx;
    if (key < 0.0) return true;
    if (key > 0.0) return false;
    if (l.rho != r.rho) return l.rho < r.rho;
    if (l.vt != r.vt) return l.vt < r.vt;
    return false;
}

}  // namespace

RiemannSolution solve(const PrimState& left, const PrimState& right, const EosParams& eos)
{
    validate(left);
    validate(right);

    RiemannSolution sol;
    sol.left_ = left;
    sol.right_ = right;
    sol.eos_ = eos;
    sol.star_p_ = 0.0;

    // Identical dynamics on both sides: nothing propagates but the contact
    // (which may still rotate the tangential direction).
    if (left.rho == right.rho && left.vx == right.vx && left.vt == right.vt) {
        const Eigenvalues el = eigenvalues(left, eos);
        sol.star_vx_ = left.vx;
        sol.star_rho_ = left.rho;
        sol.star_p_ = eos.cs2 * left.rho;
        sol.vtl_ = left.vt;
        sol.vtr_ = right.vt;
        sol.lwave_ = WaveInfo{WaveType::Rarefaction, true, el.minus, el.minus};
        sol.rwave_ = WaveInfo{WaveType::Rarefaction, true, el.plus, el.plus};
        sol.pattern_ = "NN";
        return sol;
    }

    sol.flipped_ = should_flip(left, right);
    const PrimState lc = sol.flipped_ ? mirror_x(right) : left;
    const PrimState rc = sol.flipped_ ? mirror_x(left) : right;

    const SideCurves wl(lc, eos, Family::Left);
    const SideCurves wr(rc, eos, Family::Right);

    // Domains in psi = 2 atanh(vx): the left curve exists below its vacuum
    // point, the right curve above its own. No overlap means the data pull
    // a vacuum open between the waves.
    const double psi_hi = wl.rare.psi_at_vacuum();  // +inf when never vacuum
    const double psi_lo = wr.rare.psi_at_vacuum();  // -inf when never vacuum
    if (psi_lo >= psi_hi - 1e-10)
        throw NoIntersectionError(
            "wave curves do not intersect (vacuum opens); psi window ["
            + std::to_string(psi_lo) + ", " + std::to_string(psi_hi) + "]");

    const double overlap = psi_hi - psi_lo;  // may be inf
    const double pad = std::isfinite(overlap) ? std::min(1e-3, 1e-3 * overlap) : 1e-3;
    const double psi_cap = 2.0 * std::atanh(1.0 - 1e-12);
    double lo = std::tanh(0.5 * std::max(psi_lo + pad, -psi_cap));
    double hi = std::tanh(0.5 * std::min(psi_hi - pad, psi_cap));

    auto g = [&](double vx) { return wl.log_rho(vx) - wr.log_rho(vx); };

    double glo = g(lo), ghi = g(hi);
    if (!(glo > 0.0) || !(ghi < 0.0)) {
        // The star sits inside the pad next to one vacuum endpoint; treat
        // as vacuum: star density would be below anything representable.
        if (glo <= 0.0 && ghi < 0.0)
            throw NoIntersectionError("star state degenerates to vacuum at the right curve edge");
        if (ghi >= 0.0 && glo > 0.0)
            throw NoIntersectionError("star state degenerates to vacuum at the left curve edge");
        throw SolverFailureError("riemann: bracket endpoints have unexpected signs");
    }

    // Safeguarded secant: keep the bracket, fall back to bisection whenever
    // the secant step stalls or leaves the interval. g is strictly
    // decreasing (left curve falls, right curve rises with vx). Run the
    // bracket down to adjacent doubles: the jump-condition residuals of the
    // star states scale with the final log-density gap, and on steep curve
    // intersections any fixed vx tolerance leaves a visible gap.
    for (int it = 0; ; ++it) {
        if (it >= 200)
            throw SolverFailureError("riemann: star iteration failed to converge");
        double mid;
        const double denom = ghi - glo;
        const double w = hi - lo;
        if (it % 3 != 2 && denom != 0.0) {
            mid = lo - glo * w / denom;
            if (!(mid > lo + 1e-3 * w && mid < hi - 1e-3 * w)) mid = 0.5 * (lo + hi);
        } else {
            mid = 0.5 * (lo + hi);
        }
        if (!(mid > lo && mid < hi)) break;
        const double gm = g(mid);
        if (gm > 0.0) { lo = mid; glo = gm; }
        else { hi = mid; ghi = gm; }
        if (gm == 0.0) break;
    }
    const double star_vx = (std::abs(glo) <= std::abs(ghi)) ? lo : hi;

    const double star_rho = std::exp(0.5 * (wl.log_rho(star_vx) + wr.log_rho(star_vx)));

    sol.star_vx_ = star_vx;
    sol.star_rho_ = star_rho;
    sol.star_p_ = eos.cs2 * star_rho;

    // Resolve each side: wave type, edge speeds, star-side tangential speed.
    char letters[2];
    WaveInfo waves[2];
    double vts[2];
    const SideCurves* sides[2] = {&wl, &wr};
    for (int i = 0; i < 2; ++i) {
        const SideCurves& sc = *sides[i];
        const PrimState& ahead = sc.rare.ahead();
        const bool zero = std::abs(star_vx - ahead.vx) < kZeroStrengthTol;
        if (zero) {
            const double xi = sc.shock.ahead_xi();
            waves[i] = WaveInfo{WaveType::Rarefaction, true, xi, xi};
            vts[i] = ahead.vt;
            letters[i] = 'N';
            continue;
        }
        const bool shock_side =
            (sc.fam == Family::Right) ? (star_vx > ahead.vx) : (star_vx < ahead.vx);
        if (shock_side) {
            const double vs = sc.shock.shock_speed(star_vx);
            const double vt = sc.shock.post_shock_tangential(star_vx, vs);
            if (star_vx * star_vx + vt * vt >= 1.0)
                throw SolverFailureError("riemann: superluminal star state behind shock");
            waves[i] = WaveInfo{WaveType::Shock, false, vs, vs};
            vts[i] = vt;
            letters[i] = 'S';
        } else {
            const auto [head, tail] = sc.rare.head_tail_speeds(star_vx, star_rho);
            waves[i] = WaveInfo{WaveType::Rarefaction, false, head, tail};
            vts[i] = sc.rare.state_at(star_vx, star_rho).vt;
            letters[i] = 'R';
        }
    }

    // Wave ordering sanity in canonical orientation.
    const double slack = 1e-10;
    if (!(waves[0].outer <= waves[0].inner + slack && waves[0].inner <= star_vx + slack
          && star_vx <= waves[1].inner + slack && waves[1].inner <= waves[1].outer + slack))
        throw SolverFailureError("riemann: wave speeds out of order");

    if (waves[0].type == WaveType::Rarefaction && !waves[0].zero_strength)
        sol.lfan_.emplace(wl.rare);
    if (waves[1].type == WaveType::Rarefaction && !waves[1].zero_strength)
        sol.rfan_.emplace(wr.rare);

    if (!sol.flipped_) {
        sol.vtl_ = vts[0];
        sol.vtr_ = vts[1];
        sol.lwave_ = waves[0];
        sol.rwave_ = waves[1];
        sol.pattern_ = {letters[0], letters[1]};
    } else {
        sol.star_vx_ = -star_vx;
        sol.vtl_ = vts[1];
        sol.vtr_ = vts[0];
        sol.lwave_ = WaveInfo{waves[1].type, waves[1].zero_strength, -waves[1].outer, -waves[1].inner};
        sol.rwave_ = WaveInfo{waves[0].type, waves[0].zero_strength, -waves[0].outer, -waves[0].inner};
        sol.pattern_ = {letters[1], letters[0]};
    }
    return sol;
}

PrimState RiemannSolution::sample(double xi) const
{
    if (!std::isfinite(xi))
        throw DomainError("sample: xi must be finite");

    // Region tests are closed on the left-wave side and open on the right,
    // so a xi that hits a wave edge exactly classifies the same way when the
    // problem (and xi) are mirrored. Only the exact contact stays two-valued.
    if (xi <= lwave_.outer) return left_;
    if (xi <= lwave_.inner) {
        // Left-side fan; stored canonically, so under a flip it is the
        // canonical right fan evaluated at the mirrored coordinate.
        return flipped_ ? mirror_x(rfan_->state_in_fan(-xi)) : lfan_->state_in_fan(xi);
    }
    if (xi < star_vx_) return PrimState{star_rho_, star_vx_, vtl_, left_.tdir};
    if (xi < rwave_.inner) return PrimState{star_rho_, star_vx_, vtr_, right_.tdir};
    if (xi < rwave_.outer)
        return flipped_ ? mirror_x(lfan_->state_in_fan(-xi)) : rfan_->state_in_fan(xi);
    return right_;
}

std::vector<PrimState> RiemannSolution::snapshot(double t, std::span<const double> xs) const
{
    if (!(t > 0.0) || !std::isfinite(t))
        throw DomainError("snapshot: t must be positive");
    std::vector<PrimState> out;
    out.reserve(xs.size());
    for (double x : xs) {
        const double xi = x / t;
        if (xi <= -1.0) out.push_back(left_);
        else if (xi >= 1.0) out.push_back(right_);
        else out.push_back(sample(xi));
    }
    return out;
}

}  // namespace urh
