#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>

#include "oracles.hpp"
#include "urh/eos.hpp"
#include "urh/errors.hpp"
#include "urh/rarefaction.hpp"
#include "urh/shock.hpp"
#include "urh/state.hpp"

using urh::EosParams;
using urh::Family;
using urh::PrimState;
using urh::ShockCurve;
using urh::ShockState;

namespace {
const EosParams kThird = EosParams::from_cs2(1.0 / 3.0);

// Largest normalized jump-condition residual.
double max_residual(const PrimState& ahead, const PrimState& behind, double vs,
                    const EosParams& eos)
{
    const std::array<double, 4> r = urh::rh_residuals(ahead, behind, vs, eos);
    return std::max({r[0], r[1], r[2], r[3]});
}
}  // namespace

TEST_CASE("zero-strength shock degenerates to the acoustic wave")
{
    const PrimState ahead{1.0, 0.3, 0.4, {}};
    const ShockCurve c(ahead, kThird, Family::Right);
    const ShockState s = c.evaluate(ahead.vx);
    CHECK(s.behind.rho == ahead.rho);
    CHECK(s.behind.vx == ahead.vx);
    CHECK(s.behind.vt == ahead.vt);
    CHECK(s.speed == c.ahead_xi());
    CHECK(s.speed == urh::eigenvalues(ahead, kThird).plus);

    // The speed is continuous through zero strength.
    for (double dv : {1e-10, -1e-10}) {
        const double vs = c.shock_speed(ahead.vx + dv);
        CHECK(testutil::close(vs, s.speed, 1e-6, 1e-6));
    }
}

TEST_CASE("frozen 1-d point: shock from rest")
{
    // Right-family shock through rho = 1 at rest, driven to vx = 0.3.
    const ShockCurve c(PrimState{1.0, 0.0, 0.0, {}}, kThird, Family::Right);
    const ShockState s = c.evaluate(0.3);
    CHECK(testutil::close(s.speed, 0.6859465277082315, 1e-12));
    CHECK(testutil::close(s.behind.rho, 2.0364130035712944, 1e-12));
    CHECK(s.behind.vt == 0.0);
}

TEST_CASE("frozen tangential point: left shock of the two-wave test problem")
{
    const ShockCurve c(PrimState{1.0, 0.5, 1.0 / 3.0, {}}, kThird, Family::Left);
    const double star_vx = 0.032127525939839113;
    const ShockState s = c.evaluate(star_vx);
    CHECK(testutil::close(s.speed, -0.3909321660646389, 1e-10));
    CHECK(testutil::close(s.behind.rho, 3.577425727076653, 1e-10));
    CHECK(testutil::close(s.behind.vt, 0.28233330851109967, 1e-10));
}

TEST_CASE("with vt = 0 the cubic reduces to the explicit 1-d formulas")
{
    testutil::Rng rng(0x5eed0301);
    for (int i = 0; i < 200; ++i) {
        const double cs2 = rng.uniform(0.05, 0.95);
        const EosParams eos = EosParams::from_cs2(cs2);
        const double vxa = rng.uniform(-0.9, 0.9);
        const double rho_a = rng.log_uniform(1e-2, 1e2);
        const bool right = rng.unit() < 0.5;
        const PrimState ahead{rho_a, vxa, 0.0, {}};
        const ShockCurve c(ahead, eos, right ? Family::Right : Family::Left);
        // Compressive side: vx beyond the ahead value, toward the family side.
        const double dv = rng.uniform(0.01, right ? 0.9 - vxa : vxa + 0.9);
        const double vxb = right ? vxa + dv : vxa - dv;

        const ShockState s = c.evaluate(vxb);
        const double rho_ref = testutil::theta_density(rho_a, vxa, vxb, eos);
        CHECK(testutil::close(s.behind.rho, rho_ref, 1e-12));
        const double vs_ref = testutil::two_eq_speed(rho_a, vxa, s.behind.rho, vxb, eos);
        CHECK(testutil::close(s.speed, vs_ref, 1e-12, 1e-13));
        CHECK(s.behind.vt == 0.0);
    }
}

TEST_CASE("all four jump conditions hold along random shock curves")
{
    testutil::Rng rng(0x5eed0302);
    for (int i = 0; i < 300; ++i) {
        const double cs2 = (i % 3 == 0) ? 0.1 : (i % 3 == 1 ? 1.0 / 3.0 : 0.9);
        const EosParams eos = EosParams::from_cs2(cs2);
        const PrimState ahead = testutil::random_state(rng, 1e-2, 1e2, 0.9);
        const bool right = rng.unit() < 0.5;
        const ShockCurve c(ahead, eos, right ? Family::Right : Family::Left);
        const double room = right ? 0.97 - ahead.vx : ahead.vx + 0.97;
        if (room < 0.02) continue;
        const double vxb = right ? ahead.vx + rng.uniform(0.01, room)
                                 : ahead.vx - rng.uniform(0.01, room);
        const ShockState s = c.evaluate(vxb);
        CHECK_MESSAGE(max_residual(ahead, s.behind, s.speed, eos) < 1e-11,
                      "i=" << i << " cs2=" << cs2 << " vxb=" << vxb);
    }
}

TEST_CASE("jump-condition residuals expose a wrong state")
{
    const PrimState ahead{1.0, 0.0, 0.3, {}};
    const ShockCurve c(ahead, kThird, Family::Right);
    const ShockState s = c.evaluate(0.4);
    CHECK(max_residual(ahead, s.behind, s.speed, kThird) < 1e-12);

    PrimState wrong = s.behind;
    wrong.rho *= 1.0 + 1e-4;
    CHECK(max_residual(ahead, wrong, s.speed, kThird) > 1e-6);
    CHECK(max_residual(ahead, s.behind, s.speed * (1.0 + 1e-4), kThird) > 1e-6);
}

TEST_CASE("shocks are compressive and Lax-ordered")
{
    testutil::Rng rng(0x5eed0303);
    for (int i = 0; i < 200; ++i) {
        const PrimState ahead = testutil::random_state(rng, 1e-1, 1e1, 0.8);
        const bool right = rng.unit() < 0.5;
        const ShockCurve c(ahead, kThird, right ? Family::Right : Family::Left);
        const double room = right ? 0.95 - ahead.vx : ahead.vx + 0.95;
        if (room < 0.02) continue;
        const double vxb = right ? ahead.vx + rng.uniform(0.01, room)
                                 : ahead.vx - rng.uniform(0.01, room);
        const ShockState s = c.evaluate(vxb);
        CHECK(s.behind.rho > ahead.rho);

        const urh::Eigenvalues ea = urh::eigenvalues(ahead, kThird);
        const urh::Eigenvalues eb = urh::eigenvalues(s.behind, kThird);
        const double slack = 1e-10;
        if (right) {
            // Characteristics converge: xi+(behind) >= Vs >= xi+(ahead).
            CHECK(s.speed >= ea.plus - slack);
            CHECK(s.speed <= eb.plus + slack);
        } else {
            CHECK(s.speed <= ea.minus + slack);
            CHECK(s.speed >= eb.minus - slack);
        }
        CHECK(std::abs(s.speed) < 1.0);
    }
}

TEST_CASE("tangential velocity transforms by the shock-frame contraction")
{
    const PrimState ahead{1.0, 0.2, 0.5, urh::TangentDir{0.6, 0.8}};
    const ShockCurve c(ahead, kThird, Family::Right);
    const ShockState s = c.evaluate(0.6);
    // vt_b = vt_a (1 - vx_b Vs)/(1 - vx_a Vs), exactly as implemented; check
    // against the jump conditions instead of the formula.
    CHECK(max_residual(ahead, s.behind, s.speed, kThird) < 1e-12);
    // Direction is inherited, magnitude shrinks across a compressive shock
    // moving faster than both flows.
    CHECK(s.behind.tdir.y == ahead.tdir.y);
    CHECK(s.behind.tdir.z == ahead.tdir.z);
    CHECK(s.behind.vt < ahead.vt);
    CHECK(s.behind.vt > 0.0);
}

TEST_CASE("degenerate inputs are rejected")
{
    const PrimState ahead{1.0, 0.2, 0.5, {}};
    const ShockCurve c(ahead, kThird, Family::Right);
    CHECK_THROWS_AS(c.post_shock_density(0.6, 0.6), urh::DegenerateContactError);
}

TEST_CASE("shock and rarefaction branches join with matching slope")
{
    // The composite wave curve is C1 at the ahead state: second-order
    // one-sided slopes of rho(vx) from either branch agree.
    const PrimState ahead{1.0, 0.5, 0.5, {}};
    const ShockCurve shock(ahead, kThird, Family::Right);
    const urh::RarefactionCurve rare(ahead, kThird, Family::Right);
    const double d = 1e-5;
    const auto slope = [&](auto&& f, double sign) {
        return sign * (-3.0 * f(ahead.vx) + 4.0 * f(ahead.vx + sign * d)
                       - f(ahead.vx + sign * 2.0 * d))
               / (2.0 * d);
    };
    const double s_shock =
        slope([&](double v) { return shock.rho_of_vx(v); }, +1.0);
    const double s_rare = slope([&](double v) { return rare.rho_of_vx(v); }, -1.0);
    CHECK(testutil::close(s_shock, s_rare, 1e-6));
}
