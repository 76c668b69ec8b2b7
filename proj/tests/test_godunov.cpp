#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <vector>

#include "oracles.hpp"
#include "urh/eos.hpp"
#include "urh/errors.hpp"
#include "urh/godunov.hpp"
#include "urh/state.hpp"

using urh::ConsState;
using urh::EosParams;
using urh::Flux;
using urh::Grid1D;
using urh::PrimState;
using urh::SchemeConfig;
using urh::StepResult;

namespace {
const EosParams kThird = EosParams::from_cs2(1.0 / 3.0);

Grid1D uniform_grid(const PrimState& s, const EosParams& eos, std::size_t n)
{
    Grid1D g{-1.0, 1.0, {}, {}, 0.0};
    g.cells.assign(n, urh::prim_to_cons(s, eos));
    g.prims.assign(n, s);
    return g;
}
}  // namespace

TEST_CASE("grid geometry accessors")
{
    const Grid1D g = urh::riemann_grid(PrimState{1.0, 0.0, 0.0, {}},
                                       PrimState{2.0, 0.0, 0.0, {}}, kThird, -1.0, 1.0, 4);
    CHECK(g.h() == 0.5);
    CHECK(g.x_center(0) == -0.75);
    CHECK(g.x_center(3) == 0.75);
    CHECK(g.time == 0.0);
}

TEST_CASE("riemann_grid splits pure cells exactly and mixes the straddle cell")
{
    const PrimState l{1.0, 0.5, 1.0 / 3.0, {}};
    const PrimState r{20.0, 0.5, 0.5, {}};
    const ConsState ul = urh::prim_to_cons(l, kThird);
    const ConsState ur = urh::prim_to_cons(r, kThird);

    // Even cell count: the jump is an interface, every cell is pure.
    const Grid1D even = urh::riemann_grid(l, r, kThird, -1.0, 1.0, 4);
    CHECK(even.cells[1].E == ul.E);
    CHECK(even.cells[2].E == ur.E);
    CHECK(even.prims[1].rho == l.rho);
    CHECK(even.prims[2].rho == r.rho);

    // Odd cell count with exact half-cell geometry: the middle cell holds
    // the 50/50 conserved mix, and its cached primitive matches it.
    const Grid1D odd = urh::riemann_grid(l, r, kThird, -1.25, 1.25, 5);
    CHECK(odd.cells[2].E == 0.5 * ul.E + 0.5 * ur.E);
    CHECK(odd.cells[2].Sx == 0.5 * ul.Sx + 0.5 * ur.Sx);
    const ConsState back = urh::prim_to_cons(odd.prims[2], kThird);
    CHECK(testutil::close(back.E, odd.cells[2].E, 1e-12));
    CHECK(testutil::close(back.Sx, odd.cells[2].Sx, 1e-12));
    CHECK(odd.cells[1].E == ul.E);
    CHECK(odd.cells[3].E == ur.E);
}

TEST_CASE("riemann_grid rejects bad domains and cell counts")
{
    const PrimState s{1.0, 0.0, 0.0, {}};
    CHECK_THROWS_AS(urh::riemann_grid(s, s, kThird, 0.0, 1.0, 8), urh::DomainError);
    CHECK_THROWS_AS(urh::riemann_grid(s, s, kThird, -1.0, 0.0, 8), urh::DomainError);
    CHECK_THROWS_AS(urh::riemann_grid(s, s, kThird, -1.0, 1.0, 1), urh::DomainError);
    CHECK_THROWS_AS(urh::riemann_grid(PrimState{-1.0, 0.0, 0.0, {}}, s, kThird, -1.0, 1.0, 8),
                    urh::DomainError);
}

TEST_CASE("interface flux of identical states is the plain flux")
{
    const PrimState s{1.7, 0.35, 0.28, {}};
    const Flux direct = urh::flux_x(s, kThird);
    const Flux f = urh::interface_flux(s, s, kThird);
    CHECK(f.E == direct.E);
    CHECK(f.Sx == direct.Sx);
    CHECK(f.Sy == direct.Sy);
    CHECK(f.Sz == direct.Sz);
}

TEST_CASE("interface flux of a symmetric problem carries momentum only")
{
    // Mirror-image data: the interface sits on the contact, vx* = 0, so the
    // energy and tangential-momentum fluxes through x = 0 vanish.
    const PrimState l{2.0, 0.4, 0.3, {}};
    const PrimState r{2.0, -0.4, 0.3, {}};
    const Flux f = urh::interface_flux(l, r, kThird);
    CHECK(std::abs(f.E) < 1e-12);
    CHECK(std::abs(f.Sy) < 1e-12);
    CHECK(std::abs(f.Sz) < 1e-12);
    CHECK(f.Sx > urh::pressure(2.0, kThird));  // compressed star region
}

TEST_CASE("a uniform grid is a bitwise fixed point of the step")
{
    const PrimState s{1.7, 0.35, 0.28, {}};
    Grid1D g = uniform_grid(s, kThird, 16);
    const StepResult out = urh::step(g, SchemeConfig{0.9}, kThird, 1e30);
    for (std::size_t i = 0; i < g.cells.size(); ++i) {
        CHECK(out.grid.cells[i].E == g.cells[i].E);
        CHECK(out.grid.cells[i].Sx == g.cells[i].Sx);
        CHECK(out.grid.cells[i].Sy == g.cells[i].Sy);
        CHECK(out.grid.cells[i].Sz == g.cells[i].Sz);
        // Quiescent cells keep the cached primitive, not a re-conversion.
        CHECK(out.grid.prims[i].rho == s.rho);
        CHECK(out.grid.prims[i].vx == s.vx);
        CHECK(out.grid.prims[i].vt == s.vt);
    }
    const Flux edge = urh::flux_x(s, kThird);
    CHECK(out.left_boundary.E == edge.E);
    CHECK(out.right_boundary.Sx == edge.Sx);
}

TEST_CASE("time step honors the cfl number and the cap")
{
    const PrimState s{1.0, 0.2, 0.3, {}};
    Grid1D g = uniform_grid(s, kThird, 8);
    const urh::Eigenvalues e = urh::eigenvalues(s, kThird);
    const double vmax = std::max(std::abs(e.minus), std::abs(e.plus));

    const StepResult free_step = urh::step(g, SchemeConfig{0.5}, kThird, 1e30);
    CHECK(free_step.dt == 0.5 * g.h() / vmax);
    CHECK(free_step.grid.time == free_step.dt);

    const StepResult capped = urh::step(g, SchemeConfig{0.5}, kThird, 1e-4);
    CHECK(capped.dt == 1e-4);
}

TEST_CASE("step rejects cfl numbers outside (0, 1]")
{
    Grid1D g = uniform_grid(PrimState{1.0, 0.0, 0.0, {}}, kThird, 4);
    CHECK_THROWS_AS(urh::step(g, SchemeConfig{0.0}, kThird, 1e30), urh::DomainError);
    CHECK_THROWS_AS(urh::step(g, SchemeConfig{1.5}, kThird, 1e30), urh::DomainError);
    CHECK_THROWS_AS(urh::step(g, SchemeConfig{-0.5}, kThird, 1e30), urh::DomainError);
    CHECK_NOTHROW(urh::step(g, SchemeConfig{1.0}, kThird, 1e30));
}

TEST_CASE("cell primitives come from the cache when present and convert otherwise")
{
    const PrimState s{3.0, -0.25, 0.4, {}};
    Grid1D g = uniform_grid(s, kThird, 6);

    const std::vector<PrimState> cached = urh::cell_primitives(g, kThird);
    CHECK(cached[4].rho == s.rho);
    CHECK(cached[4].vx == s.vx);

    g.prims.clear();  // force the conversion path
    const std::vector<PrimState> converted = urh::cell_primitives(g, kThird);
    CHECK(testutil::close(converted[4].rho, s.rho, 1e-13));
    CHECK(testutil::close(converted[4].vx, s.vx, 1e-13));
    CHECK(testutil::close(converted[4].vt, s.vt, 1e-13));
}

TEST_CASE("an unrecoverable cell reports its index")
{
    Grid1D g = uniform_grid(PrimState{1.0, 0.0, 0.0, {}}, kThird, 6);
    g.prims.clear();
    g.cells[3] = ConsState{1.0, 2.0, 0.0, 0.0};  // |S| > E: no physical preimage
    try {
        urh::step(g, SchemeConfig{0.5}, kThird, 1e30);
        FAIL("expected PositivityError");
    } catch (const urh::PositivityError& e) {
        CHECK(e.cell_index == 3);
    }
}

TEST_CASE("a short run conserves the boundary-corrected totals to rounding")
{
    const PrimState l{1.0, 0.5, 1.0 / 3.0, {}};
    const PrimState r{20.0, 0.5, 0.5, {}};
    Grid1D g = urh::riemann_grid(l, r, kThird, -1.0, 1.0, 64);
    const urh::RunResult res = urh::run(std::move(g), SchemeConfig{0.5}, kThird, 0.3);
    CHECK(res.steps > 0);
    CHECK(res.grid.time >= 0.3 * (1.0 - 1e-12));
    for (int c = 0; c < 4; ++c) CHECK(res.conservation_error[c] < 1e-13);
}

TEST_CASE("run rejects a final time at or before the grid time")
{
    Grid1D g = uniform_grid(PrimState{1.0, 0.0, 0.0, {}}, kThird, 4);
    g.time = 0.5;
    CHECK_THROWS_AS(urh::run(g, SchemeConfig{0.5}, kThird, 0.5), urh::DomainError);
    CHECK_THROWS_AS(urh::run(g, SchemeConfig{0.5}, kThird, 0.2), urh::DomainError);
}

TEST_CASE("L1 errors against the exact solution shrink with resolution")
{
    const PrimState l{1.0, 0.5, 1.0 / 3.0, {}};
    const PrimState r{20.0, 0.5, 0.5, {}};
    const std::size_t ns[] = {50, 100};
    const std::vector<urh::ConvergenceRow> rows =
        urh::run_convergence(l, r, kThird, ns, 0.3, -1.0, 1.0, 0.5);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].n_cells == 50);
    CHECK(rows[0].l1_rho > 0.0);
    CHECK(rows[1].l1_rho < rows[0].l1_rho);
    CHECK(rows[1].l1_vx < rows[0].l1_vx);
    CHECK(rows[1].l1_vt < rows[0].l1_vt);
}
