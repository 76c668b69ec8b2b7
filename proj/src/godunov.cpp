#include "urh/godunov.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "urh/errors.hpp"

namespace urh {

namespace {

struct Kahan {
    double s = 0.0, c = 0.0;
    void add(double x)
    {
        const double y = x - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

bool same_state(const PrimState& a, const PrimState& b)
{
    return a.rho == b.rho && a.vx == b.vx && a.vt == b.vt
        && a.tdir.y == b.tdir.y && a.tdir.z == b.tdir.z;
}

bool same_cons(const ConsState& a, const ConsState& b)
{
    return a.E == b.E && a.Sx == b.Sx && a.Sy == b.Sy && a.Sz == b.Sz;
}

}  // namespace

std::vector<PrimState> cell_primitives(const Grid1D& g, const EosParams& eos)
{
    if (g.prims.size() == g.cells.size()) return g.prims;
    std::vector<PrimState> prims;
    prims.reserve(g.cells.size());
    for (std::size_t i = 0; i < g.cells.size(); ++i) {
        try {
            prims.push_back(cons_to_prim(g.cells[i], eos));
        } catch (const UnphysicalStateError& e) {
            throw PositivityError(i, e.what());
        }
    }
    return prims;
}

Grid1D riemann_grid(const PrimState& left, const PrimState& right, const EosParams& eos,
                    double x_min, double x_max, std::size_t n_cells)
{
    if (!(x_min < 0.0) || !(x_max > 0.0))
        throw DomainError("riemann_grid: domain must contain the jump at x = 0");
    if (n_cells < 2)
        throw DomainError("riemann_grid: need at least two cells");
    validate(left);
    validate(right);

    Grid1D g{x_min, x_max, {}, {}, 0.0};
    g.cells.reserve(n_cells);
    g.prims.reserve(n_cells);
    const double h = (x_max - x_min) / static_cast<double>(n_cells);
    const ConsState ul = prim_to_cons(left, eos);
    const ConsState ur = prim_to_cons(right, eos);
    for (std::size_t i = 0; i < n_cells; ++i) {
        const double xl = x_min + static_cast<double>(i) * h;
        const double xr = xl + h;
        if (xr <= 0.0) {
            g.cells.push_back(ul);
            g.prims.push_back(left);
        } else if (xl >= 0.0) {
            g.cells.push_back(ur);
            g.prims.push_back(right);
        } else {
            const double f = -xl / h;  // left-state volume fraction
            g.cells.push_back(ConsState{f * ul.E + (1.0 - f) * ur.E,
                                        f * ul.Sx + (1.0 - f) * ur.Sx,
                                        f * ul.Sy + (1.0 - f) * ur.Sy,
                                        f * ul.Sz + (1.0 - f) * ur.Sz});
            g.prims.push_back(cons_to_prim(g.cells.back(), eos));
        }
    }
    return g;
}

Flux interface_flux(const PrimState& l, const PrimState& r, const EosParams& eos)
{
    if (same_state(l, r)) return flux_x(l, eos);
    return flux_x(solve(l, r, eos).sample(0.0), eos);
}

StepResult step(const Grid1D& g, const SchemeConfig& cfg, const EosParams& eos, double dt_cap)
{
    if (!(cfg.cfl > 0.0) || !(cfg.cfl <= 1.0))
        throw DomainError("step: cfl must lie in (0, 1]");
    const std::size_t n = g.cells.size();
    const std::vector<PrimState> prims = cell_primitives(g, eos);

    double vmax = 0.0;
    for (const PrimState& q : prims) {
        const Eigenvalues e = eigenvalues(q, eos);
        vmax = std::max({vmax, std::abs(e.minus), std::abs(e.plus)});
    }
    if (vmax == 0.0) vmax = std::numeric_limits<double>::min();

    const double h = g.h();
    const double dt = std::min(cfg.cfl * h / vmax, dt_cap);

    std::vector<Flux> f(n + 1);
    f[0] = flux_x(prims[0], eos);          // outflow ghost = edge state
    f[n] = flux_x(prims[n - 1], eos);
    for (std::size_t i = 1; i < n; ++i)
        f[i] = interface_flux(prims[i - 1], prims[i], eos);

    StepResult out{g, dt, f[0], f[n]};
    out.grid.prims.resize(n);
    const double r = dt / h;
    for (std::size_t i = 0; i < n; ++i) {
        out.grid.cells[i].E -= r * (f[i + 1].E - f[i].E);
        out.grid.cells[i].Sx -= r * (f[i + 1].Sx - f[i].Sx);
        out.grid.cells[i].Sy -= r * (f[i + 1].Sy - f[i].Sy);
        out.grid.cells[i].Sz -= r * (f[i + 1].Sz - f[i].Sz);
        if (same_cons(out.grid.cells[i], g.cells[i])) {
            out.grid.prims[i] = prims[i];
        } else {
            try {
                out.grid.prims[i] = cons_to_prim(out.grid.cells[i], eos);
            } catch (const UnphysicalStateError& e) {
                throw PositivityError(i, e.what());
            }
        }
    }
    out.grid.time = g.time + dt;
    return out;
}

Totals conserved_totals(const Grid1D& g)
{
    Kahan k[4];
    for (const ConsState& u : g.cells) {
        k[0].add(u.E);
        k[1].add(u.Sx);
        k[2].add(u.Sy);
        k[3].add(u.Sz);
    }
    Totals t{};
    for (int i = 0; i < 4; ++i) t.v[i] = k[i].s * g.h();
    return t;
}

RunResult run(Grid1D g, const SchemeConfig& cfg, const EosParams& eos, double t_end)
{
    if (!(t_end > g.time))
        throw DomainError("run: t_end must exceed the grid time");

    RunResult res;
    res.initial = conserved_totals(g);

    {
        // One-off reach check; the Riemann data sit at x = 0 by construction.
        double vmax = 0.0;
        for (const PrimState& q : cell_primitives(g, eos)) {
            const Eigenvalues e = eigenvalues(q, eos);
            vmax = std::max({vmax, std::abs(e.minus), std::abs(e.plus)});
        }
        const double reach = std::min(-g.x_min, g.x_max);
        if (vmax * (t_end - g.time) > reach)
            std::fprintf(stderr,
                         "warning: fastest wave may reach the domain boundary before t=%g\n",
                         t_end);
    }

    Kahan bdry[4];  // time integral of (right boundary flux - left boundary flux)
    while (g.time < t_end * (1.0 - 1e-15)) {
        StepResult s = step(g, cfg, eos, t_end - g.time);
        bdry[0].add(s.dt * (s.right_boundary.E - s.left_boundary.E));
        bdry[1].add(s.dt * (s.right_boundary.Sx - s.left_boundary.Sx));
        bdry[2].add(s.dt * (s.right_boundary.Sy - s.left_boundary.Sy));
        bdry[3].add(s.dt * (s.right_boundary.Sz - s.left_boundary.Sz));
        g = std::move(s.grid);
        ++res.steps;
    }

    res.final_ = conserved_totals(g);
    for (int i = 0; i < 4; ++i) {
        const double drift = res.final_.v[i] - res.initial.v[i] + bdry[i].s;
        res.conservation_error[i] = std::abs(drift) / std::max(1.0, std::abs(res.initial.v[i]));
    }
    res.grid = std::move(g);
    return res;
}

std::vector<ConvergenceRow> run_convergence(const PrimState& left, const PrimState& right,
                                            const EosParams& eos,
                                            std::span<const std::size_t> resolutions,
                                            double t_end, double x_min, double x_max,
                                            double cfl)
{
    const RiemannSolution exact = solve(left, right, eos);
    std::vector<ConvergenceRow> rows;
    rows.reserve(resolutions.size());
    for (std::size_t n : resolutions) {
        Grid1D g = riemann_grid(left, right, eos, x_min, x_max, n);
        const SchemeConfig cfg{cfl};
        RunResult res = run(std::move(g), cfg, eos, t_end);

        std::vector<double> centers(n);
        for (std::size_t i = 0; i < n; ++i) centers[i] = res.grid.x_center(i);
        const std::vector<PrimState> ref = exact.snapshot(t_end, centers);
        const std::vector<PrimState> num = cell_primitives(res.grid, eos);

        Kahan er, ex, et;
        for (std::size_t i = 0; i < n; ++i) {
            er.add(std::abs(num[i].rho - ref[i].rho));
            ex.add(std::abs(num[i].vx - ref[i].vx));
            et.add(std::abs(num[i].vt - ref[i].vt));
        }
        const double h = res.grid.h();
        rows.push_back(ConvergenceRow{n, h * er.s, h * ex.s, h * et.s});
    }
    return rows;
}

}  // namespace urh
