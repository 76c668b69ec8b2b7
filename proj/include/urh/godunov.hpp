#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "urh/eos.hpp"
#include "urh/riemann.hpp"
#include "urh/state.hpp"

namespace urh {

// Uniform 1-d grid of conserved cell averages. `prims` is an optional cache
// of the matching primitives (same length as `cells` when present); cells
// whose conserved state a step leaves bitwise unchanged keep their cached
// primitive, so quiescent regions never drift through re-conversion.
struct Grid1D {
    double x_min;
    double x_max;
    std::vector<ConsState> cells;
    std::vector<PrimState> prims;
    double time = 0.0;

    double h() const { return (x_max - x_min) / static_cast<double>(cells.size()); }
    double x_center(std::size_t i) const { return x_min + (static_cast<double>(i) + 0.5) * h(); }
};

struct SchemeConfig {
    double cfl = 0.5;  // in (0, 1]
};

// Cell averages of piecewise-constant Riemann data with the jump at x = 0;
// a cell straddling the jump gets the volume-weighted conserved mix.
Grid1D riemann_grid(const PrimState& left, const PrimState& right, const EosParams& eos,
                    double x_min, double x_max, std::size_t n_cells);

// Exact-solver interface flux: the flux of the state sitting on the
// interface (xi = 0) of the local Riemann solution. Identical inputs short
// circuit to flux_x, making the scheme exactly constancy-preserving.
Flux interface_flux(const PrimState& l, const PrimState& r, const EosParams& eos);

// Primitives of every cell, served from the grid cache when it is in sync
// and recovered from the conserved state otherwise. Throws PositivityError
// (with the cell index) if a cell has no physical primitive state.
std::vector<PrimState> cell_primitives(const Grid1D& g, const EosParams& eos);

struct StepResult {
    Grid1D grid;
    double dt;
    Flux left_boundary;   // interface flux at x_min used this step
    Flux right_boundary;  // interface flux at x_max
};

// One forward-Euler Godunov step with outflow boundaries. dt is
// cfl * h / max|xi| over all cells, clipped to dt_cap when that is smaller.
// Throws PositivityError (with the cell index) if any cell has no physical
// primitive state.
StepResult step(const Grid1D& g, const SchemeConfig& cfg, const EosParams& eos,
                double dt_cap);

struct Totals {
    double v[4];  // h * sum of (E, Sx, Sy, Sz), compensated
};

Totals conserved_totals(const Grid1D& g);

struct RunResult {
    Grid1D grid;
    std::size_t steps = 0;
    Totals initial{}, final_{};
    // |final - initial + time-integrated boundary outflow|, relative,
    // per conserved component. Should sit at rounding level.
    double conservation_error[4] = {0, 0, 0, 0};
};

// Advance to t_end. Warns on stderr once if the fastest initial wave could
// reach the nearer domain boundary before t_end (data are assumed centered
// at x = 0, as riemann_grid builds them).
RunResult run(Grid1D g, const SchemeConfig& cfg, const EosParams& eos, double t_end);

struct ConvergenceRow {
    std::size_t n_cells;
    double l1_rho;
    double l1_vx;
    double l1_vt;
};

// Godunov runs against the exact solution at increasing resolutions;
// L1 errors are h * sum over cells of |numeric - exact(center)|.
std::vector<ConvergenceRow> run_convergence(const PrimState& left, const PrimState& right,
                                            const EosParams& eos,
                                            std::span<const std::size_t> resolutions,
                                            double t_end, double x_min, double x_max,
                                            double cfl);

}  // namespace urh
