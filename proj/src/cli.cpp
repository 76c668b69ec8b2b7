#include "urh/cli.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "urh/eos.hpp"
#include "urh/errors.hpp"
#include "urh/godunov.hpp"
#include "urh/rarefaction.hpp"
#include "urh/riemann.hpp"
#include "urh/shock.hpp"
#include "urh/state.hpp"

namespace urh::cli {
namespace {

using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Config plumbing

struct StateSpec {
    double rho = 1.0;
    double vx = 0.0;
    double vt = 0.0;
    double tdir_angle = 0.0;  // tangential direction (cos a, sin a) in the y-z plane
};

struct CurveSpec {
    std::string label;
    StateSpec state;
    Family family = Family::Right;
};

struct Config {
    std::string mode;
    double cs2 = 1.0 / 3.0;
    std::optional<StateSpec> left, right;
    double time = 1.0;  // snapshot time
    double x_min = -1.0, x_max = 1.0;
    int n_points = 2001;
    double vx_min = -0.95, vx_max = 0.95;  // wave-curve sweep window
    std::vector<CurveSpec> curves;
    double cfl = 0.5;
    int n_cells = 400;
    double t_end = 0.4;
    std::vector<std::size_t> resolutions{100, 200, 400, 800};
};

double get_num(const nlohmann::json& v, const std::string& where)
{
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
        try {
            return parse_number(v.get<std::string>());
        } catch (const ConfigError& e) {
            throw ConfigError(where + ": " + e.what());
        }
    }
    throw ConfigError(where + ": expected a number or a 'p/q' string");
}

void reject_unknown(const nlohmann::json& obj, std::initializer_list<const char*> known,
                    const std::string& where)
{
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : known)
            if (it.key() == k) ok = true;
        if (!ok) throw ConfigError(where + ": unknown key '" + it.key() + "'");
    }
}

StateSpec parse_state_json(const nlohmann::json& v, const std::string& where)
{
    if (!v.is_object()) throw ConfigError(where + ": expected an object");
    reject_unknown(v, {"rho", "vx", "vt", "tdir_angle"}, where);
    StateSpec s;
    if (v.contains("rho")) s.rho = get_num(v["rho"], where + ".rho");
    if (v.contains("vx")) s.vx = get_num(v["vx"], where + ".vx");
    if (v.contains("vt")) s.vt = get_num(v["vt"], where + ".vt");
    if (v.contains("tdir_angle")) s.tdir_angle = get_num(v["tdir_angle"], where + ".tdir_angle");
    return s;
}

PrimState make_state(const StateSpec& s, const std::string& where)
{
    PrimState q{s.rho, s.vx, s.vt, TangentDir{1.0, 0.0}};
    if (s.tdir_angle != 0.0) q.tdir = TangentDir{std::cos(s.tdir_angle), std::sin(s.tdir_angle)};
    try {
        validate(q);
    } catch (const Error& e) {
        throw ConfigError(where + ": " + e.what());
    }
    return q;
}

Family parse_family(const std::string& name, const std::string& where)
{
    if (name == "left") return Family::Left;
    if (name == "right") return Family::Right;
    throw ConfigError(where + ": family must be 'left' or 'right'");
}

void apply_json(Config& c, const nlohmann::json& j)
{
    if (!j.is_object()) throw ConfigError("config root must be an object");
    reject_unknown(j,
                   {"mode", "cs2", "left", "right", "time", "grid", "scheme", "curves"},
                   "config");
    if (j.contains("mode")) c.mode = j["mode"].get<std::string>();
    if (j.contains("cs2")) c.cs2 = get_num(j["cs2"], "config.cs2");
    if (j.contains("left")) c.left = parse_state_json(j["left"], "config.left");
    if (j.contains("right")) c.right = parse_state_json(j["right"], "config.right");
    if (j.contains("time")) c.time = get_num(j["time"], "config.time");
    if (j.contains("grid")) {
        const auto& g = j["grid"];
        if (!g.is_object()) throw ConfigError("config.grid: expected an object");
        reject_unknown(g, {"x_min", "x_max", "n_points", "vx_min", "vx_max"}, "config.grid");
        if (g.contains("x_min")) c.x_min = get_num(g["x_min"], "config.grid.x_min");
        if (g.contains("x_max")) c.x_max = get_num(g["x_max"], "config.grid.x_max");
        if (g.contains("n_points")) c.n_points = g["n_points"].get<int>();
        if (g.contains("vx_min")) c.vx_min = get_num(g["vx_min"], "config.grid.vx_min");
        if (g.contains("vx_max")) c.vx_max = get_num(g["vx_max"], "config.grid.vx_max");
    }
    if (j.contains("scheme")) {
        const auto& s = j["scheme"];
        if (!s.is_object()) throw ConfigError("config.scheme: expected an object");
        reject_unknown(s, {"cfl", "n_cells", "t_end", "resolutions"}, "config.scheme");
        if (s.contains("cfl")) c.cfl = get_num(s["cfl"], "config.scheme.cfl");
        if (s.contains("n_cells")) c.n_cells = s["n_cells"].get<int>();
        if (s.contains("t_end")) c.t_end = get_num(s["t_end"], "config.scheme.t_end");
        if (s.contains("resolutions")) {
            c.resolutions.clear();
            for (const auto& v : s["resolutions"])
                c.resolutions.push_back(v.get<std::size_t>());
        }
    }
    if (j.contains("curves")) {
        c.curves.clear();
        int idx = 0;
        for (const auto& cv : j["curves"]) {
            const std::string where = "config.curves[" + std::to_string(idx) + "]";
            if (!cv.is_object()) throw ConfigError(where + ": expected an object");
            reject_unknown(cv, {"label", "state", "family"}, where);
            CurveSpec spec;
            spec.label = cv.contains("label") ? cv["label"].get<std::string>()
                                              : "c" + std::to_string(idx);
            if (!cv.contains("state")) throw ConfigError(where + ": missing 'state'");
            spec.state = parse_state_json(cv["state"], where + ".state");
            if (!cv.contains("family")) throw ConfigError(where + ": missing 'family'");
            spec.family = parse_family(cv["family"].get<std::string>(), where + ".family");
            c.curves.push_back(std::move(spec));
            ++idx;
        }
    }
}

StateSpec parse_state_flag(const std::string& text, const std::string& where)
{
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    if (parts.size() < 3 || parts.size() > 4)
        throw ConfigError(where + ": expected 'rho,vx,vt' or 'rho,vx,vt,tdir_angle'");
    StateSpec s;
    s.rho = parse_number(parts[0]);
    s.vx = parse_number(parts[1]);
    s.vt = parse_number(parts[2]);
    if (parts.size() == 4) s.tdir_angle = parse_number(parts[3]);
    return s;
}

// ---------------------------------------------------------------------------
// Output helpers

// %.17g round-trips doubles exactly; signed zero is collapsed so that golden
// files do not depend on how a zero was produced.
std::string fmt17(double v)
{
    if (v == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Output destination: a file path, or "-" for the primary stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback)
    {
        if (path.empty() || path == "-") {
            os_ = &fallback;
            return;
        }
        file_.open(path, std::ios::binary);
        if (!file_) throw ConfigError("cannot open output file '" + path + "'");
        os_ = &file_;
    }
    std::ostream& stream() { return *os_; }

private:
    std::ofstream file_;
    std::ostream* os_ = nullptr;
};

std::string wave_type_name(const WaveInfo& w)
{
    return w.type == WaveType::Shock ? "shock" : "rarefaction";
}

ordered_json wave_json(const WaveInfo& w)
{
    ordered_json out;
    out["type"] = wave_type_name(w);
    out["zero_strength"] = w.zero_strength;
    if (w.type == WaveType::Rarefaction)
        out["speeds"] = {w.outer, w.inner};  // head, tail
    else
        out["speeds"] = {w.outer};
    return out;
}

ordered_json summary_json(const RiemannSolution& sol)
{
    ordered_json out;
    out["pattern"] = sol.pattern();
    out["star"] = {{"vx", sol.star_vx()},
                   {"rho", sol.star_rho()},
                   {"vtL", sol.vt_left_star()},
                   {"vtR", sol.vt_right_star()}};
    out["waves"] = {{"left", wave_json(sol.left_wave())},
                    {"right", wave_json(sol.right_wave())}};
    return out;
}

// Points i = 0..n-1 spanning [a, b] as exact convex combinations; a symmetric
// interval therefore yields a bitwise-symmetric grid, which keeps mirrored
// configs byte-for-byte mirrored.
std::vector<double> linspace(double a, double b, int n)
{
    std::vector<double> xs(static_cast<std::size_t>(n));
    if (n == 1) {
        xs[0] = a;
        return xs;
    }
    const double d = static_cast<double>(n - 1);
    for (int i = 0; i < n; ++i)
        xs[static_cast<std::size_t>(i)] =
            (a * static_cast<double>(n - 1 - i) + b * static_cast<double>(i)) / d;
    return xs;
}

struct Problem {
    EosParams eos;
    PrimState left;
    PrimState right;
};

Problem resolve_problem(const Config& c)
{
    if (!c.left || !c.right) throw ConfigError("both 'left' and 'right' states are required");
    EosParams eos{};
    try {
        eos = EosParams::from_cs2(c.cs2);
    } catch (const Error& e) {
        throw ConfigError(std::string("cs2: ") + e.what());
    }
    return Problem{eos, make_state(*c.left, "left"), make_state(*c.right, "right")};
}

// ---------------------------------------------------------------------------
// Overlay import: a profile in the snapshot CSV schema is compared row by row.

struct OverlayDiff {
    std::size_t rows = 0;
    double max_abs[7] = {0, 0, 0, 0, 0, 0, 0};  // per column
};

constexpr const char* kSnapshotHeader = "x,xi,rho,p,vx,vt,W";

OverlayDiff compare_overlay(const std::string& path,
                            const std::vector<std::array<double, 7>>& computed)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open overlay file '" + path + "'");
    std::string line;
    if (!std::getline(in, line) || line != kSnapshotHeader)
        throw ConfigError("overlay '" + path + "': header must be '" + std::string(kSnapshotHeader)
                          + "'");
    OverlayDiff diff;
    std::size_t i = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (i >= computed.size())
            throw ConfigError("overlay '" + path + "': more rows than the computed profile");
        std::array<double, 7> row{};
        std::stringstream ss(line);
        std::string field;
        for (int col = 0; col < 7; ++col) {
            if (!std::getline(ss, field, ','))
                throw ConfigError("overlay '" + path + "': short row " + std::to_string(i + 2));
            row[static_cast<std::size_t>(col)] = parse_number(field);
        }
        for (int col = 0; col < 7; ++col) {
            const auto c = static_cast<std::size_t>(col);
            diff.max_abs[c] = std::max(diff.max_abs[c], std::abs(row[c] - computed[i][c]));
        }
        ++i;
    }
    if (i != computed.size())
        throw ConfigError("overlay '" + path + "': fewer rows than the computed profile");
    diff.rows = i;
    return diff;
}

// ---------------------------------------------------------------------------
// Mode runners

struct Paths {
    std::string output = "-";
    std::string summary;  // empty = auto: stdout if the CSV went to a file, else stderr
    std::string overlay;
};

void emit_summary(const ordered_json& j, const Paths& paths, std::ostream& out, std::ostream& err)
{
    if (!paths.summary.empty() && paths.summary != "-") {
        std::ofstream f(paths.summary, std::ios::binary);
        if (!f) throw ConfigError("cannot open summary file '" + paths.summary + "'");
        f << j.dump(2) << "\n";
        return;
    }
    const bool csv_on_stdout = paths.output.empty() || paths.output == "-";
    std::ostream& os = (paths.summary == "-") ? out : (csv_on_stdout ? err : out);
    os << j.dump(2) << "\n";
}

int run_snapshot(const Config& c, const Paths& paths, std::ostream& out, std::ostream& err)
{
    if (!(c.time > 0.0)) throw ConfigError("time must be > 0 for exact-snapshot");
    if (!(c.x_min < c.x_max)) throw ConfigError("grid: x_min must be < x_max");
    if (c.n_points < 1) throw ConfigError("grid: n_points must be >= 1");

    const Problem p = resolve_problem(c);
    const RiemannSolution sol = solve(p.left, p.right, p.eos);

    const std::vector<double> xs = linspace(c.x_min, c.x_max, c.n_points);
    const std::vector<PrimState> states = sol.snapshot(c.time, xs);

    std::vector<std::array<double, 7>> rows(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const PrimState& q = states[i];
        rows[i] = {xs[i],          xs[i] / c.time, q.rho, pressure(q.rho, p.eos),
                   q.vx,           q.vt,           lorentz(q)};
    }

    Sink sink(paths.output, out);
    sink.stream() << kSnapshotHeader << "\n";
    for (const auto& r : rows) {
        sink.stream() << fmt17(r[0]);
        for (int col = 1; col < 7; ++col)
            sink.stream() << ',' << fmt17(r[static_cast<std::size_t>(col)]);
        sink.stream() << "\n";
    }

    ordered_json summary = summary_json(sol);
    if (!paths.overlay.empty()) {
        const OverlayDiff diff = compare_overlay(paths.overlay, rows);
        summary["overlay"] = {{"rows", diff.rows},
                              {"max_abs_diff",
                               {{"x", diff.max_abs[0]},
                                {"xi", diff.max_abs[1]},
                                {"rho", diff.max_abs[2]},
                                {"p", diff.max_abs[3]},
                                {"vx", diff.max_abs[4]},
                                {"vt", diff.max_abs[5]},
                                {"W", diff.max_abs[6]}}}};
    }
    emit_summary(summary, paths, out, err);
    return 0;
}

std::string curve_file_path(const std::string& base, const std::string& label, bool multi)
{
    const std::string token = "{label}";
    const auto at = base.find(token);
    if (at != std::string::npos) {
        std::string s = base;
        s.replace(at, token.size(), label);
        return s;
    }
    if (!multi) return base;
    const auto dot = base.rfind('.');
    const auto slash = base.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return base + "_" + label;
    return base.substr(0, dot) + "_" + label + base.substr(dot);
}

int run_wave_curves(const Config& c, const Paths& paths, std::ostream& out, std::ostream& err)
{
    if (c.n_points < 1) throw ConfigError("grid: n_points must be >= 1");
    if (!(std::abs(c.vx_min) < 1.0) || !(std::abs(c.vx_max) < 1.0) || !(c.vx_min <= c.vx_max))
        throw ConfigError("grid: need vx_min <= vx_max with both inside (-1, 1)");

    EosParams eos{};
    try {
        eos = EosParams::from_cs2(c.cs2);
    } catch (const Error& e) {
        throw ConfigError(std::string("cs2: ") + e.what());
    }

    std::vector<CurveSpec> curves = c.curves;
    if (curves.empty()) {
        // Default: the two families that meet in the star region.
        if (!c.left || !c.right)
            throw ConfigError("wave-curves: provide 'curves' or both 'left' and 'right'");
        curves.push_back(CurveSpec{"left", *c.left, Family::Left});
        curves.push_back(CurveSpec{"right", *c.right, Family::Right});
    }

    const bool to_stdout = paths.output.empty() || paths.output == "-";
    const bool multi = curves.size() > 1;

    ordered_json summary;
    summary["curves"] = ordered_json::array();

    for (const CurveSpec& spec : curves) {
        const PrimState ahead = make_state(spec.state, "curve '" + spec.label + "'");
        const RarefactionCurve rare(ahead, eos, spec.family);
        const ShockCurve shock(ahead, eos, spec.family);

        std::vector<std::string> lines;
        const std::vector<double> vxs =
            c.n_points == 1 ? std::vector<double>{ahead.vx} : linspace(c.vx_min, c.vx_max,
                                                                       c.n_points);
        for (double vx : vxs) {
            // The shock branch continues the curve on the compressive side of
            // the ahead state, the rarefaction branch on the other side.
            const bool shock_side =
                spec.family == Family::Right ? (vx >= ahead.vx) : (vx <= ahead.vx);
            if (vx == ahead.vx) {
                lines.push_back(fmt17(vx) + "," + fmt17(ahead.rho) + ",none");
                continue;
            }
            try {
                const double rho = shock_side ? shock.rho_of_vx(vx) : rare.rho_of_vx(vx);
                lines.push_back(fmt17(vx) + "," + fmt17(rho) + ","
                                + (shock_side ? "shock" : "rarefaction"));
            } catch (const VacuumLimitError&) {
                // Past the vacuum end of the rarefaction branch: no state.
                continue;
            }
        }

        ordered_json entry;
        entry["label"] = spec.label;
        entry["family"] = spec.family == Family::Left ? "left" : "right";
        entry["ahead"] = {{"rho", ahead.rho}, {"vx", ahead.vx}, {"vt", ahead.vt}};
        entry["rows"] = lines.size();

        if (to_stdout) {
            if (multi) out << "# curve=" << spec.label << "\n";
            out << "vx,rho,branch\n";
            for (const std::string& l : lines) out << l << "\n";
        } else {
            const std::string path = curve_file_path(paths.output, spec.label, multi);
            std::ofstream f(path, std::ios::binary);
            if (!f) throw ConfigError("cannot open output file '" + path + "'");
            f << "vx,rho,branch\n";
            for (const std::string& l : lines) f << l << "\n";
            entry["path"] = path;
        }
        summary["curves"].push_back(std::move(entry));
    }

    emit_summary(summary, paths, out, err);
    return 0;
}

void validate_scheme(const Config& c)
{
    if (!(c.cfl > 0.0) || !(c.cfl <= 1.0)) throw ConfigError("scheme: cfl must lie in (0, 1]");
    if (!(c.t_end > 0.0)) throw ConfigError("scheme: t_end must be > 0");
    if (!(c.x_min < 0.0) || !(c.x_max > 0.0))
        throw ConfigError("grid: the domain must contain the initial jump at x = 0");
}

int run_godunov(const Config& c, const Paths& paths, std::ostream& out, std::ostream& err)
{
    validate_scheme(c);
    if (c.n_cells < 2) throw ConfigError("scheme: n_cells must be >= 2");

    const Problem p = resolve_problem(c);
    const RiemannSolution exact = solve(p.left, p.right, p.eos);

    Grid1D g = riemann_grid(p.left, p.right, p.eos, c.x_min, c.x_max,
                            static_cast<std::size_t>(c.n_cells));
    const SchemeConfig scfg{c.cfl};
    const RunResult res = run(std::move(g), scfg, p.eos, c.t_end);

    const std::size_t n = res.grid.cells.size();
    std::vector<double> centers(n);
    for (std::size_t i = 0; i < n; ++i) centers[i] = res.grid.x_center(i);
    const std::vector<PrimState> ref = exact.snapshot(c.t_end, centers);
    const std::vector<PrimState> num = cell_primitives(res.grid, p.eos);

    Sink sink(paths.output, out);
    sink.stream() << "x,rho,vx,vt,rho_exact,vx_exact,vt_exact,d_rho,d_vx,d_vt\n";
    double l1[3] = {0, 0, 0};
    for (std::size_t i = 0; i < n; ++i) {
        const double dr = num[i].rho - ref[i].rho;
        const double dx = num[i].vx - ref[i].vx;
        const double dt = num[i].vt - ref[i].vt;
        l1[0] += std::abs(dr);
        l1[1] += std::abs(dx);
        l1[2] += std::abs(dt);
        sink.stream() << fmt17(centers[i]) << ',' << fmt17(num[i].rho) << ',' << fmt17(num[i].vx)
                      << ',' << fmt17(num[i].vt) << ',' << fmt17(ref[i].rho) << ','
                      << fmt17(ref[i].vx) << ',' << fmt17(ref[i].vt) << ',' << fmt17(dr) << ','
                      << fmt17(dx) << ',' << fmt17(dt) << "\n";
    }
    const double h = res.grid.h();

    ordered_json summary;
    summary["pattern"] = exact.pattern();
    summary["steps"] = res.steps;
    summary["time"] = res.grid.time;
    summary["conservation_error"] = {res.conservation_error[0], res.conservation_error[1],
                                     res.conservation_error[2], res.conservation_error[3]};
    summary["l1"] = {{"rho", h * l1[0]}, {"vx", h * l1[1]}, {"vt", h * l1[2]}};
    emit_summary(summary, paths, out, err);
    return 0;
}

int run_convergence_mode(const Config& c, const Paths& paths, std::ostream& out,
                         std::ostream& err)
{
    validate_scheme(c);
    if (c.resolutions.empty()) throw ConfigError("scheme: resolutions must be nonempty");
    for (std::size_t n : c.resolutions)
        if (n < 2) throw ConfigError("scheme: every resolution must be >= 2");

    const Problem p = resolve_problem(c);
    const std::vector<ConvergenceRow> rows = run_convergence(
        p.left, p.right, p.eos, c.resolutions, c.t_end, c.x_min, c.x_max, c.cfl);

    Sink sink(paths.output, out);
    sink.stream() << "n,L1_rho,L1_vx,L1_vt,ratio\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        sink.stream() << rows[i].n_cells << ',' << fmt17(rows[i].l1_rho) << ','
                      << fmt17(rows[i].l1_vx) << ',' << fmt17(rows[i].l1_vt) << ',';
        if (i > 0) sink.stream() << fmt17(rows[i - 1].l1_rho / rows[i].l1_rho);
        sink.stream() << "\n";
    }

    ordered_json summary;
    summary["rows"] = rows.size();
    ordered_json table = ordered_json::array();
    for (const ConvergenceRow& r : rows)
        table.push_back({{"n", r.n_cells}, {"L1_rho", r.l1_rho}, {"L1_vx", r.l1_vx},
                         {"L1_vt", r.l1_vt}});
    summary["convergence"] = std::move(table);
    emit_summary(summary, paths, out, err);
    return 0;
}

}  // namespace

double parse_number(const std::string& text)
{
    const auto parse_plain = [&text](const std::string& part) {
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(part, &pos);
        } catch (const std::exception&) {
            throw ConfigError("not a number: '" + text + "'");
        }
        while (pos < part.size() && std::isspace(static_cast<unsigned char>(part[pos]))) ++pos;
        if (pos != part.size()) throw ConfigError("not a number: '" + text + "'");
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) return parse_plain(text);
    const double num = parse_plain(text.substr(0, slash));
    const double den = parse_plain(text.substr(slash + 1));
    if (den == 0.0) throw ConfigError("zero denominator in '" + text + "'");
    return num / den;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("urhydro");
    for (const std::string& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact relativistic Riemann solver and Godunov scheme for p = cs^2 rho"};

    std::string mode;
    app.add_option("mode", mode,
                   "exact-snapshot | wave-curves | godunov | convergence "
                   "(may also come from the config file)");
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file");
    std::string cs2, left, right, time_s, x_min_s, x_max_s, cfl_s, t_end_s;
    std::string vx_min_s, vx_max_s, resolutions_s;
    int n_points = -1, n_cells = -1;
    app.add_option("--cs2", cs2, "squared sound speed; decimals or 'p/q'");
    app.add_option("--left", left, "left state as 'rho,vx,vt[,tdir_angle]'");
    app.add_option("--right", right, "right state as 'rho,vx,vt[,tdir_angle]'");
    app.add_option("-t,--time", time_s, "snapshot time (exact-snapshot)");
    app.add_option("--x-min", x_min_s, "grid lower edge");
    app.add_option("--x-max", x_max_s, "grid upper edge");
    app.add_option("--points", n_points, "number of sample points / curve points");
    app.add_option("--vx-min", vx_min_s, "wave-curve sweep start");
    app.add_option("--vx-max", vx_max_s, "wave-curve sweep end");
    app.add_option("--cells", n_cells, "Godunov cell count");
    app.add_option("--cfl", cfl_s, "CFL number in (0, 1]");
    app.add_option("--t-end", t_end_s, "Godunov end time");
    app.add_option("--resolutions", resolutions_s, "comma list of cell counts (convergence)");
    Paths paths;
    app.add_option("-o,--output", paths.output, "CSV destination; '-' = stdout")
        ->default_val("-");
    app.add_option("--summary", paths.summary,
                   "JSON summary destination; '-' = stdout "
                   "(default: stdout when the CSV goes to a file, stderr otherwise)");
    app.add_option("--overlay", paths.overlay,
                   "externally produced snapshot CSV to difference against (exact-snapshot)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        Config cfg;
        if (!config_path.empty()) {
            std::ifstream f(config_path);
            if (!f) throw ConfigError("cannot open config file '" + config_path + "'");
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(f);
            } catch (const nlohmann::json::parse_error& e) {
                throw ConfigError(std::string("config parse: ") + e.what());
            }
            apply_json(cfg, j);
        }
        try {
            if (!mode.empty()) cfg.mode = mode;
            if (!cs2.empty()) cfg.cs2 = parse_number(cs2);
            if (!left.empty()) cfg.left = parse_state_flag(left, "--left");
            if (!right.empty()) cfg.right = parse_state_flag(right, "--right");
            if (!time_s.empty()) cfg.time = parse_number(time_s);
            if (!x_min_s.empty()) cfg.x_min = parse_number(x_min_s);
            if (!x_max_s.empty()) cfg.x_max = parse_number(x_max_s);
            if (n_points > 0) cfg.n_points = n_points;
            if (!vx_min_s.empty()) cfg.vx_min = parse_number(vx_min_s);
            if (!vx_max_s.empty()) cfg.vx_max = parse_number(vx_max_s);
            if (n_cells > 0) cfg.n_cells = n_cells;
            if (!cfl_s.empty()) cfg.cfl = parse_number(cfl_s);
            if (!t_end_s.empty()) cfg.t_end = parse_number(t_end_s);
            if (!resolutions_s.empty()) {
                cfg.resolutions.clear();
                std::stringstream ss(resolutions_s);
                std::string field;
                while (std::getline(ss, field, ',')) {
                    const double v = parse_number(field);
                    if (!(v >= 2.0) || v != std::floor(v))
                        throw ConfigError("--resolutions: expected integers >= 2");
                    cfg.resolutions.push_back(static_cast<std::size_t>(v));
                }
            }
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(std::string("config: ") + e.what());
        }

        if (cfg.mode == "exact-snapshot") return run_snapshot(cfg, paths, out, err);
        if (cfg.mode == "wave-curves") return run_wave_curves(cfg, paths, out, err);
        if (cfg.mode == "godunov") return run_godunov(cfg, paths, out, err);
        if (cfg.mode == "convergence") return run_convergence_mode(cfg, paths, out, err);
        if (cfg.mode.empty())
            throw ConfigError("no mode given (positional argument or config 'mode')");
        throw ConfigError("unknown mode '" + cfg.mode + "'");
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "solver error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace urh::cli
