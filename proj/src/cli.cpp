#include "nrlab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>

#include "nrlab/complex.hpp"
#include "nrlab/crouzeix.hpp"
#include "nrlab/curve.hpp"
#include "nrlab/ellipse_map.hpp"
#include "nrlab/emit.hpp"
#include "nrlab/errors.hpp"
#include "nrlab/matrix2.hpp"
#include "nrlab/numerical_range.hpp"
#include "nrlab/quintic.hpp"
#include "nrlab/symmetry.hpp"

namespace nrlab::cli {

namespace {

std::string fmt(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string fmt(Complex z) {
    std::string s = fmt(z.real());
    if (z.imag() >= 0.0 || std::isnan(z.imag())) s += "+";
    s += fmt(z.imag()) + "i";
    return s;
}

bool parse_double_strict(std::string_view s, double& out) {
    if (s.empty()) return false;
    if (s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return false;
    auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

// Matrix entries use the single-token forms "re", "re+imi", "re-imi"
// (bare "imi" is accepted too). No spaces.
Complex parse_complex_token(const std::string& token) {
    if (token.empty()) throw InvalidParameterError("empty complex token");
    std::string body = token;
    bool has_imag_unit = (body.back() == 'i');
    if (has_imag_unit) body.pop_back();

    if (!has_imag_unit) {
        double re;
        if (!parse_double_strict(body, re))
            throw InvalidParameterError("bad complex token '" + token + "'");
        return Complex(re, 0.0);
    }

    // Split at the last top-level sign (one not directly after an exponent).
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < body.size(); ++i) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E')
            split = i;
    }
    std::string re_str, im_str;
    if (split == std::string::npos) {
        re_str = "0";
        im_str = body;
    } else {
        re_str = body.substr(0, split);
        im_str = body.substr(split);
    }
    if (im_str.empty() || im_str == "+") im_str = "1";
    if (im_str == "-") im_str = "-1";
    double re, im;
    if (!parse_double_strict(re_str, re) || !parse_double_strict(im_str, im))
        throw InvalidParameterError("bad complex token '" + token + "'");
    return Complex(re, im);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    if (!s.empty() && s.back() == ',') out.push_back("");
    return out;
}

Matrix2 parse_matrix(const std::string& spec) {
    auto tokens = split_commas(spec);
    if (tokens.size() != 4)
        throw InvalidParameterError("--matrix needs 4 comma-separated entries");
    return Matrix2(parse_complex_token(tokens[0]), parse_complex_token(tokens[1]),
                   parse_complex_token(tokens[2]), parse_complex_token(tokens[3]));
}

std::pair<double, double> parse_pair(const std::string& spec, const char* what) {
    auto tokens = split_commas(spec);
    double x, y;
    if (tokens.size() != 2 || !parse_double_strict(tokens[0], x) ||
        !parse_double_strict(tokens[1], y))
        throw InvalidParameterError(std::string(what) + " needs two comma-separated reals");
    return {x, y};
}

ProfileDomain read_profile_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParameterError("cannot read profile file '" + path + "'");
    std::vector<double> thetas, radii;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("theta", 0) == 0) continue;  // optional header
        auto tokens = split_commas(line);
        double t, r;
        if (tokens.size() != 2 || !parse_double_strict(tokens[0], t) ||
            !parse_double_strict(tokens[1], r))
            throw InvalidParameterError("bad profile line '" + line + "'");
        thetas.push_back(t);
        radii.push_back(r);
    }
    return ProfileDomain(std::move(thetas), std::move(radii));
}

// "-" as a path means standard output.
int write_curves(const std::vector<CurveSamples>& curves, const std::string& format,
                 const std::string& path, std::ostream& out, std::ostream& err) {
    auto write = [&](std::ostream& sink) {
        if (format == "csv") {
            if (curves.size() != 1) throw InvalidParameterError("csv output takes one curve");
            emit_csv(curves.front(), sink);
        } else if (format == "svg") {
            emit_svg(curves, sink);
        } else {
            throw InvalidParameterError("unknown output format '" + format + "'");
        }
    };
    if (path == "-") {
        write(out);
        return 0;
    }
    std::ofstream file(path);
    if (!file) {
        err << "error: cannot open '" << path << "' for writing\n";
        return 2;
    }
    write(file);
    return 0;
}

struct GridSpec {
    std::vector<double> radii;
    std::vector<double> thetas;
};

GridSpec make_grids(int n, double r_max = 0.999) {
    GridSpec g;
    g.radii.resize(static_cast<std::size_t>(n));
    g.thetas.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        g.radii[static_cast<std::size_t>(i)] = r_max * (i + 1) / n;
        g.thetas[static_cast<std::size_t>(i)] = 2.0 * kPi * i / n;
    }
    return g;
}

int run_verify(const std::string& suite, bool has_b, double b, bool has_quintic,
               const std::string& quintic_spec, int grid_n, double tol, std::ostream& out,
               std::ostream& err) {
    if (suite == "crouzeix") {
        ProofReport report = verify_cp_bound(has_b ? b : 1.0);
        out << "crouzeix pipeline, b = " << fmt(report.b) << "\n";
        out << "  rho      = " << fmt(report.rho) << "\n";
        out << "  phi(1)   = " << fmt(report.phi1) << "\n";
        out << "  phi'(0)  = " << fmt(report.phip0) << "\n";
        out << "  cp norm  = " << fmt(report.cp_norm) << "\n";
        out << "  1 - phi(1)/phi'(0) = " << fmt(report.product_scalar) << "\n";
        for (const NamedCheck& c : report.checks)
            out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name
                << "  (margin " << fmt(c.margin) << ")\n";
        return report.all_pass() ? 0 : 1;
    }

    // Map under test: an explicit quintic, the ellipse-to-disk inverse map
    // for --b, or the showcase quintic z + z^3/4 - z^5/20 by default.
    MapFn f;
    std::string label;
    if (has_quintic) {
        auto [qa, qb] = parse_pair(quintic_spec, "--quintic");
        QuinticMap q(qa, qb);
        f = [q](Complex z) { return q(z); };
        label = "quintic a=" + fmt(qa) + " b=" + fmt(qb);
    } else if (has_b) {
        auto map = std::make_shared<EllipseMap>(b);
        f = [map](Complex w) { return map->inverse(w, 1e-12); };
        label = "ellipse inverse map, b=" + fmt(b);
    } else {
        QuinticMap q(0.25, 0.05);
        f = [q](Complex z) { return q(z); };
        label = "quintic a=0.25 b=0.05";
    }

    if (suite == "schwarz-jack") {
        std::vector<double> grid(static_cast<std::size_t>(grid_n) + 1);
        for (int i = 0; i <= grid_n; ++i)
            grid[static_cast<std::size_t>(i)] = 0.999 * i / grid_n;
        SchwarzJackReport r = schwarz_jack_verify(f, grid, tol);
        out << "schwarz-jack: " << label << " (grid " << grid_n + 1 << ", r_max 0.999)\n";
        out << "  [" << (r.jack.pass ? "pass" : "FAIL") << "] jack condition, worst violation "
            << fmt(r.jack.worst().violation) << "\n";
        out << "  [" << (r.max_imag_on_axis <= tol ? "pass" : "FAIL")
            << "] real on axis, max |Im| " << fmt(r.max_imag_on_axis) << "\n";
        out << "  [" << (r.positive.pass ? "pass" : "FAIL") << "] positive, min value "
            << fmt(r.positive.min_margin) << "\n";
        out << "  [" << (r.increasing.pass ? "pass" : "FAIL")
            << "] increasing, min difference " << fmt(r.increasing.min_margin) << "\n";
        out << "  [" << (r.convex.pass ? "pass" : "FAIL")
            << "] convex, min second difference " << fmt(r.convex.min_margin) << "\n";
        return r.pass ? 0 : 1;
    }

    SymmetryMode mode;
    if (suite == "jack")
        mode = SymmetryMode::jack;
    else if (suite == "bicirc")
        mode = SymmetryMode::bicirc;
    else {
        err << "error: unknown suite '" << suite << "'\n";
        return 2;
    }
    GridSpec g = make_grids(grid_n);
    SymmetryReport r = verify_symmetry(f, mode, g.radii, g.thetas, tol);
    out << suite << ": " << label << " (grid " << grid_n << "x" << grid_n
        << ", r_max 0.999, tol " << fmt(tol) << ")\n";
    for (const SymmetryClause& c : r.clauses)
        out << "  [" << (c.violation <= tol ? "pass" : "FAIL") << "] " << c.name
            << ", worst violation " << fmt(c.violation) << " at z = " << fmt(c.at) << "\n";
    return r.pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"numerical laboratory for conformal maps, numerical ranges and spectral bounds"};
    app.name("nrlab");
    app.require_subcommand(1);

    // ellipse-map
    double em_b = 0.0, em_eps = 1e-12;
    std::string em_at;
    auto* em = app.add_subcommand("ellipse-map",
                                  "constants of the ellipse-to-disk conformal map");
    em->add_option("--b", em_b, "semi-minor axis (foci at +-1)")->required();
    em->add_option("--eps", em_eps, "series truncation tolerance");
    em->add_option("--at", em_at, "evaluate the map at re,im");

    // verify
    std::string v_suite;
    double v_b = 0.0, v_tol = 1e-8;
    std::string v_quintic;
    int v_grid = 200;
    auto* ve = app.add_subcommand("verify", "run a verification suite");
    ve->add_option("--suite", v_suite, "jack | schwarz-jack | bicirc | crouzeix")
        ->required()
        ->check(CLI::IsMember({"jack", "schwarz-jack", "bicirc", "crouzeix"}));
    auto* vb = ve->add_option("--b", v_b, "ellipse semi-minor axis");
    auto* vq = ve->add_option("--quintic", v_quintic, "quintic coefficients a,b");
    ve->add_option("--grid", v_grid, "grid resolution")->check(CLI::PositiveNumber);
    ve->add_option("--tol", v_tol, "verification tolerance");

    // numrange
    std::string nr_matrix, nr_out = "csv", nr_path = "-";
    int nr_points = 360;
    auto* nr = app.add_subcommand("numrange", "sample the boundary of the numerical range");
    nr->add_option("--matrix", nr_matrix, "entries a11,a12,a21,a22 (re+imi form)")->required();
    nr->add_option("--points", nr_points, "boundary sample count")->check(CLI::PositiveNumber);
    nr->add_option("--out", nr_out, "csv | svg")->check(CLI::IsMember({"csv", "svg"}));
    nr->add_option("--path", nr_path, "output file, - for stdout");

    // ratio
    std::string rt_matrix;
    int rt_degree = 0, rt_restarts = 32;
    std::uint64_t rt_seed = 0;
    auto* rt = app.add_subcommand("ratio", "search for a near-extremal spectral-set ratio");
    rt->add_option("--matrix", rt_matrix, "entries a11,a12,a21,a22")->required();
    rt->add_option("--degree", rt_degree, "max polynomial degree")
        ->required()
        ->check(CLI::NonNegativeNumber);
    rt->add_option("--restarts", rt_restarts, "restarts per degree")->check(CLI::PositiveNumber);
    rt->add_option("--seed", rt_seed, "search seed");

    // domain
    std::string dm_quintic, dm_profile, dm_out = "svg", dm_path = "-";
    int dm_points = 720;
    auto* dm = app.add_subcommand("domain", "emit a domain boundary");
    auto* dq = dm->add_option("--quintic", dm_quintic, "quintic coefficients a,b");
    auto* dp = dm->add_option("--profile", dm_profile, "radial profile file (theta,radius rows)");
    dq->excludes(dp);
    dm->add_option("--points", dm_points, "boundary sample count")->check(CLI::PositiveNumber);
    dm->add_option("--out", dm_out, "csv | svg")->check(CLI::IsMember({"csv", "svg"}));
    dm->add_option("--path", dm_path, "output file, - for stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        if (em->parsed()) {
            EllipseConstants c = ellipse_constants(em_b, em_eps);
            out << "rho     = " << fmt(c.rho) << "\n";
            out << "phi(1)  = " << fmt(c.phi_at_1) << "\n";
            out << "phi'(0) = " << fmt(c.phi_prime_at_0) << "\n";
            out << "2/rho   = " << fmt(2.0 / c.rho) << "\n";
            if (!em_at.empty()) {
                auto [re, im] = parse_pair(em_at, "--at");
                EllipseMap map(em_b, em_eps);
                out << "phi(z)  = " << fmt(map.eval(Complex(re, im))) << "\n";
            }
            return 0;
        }
        if (ve->parsed())
            return run_verify(v_suite, vb->count() > 0, v_b, vq->count() > 0, v_quintic, v_grid,
                              v_tol, out, err);
        if (nr->parsed()) {
            if (nr_points < 8) throw InvalidParameterError("--points must be >= 8");
            CurveSamples curve = nr_boundary(parse_matrix(nr_matrix), nr_points);
            return write_curves({curve}, nr_out, nr_path, out, err);
        }
        if (rt->parsed()) {
            RatioReport r = ratio_search(parse_matrix(rt_matrix), rt_degree, rt_restarts, rt_seed);
            out << "best ratio  = " << fmt(r.best_ratio) << "\n";
            out << "degree      = " << r.degree << "\n";
            out << "evaluations = " << r.evaluations << "\n";
            out << "seed        = " << r.seed << "\n";
            out << "best poly   =";
            for (const Complex& c : r.best_poly.coefficients()) out << ' ' << fmt(c);
            out << "  (coefficients of increasing degree)\n";
            return 0;
        }
        if (dm->parsed()) {
            if (dq->count() == 0 && dp->count() == 0)
                throw InvalidParameterError("domain needs --quintic or --profile");
            if (dq->count() > 0) {
                auto [qa, qb] = parse_pair(dm_quintic, "--quintic");
                QuinticMap q(qa, qb);
                std::vector<double> params(static_cast<std::size_t>(dm_points));
                std::vector<Complex> points(static_cast<std::size_t>(dm_points));
                auto eval = [q](double t) { return q(Complex(std::cos(t), std::sin(t))); };
                for (int k = 0; k < dm_points; ++k) {
                    params[static_cast<std::size_t>(k)] = 2.0 * kPi * k / dm_points;
                    points[static_cast<std::size_t>(k)] =
                        eval(params[static_cast<std::size_t>(k)]);
                }
                CurveSamples curve(std::move(params), std::move(points), eval, 2.0 * kPi);
                return write_curves({curve}, dm_out, dm_path, out, err);
            }
            ProfileDomain profile = read_profile_file(dm_profile);
            CurveSamples curve = bicirc_from_profile(profile, dm_points);
            return write_curves({curve}, dm_out, dm_path, out, err);
        }
        err << "error: no subcommand\n";
        return 2;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace nrlab::cli
