#include "nrlab/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "nrlab/errors.hpp"

namespace nrlab {

const SymmetryClause& SymmetryReport::worst() const {
    return *std::max_element(clauses.begin(), clauses.end(),
                             [](const SymmetryClause& x, const SymmetryClause& y) {
                                 return x.violation < y.violation;
                             });
}

SymmetryReport verify_symmetry(const MapFn& f, SymmetryMode mode,
                               std::span<const double> r_grid,
                               std::span<const double> theta_grid, double tol) {
    if (r_grid.empty() || theta_grid.empty())
        throw InvalidParameterError("verify_symmetry: empty grid");
    for (double r : r_grid)
        if (!(r > 0.0 && r < 1.0))
            throw InvalidParameterError("verify_symmetry: radii must lie in (0,1)");

    SymmetryClause upper{"max on positive axis", -std::numeric_limits<double>::infinity(),
                         Complex(0.0)};
    SymmetryClause lower{"min on imaginary axis", -std::numeric_limits<double>::infinity(),
                         Complex(0.0)};
    SymmetryClause conj_sym{"conjugation symmetry", -std::numeric_limits<double>::infinity(),
                            Complex(0.0)};
    SymmetryClause odd_sym{"odd symmetry", -std::numeric_limits<double>::infinity(),
                           Complex(0.0)};
    SymmetryClause monotone{"|f| non-increasing over [0, pi]",
                            -std::numeric_limits<double>::infinity(), Complex(0.0)};

    // Sorted angles in [0, pi] for the monotonicity clause.
    std::vector<double> upper_half;
    if (mode == SymmetryMode::circular) {
        for (double t : theta_grid)
            if (t >= 0.0 && t <= kPi + 1e-15) upper_half.push_back(t);
        std::sort(upper_half.begin(), upper_half.end());
    }

    for (double r : r_grid) {
        const double ref_pos = std::abs(f(Complex(r, 0.0)));
        const double ref_imag =
            (mode == SymmetryMode::bicirc) ? std::abs(f(Complex(0.0, r))) : 0.0;

        for (double t : theta_grid) {
            Complex z = r * Complex(std::cos(t), std::sin(t));
            Complex fz = f(z);
            double mod = std::abs(fz);

            if (mod - ref_pos > upper.violation) upper = {upper.name, mod - ref_pos, z};
            if (mode == SymmetryMode::bicirc && ref_imag - mod > lower.violation)
                lower = {lower.name, ref_imag - mod, z};

            if (mode != SymmetryMode::jack) {
                double dev = std::abs(f(std::conj(z)) - std::conj(fz));
                if (dev > conj_sym.violation) conj_sym = {conj_sym.name, dev, z};
            }
            if (mode == SymmetryMode::bicirc) {
                double dev = std::abs(f(-z) + fz);
                if (dev > odd_sym.violation) odd_sym = {odd_sym.name, dev, z};
            }
        }

        if (mode == SymmetryMode::circular) {
            bool first = true;
            double prev = 0.0;
            for (double t : upper_half) {
                Complex z = r * Complex(std::cos(t), std::sin(t));
                double mod = std::abs(f(z));
                if (!first && mod - prev > monotone.violation)
                    monotone = {monotone.name, mod - prev, z};
                prev = mod;
                first = false;
            }
        }
    }

    SymmetryReport report;
    report.mode = mode;
    report.tol = tol;
    report.clauses.push_back(upper);
    if (mode == SymmetryMode::bicirc) {
        report.clauses.push_back(lower);
        report.clauses.push_back(conj_sym);
        report.clauses.push_back(odd_sym);
    } else if (mode == SymmetryMode::circular) {
        report.clauses.push_back(conj_sym);
        report.clauses.push_back(monotone);
    }
    report.pass = true;
    for (const auto& c : report.clauses)
        if (c.violation > tol) report.pass = false;
    return report;
}

SchwarzJackReport schwarz_jack_verify(const MapFn& f, std::span<const double> grid,
                                      double tol) {
    if (grid.size() < 3)
        throw InvalidParameterError("schwarz_jack_verify: need at least 3 grid points");
    if (std::abs(f(Complex(0.0))) > tol)
        throw HypothesisViolatedError("schwarz_jack_verify: f(0) != 0");

    // Jack condition over the positive radii of the grid and a fixed
    // angular resolution.
    std::vector<double> radii;
    for (double x : grid)
        if (x > 0.0 && x < 1.0) radii.push_back(x);
    constexpr int kAngles = 256;
    std::vector<double> thetas(kAngles);
    for (int k = 0; k < kAngles; ++k) thetas[static_cast<std::size_t>(k)] = 2.0 * kPi * k / kAngles;
    SymmetryReport jack = verify_symmetry(f, SymmetryMode::jack, radii, thetas, tol);

    // Restriction to the grid must be (real and) positive, increasing, convex.
    std::vector<double> values(grid.size());
    double max_imag = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        Complex v = f(Complex(grid[i], 0.0));
        values[i] = v.real();
        max_imag = std::max(max_imag, std::abs(v.imag()));
    }
    ProfileReport positive = profile_margins(grid, values, ProfileMode::positive, tol);
    ProfileReport increasing = profile_margins(grid, values, ProfileMode::increasing, tol);
    ProfileReport convex = profile_margins(grid, values, ProfileMode::convex, tol);

    SchwarzJackReport report{jack.pass && max_imag <= tol && positive.pass && increasing.pass &&
                                 convex.pass,
                             std::move(jack),
                             max_imag,
                             positive,
                             increasing,
                             convex};
    return report;
}

}  // namespace nrlab
