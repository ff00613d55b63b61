#ifndef NRLAB_SYMMETRY_HPP
#define NRLAB_SYMMETRY_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "nrlab/complex.hpp"
#include "nrlab/profile.hpp"

namespace nrlab {

using MapFn = std::function<Complex(Complex)>;

enum class SymmetryMode { jack, circular, bicirc };

/// One verified clause: `violation` is the worst excess over the allowed
/// slack-free bound (<= 0 means the clause holds exactly on the grid);
/// `at` is where it occurred.
struct SymmetryClause {
    std::string name;
    double violation;
    Complex at;
};

struct SymmetryReport {
    SymmetryMode mode;
    double tol;
    bool pass;
    std::vector<SymmetryClause> clauses;

    const SymmetryClause& worst() const;
};

/// Grid verification of circular-symmetry conditions for a map on the disk:
///   jack     — |f(r e^{i t})| <= |f(r)| for all grid points
///   circular — jack, plus f(conj z) = conj f(z), plus t -> |f(r e^{it})|
///              non-increasing on [0, pi]
///   bicirc   — |f(ir)| <= |f(r e^{it})| <= |f(r)|, plus both axis
///              reflections f(conj z) = conj f(z) and f(-z) = -f(z)
/// The reference values |f(r)|, |f(ir)| are computed on the same grid, so
/// the tolerance interacts with grid error only once. Violations are
/// reported, never thrown.
SymmetryReport verify_symmetry(const MapFn& f, SymmetryMode mode,
                               std::span<const double> r_grid,
                               std::span<const double> theta_grid, double tol);

struct SchwarzJackReport {
    bool pass;
    SymmetryReport jack;
    double max_imag_on_axis;  // |Im f(x)| must stay below tol on the grid
    ProfileReport positive;
    ProfileReport increasing;
    ProfileReport convex;
};

/// Checks the combined conclusion for maps fixing 0 that attain their
/// circle maxima on the positive axis: the Jack condition on the disk and
/// a positive, increasing, convex restriction to [0, r_max]. `grid` is a
/// uniform radial grid starting at 0; f(0) must vanish within tol
/// (HypothesisViolatedError otherwise).
SchwarzJackReport schwarz_jack_verify(const MapFn& f, std::span<const double> grid,
                                      double tol);

}  // namespace nrlab

#endif  // NRLAB_SYMMETRY_HPP
