#include "nrlab/quintic.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "nrlab/errors.hpp"

namespace nrlab {

bool quintic_admissible(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
        throw InvalidParameterError("quintic_admissible: coefficients must be positive");
    return 3.0 * a + 5.0 * b <= 1.0 && a * b + 4.0 * b <= a;
}

QuinticMap::QuinticMap(double a, double b) : a_(a), b_(b) {
    if (!quintic_admissible(a, b))
        throw InvalidParameterError("QuinticMap: coefficients fail 3a+5b <= 1, ab+4b <= a");
}

Complex QuinticMap::operator()(Complex z) const {
    Complex z2 = z * z;
    return z * (1.0 + z2 * (a_ - b_ * z2));
}

Polynomial QuinticMap::polynomial() const {
    return Polynomial{Complex(0.0), Complex(1.0), Complex(0.0), Complex(a_), Complex(0.0),
                      Complex(-b_)};
}

DerivativeIdentity boundary_derivative_identity(const QuinticMap& f, double theta) {
    const double h = 1e-5;
    auto sq_mod = [&f](double t) {
        Complex v = f(Complex(std::cos(t), std::sin(t)));
        return std::norm(v);
    };
    double fd = (sq_mod(theta + h) - sq_mod(theta - h)) / (2.0 * h);
    double closed = -4.0 * std::sin(2.0 * theta) *
                    (f.a() - f.a() * f.b() - 4.0 * f.b() * std::cos(2.0 * theta));
    return {fd, closed};
}

Polynomial square_transform(const Polynomial& f) {
    if (!f.is_odd()) throw NotOddError("square_transform: input must be odd");
    Polynomial sq = f * f;
    if (sq.is_zero()) return Polynomial();
    // f odd means f^2 has even-index coefficients only; halving indices
    // yields g with g(z^2) = f(z)^2.
    const auto& c = sq.coefficients();
    std::vector<Complex> g((c.size() + 1) / 2, Complex(0.0));
    for (std::size_t k = 0; k < c.size(); k += 2) g[k / 2] = c[k];
    return Polynomial(std::move(g));
}

ProfileDomain::ProfileDomain(std::vector<double> thetas_in, std::vector<double> radii_in)
    : thetas(std::move(thetas_in)), radii(std::move(radii_in)) {
    if (thetas.size() != radii.size() || thetas.size() < 2)
        throw InvalidProfileError("ProfileDomain: need matching grids with >= 2 samples");
    // Accept a coarsely rounded pi/2 endpoint (e.g. "1.5708" from a file);
    // radius_at clamps queries to the quarter turn anyway.
    if (thetas.front() < 0.0 || thetas.back() > kPi / 2.0 + 1e-4)
        throw InvalidProfileError("ProfileDomain: grid must lie in [0, pi/2]");
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        if (!(radii[i] > 0.0)) throw InvalidProfileError("ProfileDomain: radii must be positive");
        if (i > 0) {
            if (!(thetas[i] > thetas[i - 1]))
                throw InvalidProfileError("ProfileDomain: angles must increase");
            if (radii[i] > radii[i - 1] + 1e-15)
                throw InvalidProfileError("ProfileDomain: radii must be non-increasing");
        }
    }
}

double ProfileDomain::radius_at(double theta) const {
    theta = std::clamp(theta, thetas.front(), thetas.back());
    auto it = std::upper_bound(thetas.begin(), thetas.end(), theta);
    if (it == thetas.begin()) return radii.front();
    if (it == thetas.end()) return radii.back();
    std::size_t hi = static_cast<std::size_t>(it - thetas.begin());
    std::size_t lo = hi - 1;
    double u = (theta - thetas[lo]) / (thetas[hi] - thetas[lo]);
    return radii[lo] + u * (radii[hi] - radii[lo]);
}

CurveSamples bicirc_from_profile(const ProfileDomain& profile, int m) {
    if (m < 8 || m % 4 != 0)
        throw InvalidParameterError("bicirc_from_profile: m must be a multiple of 4, >= 8");

    const int quarter = m / 4;
    const double step = 2.0 * kPi / m;

    // First-quadrant points; the other quadrants are exact mirrors of
    // these, so the two reflection symmetries hold structurally.
    std::vector<Complex> first(static_cast<std::size_t>(quarter) + 1);
    for (int j = 0; j <= quarter; ++j) {
        double t = step * j;
        double r = profile.radius_at(t);
        first[static_cast<std::size_t>(j)] = r * Complex(std::cos(t), std::sin(t));
    }

    std::vector<double> params(static_cast<std::size_t>(m));
    std::vector<Complex> points(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) params[static_cast<std::size_t>(k)] = step * k;
    for (int j = 0; j <= quarter; ++j) {
        Complex p = first[static_cast<std::size_t>(j)];
        points[static_cast<std::size_t>(j)] = p;
        if (j > 0) points[static_cast<std::size_t>(m / 2 - j)] = -std::conj(p);
        if (j < quarter) points[static_cast<std::size_t>(m / 2 + j)] = -p;
        if (j > 0) points[static_cast<std::size_t>(m - j)] = std::conj(p);
    }

    auto eval = [profile](double t) {
        // Fold the angle into [0, pi/2] and mirror the point back out.
        double tw = std::fmod(t, 2.0 * kPi);
        if (tw < 0.0) tw += 2.0 * kPi;
        double folded = tw;
        if (folded > kPi) folded = 2.0 * kPi - folded;
        if (folded > kPi / 2.0) folded = kPi - folded;
        double r = profile.radius_at(folded);
        return r * Complex(std::cos(tw), std::sin(tw));
    };
    return CurveSamples(std::move(params), std::move(points), eval, 2.0 * kPi);
}

}  // namespace nrlab
