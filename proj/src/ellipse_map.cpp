#include "nrlab/ellipse_map.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nrlab/errors.hpp"

namespace nrlab {

namespace {

constexpr int kMaxTerms = 100000;
constexpr int kMinTerms = 8;

int truncation_order(double rho, double eps) {
    // Tail terms behave like rho^{-2n} uniformly on the closed ellipse
    // (|T_{2n}| <= cosh(2n asinh b) < rho^{2n} there, against the
    // 1/rho^{4n} weight decay), so solve rho^{-2N} = eps/2.
    double n = std::log(2.0 / eps) / (2.0 * std::log(rho));
    if (!(n < static_cast<double>(kMaxTerms)))
        throw NoConvergenceError("EllipseMap: series needs more than 1e5 terms (b too small)");
    return std::max(kMinTerms, static_cast<int>(std::ceil(n)));
}

}  // namespace

EllipseMap::EllipseMap(double b, double eps) : b_(b), eps_(eps) {
    if (!(b > 0.0) || !std::isfinite(b))
        throw InvalidParameterError("EllipseMap: semi-minor axis must be positive");
    if (!(eps > 0.0) || eps > 1e-6)
        throw InvalidParameterError("EllipseMap: eps must lie in (0, 1e-6]");
    a_ = std::sqrt(b * b + 1.0);
    rho_ = a_ + b_;
    n_terms_ = truncation_order(rho_, eps_);

    weights_.resize(static_cast<std::size_t>(n_terms_));
    sum_alternating_ = 0.0;
    sum_absolute_ = 0.0;
    const double log_rho = std::log(rho_);
    for (int n = 1; n <= n_terms_; ++n) {
        // 1/(1+rho^{4n}) written as q/(1+q) with q = rho^{-4n} to avoid
        // overflow for large rho or n.
        double q = std::exp(-4.0 * n * log_rho);
        double magnitude = 2.0 * q / (n * (1.0 + q));
        double w = (n % 2 == 0) ? magnitude : -magnitude;
        weights_[static_cast<std::size_t>(n - 1)] = w;
        sum_alternating_ += w;
        sum_absolute_ += magnitude;
    }
}

EllipseConstants EllipseMap::constants() const {
    return {rho_, (2.0 / rho_) * std::exp(sum_alternating_),
            (2.0 / rho_) * std::exp(sum_absolute_)};
}

bool EllipseMap::contains(Complex z, double slack) const {
    double x = z.real() / a_;
    double y = z.imag() / b_;
    return x * x + y * y <= 1.0 + slack;
}

Complex EllipseMap::eval(Complex z) const {
    if (!contains(z)) throw OutOfDomainError("EllipseMap::eval: point outside the ellipse");
    // S(z) = sum w_n T_{2n}(z), accumulating the Chebyshev recurrence once.
    Complex s(0.0);
    Complex t_prev(1.0);  // T_0
    Complex t_cur = z;    // T_1
    for (int k = 2, n = 0; n < n_terms_; ++k) {
        Complex t_next = 2.0 * z * t_cur - t_prev;
        t_prev = t_cur;
        t_cur = t_next;
        if (k % 2 == 0) s += weights_[static_cast<std::size_t>(n++)] * t_cur;
    }
    return (2.0 * z / rho_) * std::exp(s);
}

Complex EllipseMap::derivative(Complex z) const {
    if (!contains(z)) throw OutOfDomainError("EllipseMap::derivative: point outside the ellipse");
    // phi = (2z/rho) e^{S}, so phi' = (2/rho) e^{S} (1 + z S') with
    // S'(z) = sum w_n (2n) U_{2n-1}(z). T_k and U_k advance in lockstep;
    // after the updates of step k, u_prev holds U_{k-1}.
    Complex s(0.0);
    Complex sp(0.0);
    Complex t_prev(1.0);
    Complex t_cur = z;
    Complex u_prev(1.0);
    Complex u_cur = 2.0 * z;
    for (int k = 2, n = 1; n <= n_terms_; ++k) {
        Complex t_next = 2.0 * z * t_cur - t_prev;
        t_prev = t_cur;
        t_cur = t_next;
        Complex u_next = 2.0 * z * u_cur - u_prev;
        u_prev = u_cur;
        u_cur = u_next;
        if (k % 2 == 0) {
            double w = weights_[static_cast<std::size_t>(n - 1)];
            s += w * t_cur;                // T_{2n}
            sp += w * (2.0 * n) * u_prev;  // U_{2n-1}
            ++n;
        }
    }
    Complex es = std::exp(s);
    return (2.0 / rho_) * es * (1.0 + z * sp);
}

Complex EllipseMap::inverse(Complex w, double tol) const {
    if (std::abs(w) >= 1.0)
        throw InvalidParameterError("EllipseMap::inverse: |w| must be < 1");
    if (w == Complex(0.0)) return Complex(0.0);

    // Initial guess w*a, pulled radially into the ellipse when it lands
    // outside (the guess overshoots along the minor axis when b is small).
    Complex z = w * a_;
    auto ellipse_norm = [this](Complex p) {
        double x = p.real() / a_;
        double y = p.imag() / b_;
        return std::sqrt(x * x + y * y);
    };
    double e = ellipse_norm(z);
    if (e > 0.995) z *= 0.995 / e;
    Complex fz = eval(z);
    double residual = std::abs(fz - w);

    // |phi(z) - w| has no interior local minima besides the solution, so a
    // monotone damped Newton descent cannot get trapped; backtracking also
    // keeps every trial point inside the domain.
    bool bisected = false;
    for (int it = 0; it < 100; ++it) {
        if (residual <= tol) return z;
        Complex step = (fz - w) / derivative(z);
        bool moved = false;
        for (int k = 0; k < 45 && !moved; ++k) {
            Complex z_try = z - step;
            if (contains(z_try)) {
                Complex f_try = eval(z_try);
                double r_try = std::abs(f_try - w);
                if (r_try < residual) {
                    z = z_try;
                    fz = f_try;
                    residual = r_try;
                    moved = true;
                }
            }
            step *= 0.5;
        }
        if (!moved) {
            if (bisected) break;
            bisected = true;
            // One rescue: match |phi| = |w| along the ray arg(w) and
            // restart the descent from there.
            Complex dir = w / std::abs(w);
            double lo = 0.0, hi = 0.9999 / ellipse_norm(dir);
            for (int k = 0; k < 80; ++k) {
                double mid = 0.5 * (lo + hi);
                (std::abs(eval(mid * dir)) < std::abs(w) ? lo : hi) = mid;
            }
            z = 0.5 * (lo + hi) * dir;
            fz = eval(z);
            residual = std::abs(fz - w);
        }
    }
    if (residual <= tol) return z;
    throw NoConvergenceError("EllipseMap::inverse: Newton did not reach tolerance", residual);
}

EllipseConstants ellipse_constants(double b, double eps) {
    EllipseMap map(b, eps);
    EllipseConstants c = map.constants();
    const double two_over_rho = 2.0 / c.rho;
    if (!(c.phi_at_1 > 0.0) || c.phi_at_1 > two_over_rho + 1e-12 ||
        two_over_rho >= c.phi_prime_at_0 + 1e-12)
        throw InternalConsistencyError(
            "ellipse_constants: chain 0 < phi(1) <= 2/rho < phi'(0) violated (truncation bug)");
    return c;
}

}  // namespace nrlab
