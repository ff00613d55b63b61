#include "nrlab/numerical_range.hpp"

#include <cmath>
#include <utility>

#include "nrlab/errors.hpp"

namespace nrlab {

namespace {

// Support point of W(A) in direction theta: <Ax, x> for the top
// eigenvector x of the Hermitian part of e^{-i theta} A.
Complex support_point_2x2(const Matrix2& a, double theta) {
    Complex rot = std::polar(1.0, -theta);
    Matrix2 ra = rot * a;
    Matrix2 h = 0.5 * (ra + ra.adjoint());
    HermitianEig2 top = hermitian_top_eigenpair(h);
    // <A x, x> = conj(x)^T (A x)
    Complex ax1 = a(0, 0) * top.x1 + a(0, 1) * top.x2;
    Complex ax2 = a(1, 0) * top.x1 + a(1, 1) * top.x2;
    return std::conj(top.x1) * ax1 + std::conj(top.x2) * ax2;
}

Complex support_point_n(const SquareMatrix& a, double theta) {
    Complex rot = std::polar(1.0, -theta);
    SquareMatrix ra = rot * a;
    SquareMatrix h = Complex(0.5) * (ra + ra.adjoint());
    HermitianEigen eig = hermitian_eigensystem(h);
    const int n = a.dim();
    const int top = n - 1;  // values ascend
    Complex result(0.0);
    for (int i = 0; i < n; ++i) {
        Complex axi(0.0);
        for (int j = 0; j < n; ++j) axi += a(i, j) * eig.vectors(j, top);
        result += std::conj(eig.vectors(i, top)) * axi;
    }
    return result;
}

template <typename Eval>
CurveSamples build_boundary(int m, const Eval& eval) {
    if (m < 8) throw InvalidParameterError("nr_boundary: need m >= 8");
    std::vector<double> params(static_cast<std::size_t>(m));
    std::vector<Complex> points(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        params[static_cast<std::size_t>(k)] = 2.0 * kPi * k / m;
        points[static_cast<std::size_t>(k)] = eval(params[static_cast<std::size_t>(k)]);
    }
    return CurveSamples(std::move(params), std::move(points), eval, 2.0 * kPi);
}

}  // namespace

CurveSamples nr_boundary(const Matrix2& a, int m) {
    return build_boundary(m, [a](double t) { return support_point_2x2(a, t); });
}

CurveSamples nr_boundary(const SquareMatrix& a, int m) {
    if (a.dim() == 2) {
        Matrix2 a2(a(0, 0), a(0, 1), a(1, 0), a(1, 1));
        return nr_boundary(a2, m);
    }
    return build_boundary(m, [a](double t) { return support_point_n(a, t); });
}

EllipseParams ellipse_params_2x2(const Matrix2& a) {
    auto [l1, l2] = eigenvalues_2x2(a);
    double frob_sq = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) frob_sq += std::norm(a(i, j));
    // tr(A*A) - |l1|^2 - |l2|^2 is the squared Schur off-diagonal; it can
    // round slightly negative for normal matrices.
    double excess = std::max(frob_sq - std::norm(l1) - std::norm(l2), 0.0);
    double semi_minor = 0.5 * std::sqrt(excess);
    double focal_half = 0.5 * std::abs(l1 - l2);
    double semi_major = std::sqrt(semi_minor * semi_minor + focal_half * focal_half);
    return {0.5 * (l1 + l2), l1, l2, semi_major, semi_minor};
}

}  // namespace nrlab
