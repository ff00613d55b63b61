#ifndef NRLAB_CHEBYSHEV_HPP
#define NRLAB_CHEBYSHEV_HPP

#include <stdexcept>

#include "nrlab/complex.hpp"
#include "nrlab/errors.hpp"

namespace nrlab {

// Chebyshev polynomial of the first kind, T_n(z), by the three-term
// recurrence T_{k+1} = 2z T_k - T_{k-1}. The recurrence (rather than
// cos(n*acos)) stays valid for complex arguments off [-1,1].
inline Complex chebyshev_t(int n, Complex z) {
    if (n < 0) throw InvalidParameterError("chebyshev_t: negative order");
    if (n == 0) return Complex(1.0, 0.0);
    Complex prev(1.0, 0.0);
    Complex cur = z;
    for (int k = 1; k < n; ++k) {
        Complex next = 2.0 * z * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// Chebyshev polynomial of the second kind, U_n(z); used for T_n' = n U_{n-1}.
inline Complex chebyshev_u(int n, Complex z) {
    if (n < 0) throw InvalidParameterError("chebyshev_u: negative order");
    Complex prev(1.0, 0.0);
    if (n == 0) return prev;
    Complex cur = 2.0 * z;
    for (int k = 1; k < n; ++k) {
        Complex next = 2.0 * z * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace nrlab

#endif  // NRLAB_CHEBYSHEV_HPP
