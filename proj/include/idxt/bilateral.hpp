#pragma once

#include <vector>

#include "idxt/series.hpp"
#include "idxt/types.hpp"

namespace idxt {

// Two-sided series sum_{n=-inf}^{inf} ((-1)^p z)^n /
//   Gamma[1-a_1-n, ..., 1-a_p-n, b_1+n, ..., b_p+n]
// on the unit circle.  Every summand is finite (reciprocal Gamma), p is 2
// or 3.  The convergence exponent kappa = Re(sum a - sum b) classifies the
// regime: absolute for kappa < -1, conditional for -1 <= kappa < 0 and
// z != 1, divergent otherwise.
struct BilateralParams {
    std::vector<cplx> upper;
    std::vector<cplx> lower;
    cplx z{1.0, 0.0};

    double kappa() const;
};

// Single summand at index n (exact reciprocal-Gamma product).
cplx bilateral_term(const BilateralParams& params, long n);

// Regularized bilateral sum.  Core indices are summed directly; the two
// tails are summed by the Abel-Plana formula, with the x-integral rotated
// onto a vertical contour where z^x decays.  Status is `converged` in the
// absolute regime and `regularized` in the conditional one.
// Throws DivergenceError for kappa >= 0, or kappa >= -1 at z = 1;
// RangeError if |z| is off the unit circle by more than 1e-12.
SeriesValue bilateral_h_star(const BilateralParams& params);

// Plain symmetric partial sums with (C,1) Cesaro averaging.  Slow reference
// path retained as an independent cross-check of bilateral_h_star.
SeriesValue bilateral_h_star_cesaro(const BilateralParams& params, long n_max);

// Dougall's summation of the bilateral 2H2 at z = 1:
//   Gamma[b1+b2-a1-a2-1] / Gamma[b1-a1, b1-a2, b2-a1, b2-a2].
// Requires Re(b1+b2-a1-a2) > 1.
cplx dougall_closed_form(const cplx& a1, const cplx& a2, const cplx& b1,
                         const cplx& b2);

// J_t(z) = (-z)^t 2H2*[a+t; b+t; z] with the branch (-z)^t = exp(i t (phi-pi))
// for z = exp(i phi), phi in (0, 2pi); equals 1 at z = -1.  Any three shifts
// J_{t1}, J_{t2}, J_{t3} satisfy
//   sin pi(t2-t3) J_{t1} + sin pi(t3-t1) J_{t2} + sin pi(t1-t2) J_{t3} = 0.
SeriesValue shifted_solution_jt(const cplx& a1, const cplx& a2, const cplx& b1,
                                const cplx& b2, const cplx& t, const cplx& z);

} // namespace idxt
