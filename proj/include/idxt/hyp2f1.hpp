#pragma once

#include "idxt/series.hpp"
#include "idxt/types.hpp"

namespace idxt {

// Gauss hypergeometric function 2F1(a,b;c;z).
//
// Evaluation region map: direct series for small |z|, the z -> 1-z
// connection formula (Erdelyi, Higher Transcendental Functions I, 2.10.1)
// near z = 1, the Pfaff z -> z/(z-1) transform otherwise, and Taylor
// continuation along a path from the convergent disk for the remaining
// band of the unit circle around exp(+-i pi/3).
//
// Throws ParameterPole (c at a nonpositive integer before the series
// terminates), LogarithmicCase (integer c-a-b where the connection formula
// is required) and RangeError (argument outside the validated region).
SeriesValue gauss_2f1(const cplx& a, const cplx& b, const cplx& c, const cplx& z);

// d/dz 2F1(a,b;c;z) = (ab/c) 2F1(a+1,b+1;c+1;z).
SeriesValue gauss_2f1_derivative(const cplx& a, const cplx& b, const cplx& c,
                                 const cplx& z);

// Absolute residual of the three-term contiguous relation in (p,q) shifts:
//   -y F[p,q;r;y] = c_minus F[p-1,q+1;r;y] - (c_minus + c_plus) F[p,q;r;y]
//                 + c_plus F[p+1,q-1;r;y]
// with c_minus = q(r-p)/((q-p)(1+q-p)), c_plus = p(r-q)/((p-q)(1+p-q)).
// Throws DegenerateError when p-q is 0 or +-1.
double contiguous_step_2f1(const cplx& p, const cplx& q, const cplx& r,
                           const cplx& y);

} // namespace idxt
