#pragma once

#include <vector>

#include "idxt/types.hpp"

namespace idxt {

// sin(pi z), cos(pi z) with argument reduction so that values at (half-)
// integer real parts stay exact; needed around Gamma poles and in the
// trigonometric spectral factors.
cplx sin_pi(const cplx& z);
cplx cos_pi(const cplx& z);

// log Gamma, some branch with exp(log_gamma(z)) == Gamma(z).  Valid for
// |z| <= 200 away from the poles.
cplx log_gamma(const cplx& z);

// log Gamma(a+x) - log Gamma(b+x), stable for arbitrarily large |x| with
// Re(a+x), Re(b+x) > 0 (Stirling difference; the naive subtraction loses
// all precision once |x log x| outgrows 1/eps).
cplx log_gamma_diff(const cplx& a, const cplx& b, const cplx& x);

// Gamma(z).  Throws PoleError at 0, -1, -2, ... and RangeError for |z| > 200.
cplx complex_gamma(const cplx& z);

// 1/Gamma(z), entire; exactly zero at the nonpositive integers.
cplx reciprocal_gamma(const cplx& z);

// Product Gamma(num_1)...Gamma(num_n) / (Gamma(den_1)...Gamma(den_m)).
// A denominator pole contributes a factor 0; a numerator pole throws
// PoleError.  Large arguments are combined in log space.
struct GammaRatioSpec {
    std::vector<cplx> numerators;
    std::vector<cplx> denominators;
};
cplx gamma_ratio(const GammaRatioSpec& spec);
cplx gamma_ratio(std::initializer_list<cplx> numerators,
                 std::initializer_list<cplx> denominators);

// Pochhammer symbol (a)_n = Gamma(a+n)/Gamma(a) for signed n, using the
// product form 1/((a-1)...(a+n)) when n < 0.
cplx pochhammer(const cplx& a, long n);

enum class HalfSign { plus, minus };

// (1/2 + sign*ix)^tau with the branch continuous on the real line and equal
// to exp(tau log(1/2)) at x = 0 (the principal branch, Re(1/2+-ix) > 0).
cplx half_power(double x, const cplx& tau, HalfSign sign);

} // namespace idxt
