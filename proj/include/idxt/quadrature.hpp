#pragma once

#include <array>
#include <functional>

#include "idxt/types.hpp"

namespace idxt {

struct QuadResult {
    cplx value{0.0, 0.0};
    double abs_error = 0.0;
    long evals = 0;
};

using Integrand = std::function<cplx(double)>;

// Adaptive 15-point Gauss-Kronrod on [a,b] to absolute tolerance.
// Throws QuadratureFailure once max_evals is exhausted above tolerance.
QuadResult gk15_adaptive(const Integrand& f, double a, double b,
                         double abs_tol, long max_evals = 1000000);

// Same scheme, but returns the best value reached instead of throwing;
// abs_error reports what was actually achieved.
QuadResult gk15_best_effort(const Integrand& f, double a, double b,
                            double abs_tol, long max_evals = 200000);

// Fixed-order Gauss-Legendre panels of at most panel_width; deterministic
// left-to-right summation order.
cplx panel_integrate(const Integrand& f, double a, double b, double panel_width);

// Whole-line integral via x = sinh(u)/2, truncated at |u| <= u_max.
QuadResult integrate_sinh_line(const Integrand& f, double u_max, double abs_tol,
                               long max_evals = 2000000);

// 15-point Gauss-Legendre nodes/weights on [-1,1].
const std::array<double, 15>& gl15_nodes();
const std::array<double, 15>& gl15_weights();

} // namespace idxt
