#include "idxt/bilateral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "idxt/errors.hpp"
#include "idxt/gamma.hpp"
#include "idxt/quadrature.hpp"

namespace idxt {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// arg mapped to [0, 2pi)
double arg_2pi(const cplx& z) {
    double phi = std::arg(z);
    if (phi < 0.0) phi += 2.0 * pi;
    return phi;
}

void validate(const BilateralParams& p) {
    const std::size_t n = p.upper.size();
    if (n != p.lower.size() || (n != 2 && n != 3))
        throw RangeError("bilateral series requires equal upper/lower lists of length 2 or 3");
    if (std::abs(std::abs(p.z) - 1.0) > 1e-12)
        throw RangeError("bilateral series argument must satisfy |z| = 1");
}

// log of the smooth Gamma-ratio continuation of the tail terms.
using LogRatio = std::function<cplx(const cplx&)>;

// Abel-Plana evaluation of sum_{m >= n0} e^{i phi m} G(m) for G = exp(logg)
// analytic and ~ m^kappa in the half plane Re x >= n0:
//   sum = f(n0)/2 + int_{n0}^inf f dx + i int_0^inf [f(n0+it) - f(n0-it)]
//                                            / (e^{2 pi t} - 1) dt,
// with the x-integral taken along the upward vertical contour when z^x
// oscillates (phi != 0) so that the integrand decays like e^{-phi t}.
cplx abel_plana_tail(const LogRatio& logg, double n0, double phi, double kappa,
                     double quad_tol, double& err_accum, long& evals) {
    const auto G = [&logg](const cplx& x) { return std::exp(logg(x)); };
    const cplx g_n0 = G(cplx(n0, 0.0));
    const cplx rot = std::polar(1.0, phi * n0); // e^{i phi n0}

    const cplx half = 0.5 * rot * g_n0;

    QuadResult main;
    if (phi == 0.0) {
        // x = n0 e^u turns the algebraic tail into an exponential one
        const double rate = std::max(-kappa - 1.0, 0.02);
        const double u_max = 40.0 / rate;
        main = gk15_best_effort(
            [&](double u) {
                const double x = n0 * std::exp(u);
                return G(cplx(x, 0.0)) * x;
            },
            0.0, u_max, quad_tol, 80000);
    } else {
        const double t_max = 40.0 / phi;
        main = gk15_best_effort(
            [&](double t) {
                return std::exp(-phi * t) * G(cplx(n0, t));
            },
            0.0, t_max, quad_tol, 80000);
        main.value *= cplx(0.0, 1.0) * rot;
    }

    const double rate2 = (phi == 0.0) ? 2.0 * pi : 2.0 * pi - phi;
    const double t2_max = 40.0 / std::max(rate2, 0.02);
    QuadResult corr = gk15_best_effort(
        [&](double t) {
            const double k = 1.0 / (1.0 - std::exp(-2.0 * pi * t));
            const cplx up = std::exp(-(phi + 2.0 * pi) * t) * G(cplx(n0, t));
            const cplx dn = std::exp((phi - 2.0 * pi) * t) * G(cplx(n0, -t));
            return (up - dn) * k;
        },
        0.0, t2_max, quad_tol, 80000);
    corr.value *= cplx(0.0, 1.0) * rot;

    evals += main.evals + corr.evals + 1;
    err_accum += main.abs_error + corr.abs_error +
                 4.0 * kEps * (std::abs(main.value) + std::abs(half) +
                               std::abs(corr.value));
    return main.value + half + corr.value;
}

} // namespace

double BilateralParams::kappa() const {
    double s = 0.0;
    for (const cplx& a : upper) s += a.real();
    for (const cplx& b : lower) s -= b.real();
    return s;
}

cplx bilateral_term(const BilateralParams& params, long n) {
    const cplx q = (params.upper.size() % 2 == 1) ? -params.z : params.z;
    if (std::labs(n) <= 140) {
        cplx term = std::pow(q, cplx(double(n), 0.0));
        for (const cplx& a : params.upper) term *= reciprocal_gamma(1.0 - a - double(n));
        for (const cplx& b : params.lower) term *= reciprocal_gamma(b + double(n));
        return term;
    }
    // large |n|: individual Gamma factors over/underflow, combine in log space
    for (const cplx& a : params.upper)
        if (is_nonpositive_integer(1.0 - a - double(n))) return cplx(0.0, 0.0);
    for (const cplx& b : params.lower)
        if (is_nonpositive_integer(b + double(n))) return cplx(0.0, 0.0);
    cplx s = cplx(double(n), 0.0) * std::log(q);
    for (const cplx& a : params.upper) s -= log_gamma(1.0 - a - double(n));
    for (const cplx& b : params.lower) s -= log_gamma(b + double(n));
    return std::exp(s);
}

SeriesValue bilateral_h_star(const BilateralParams& params) {
    validate(params);
    const double kappa = params.kappa();
    if (kappa >= 0.0)
        throw DivergenceError("bilateral series diverges: convergence exponent >= 0");
    const bool at_one = std::abs(params.z - cplx(1.0, 0.0)) < 1e-12;
    if (at_one && kappa >= -1.0)
        throw DivergenceError("bilateral series diverges at z = 1 for exponent >= -1");

    double max_param = 0.0;
    for (const cplx& a : params.upper) max_param = std::max(max_param, std::abs(a));
    for (const cplx& b : params.lower) max_param = std::max(max_param, std::abs(b));
    const long n0 = 36 + (long)std::ceil(max_param);

    SeriesValue out;
    cplx core(0.0, 0.0);
    double coremag = 0.0;
    for (long n = -n0 + 1; n <= n0 - 1; ++n) {
        const cplx t = bilateral_term(params, n);
        core += t;
        coremag += std::abs(t);
    }
    out.terms_used = 2 * n0 - 1;

    const double phi = at_one ? 0.0 : arg_2pi(params.z);
    const double phi_minus = (phi == 0.0) ? 0.0 : 2.0 * pi - phi;
    const double quad_tol = 1e-16 * (coremag + 1.0e-280);
    double err = 4.0 * kEps * coremag;

    // tail n >= n0: reflecting 1/Gamma(1-a-n) = (-1)^n sin(pi(1-a)) Gamma(a+n)/pi
    // leaves the smooth ratio prod Gamma(a_i+x)/prod Gamma(b_i+x) times z^x.
    cplx a_plus(1.0, 0.0);
    for (const cplx& a : params.upper) a_plus *= sin_pi(1.0 - a) / pi;
    if (a_plus != cplx(0.0, 0.0)) {
        const auto logg = [&params](const cplx& x) {
            cplx s(0.0, 0.0);
            for (std::size_t i = 0; i < params.upper.size(); ++i)
                s += log_gamma_diff(params.upper[i], params.lower[i], x);
            return s;
        };
        double tail_err = 0.0;
        const cplx tail = abel_plana_tail(logg, double(n0), phi, kappa, quad_tol / std::abs(a_plus),
                                          tail_err, out.terms_used);
        core += a_plus * tail;
        err += std::abs(a_plus) * tail_err;
    }

    // tail n <= -n0 via m = -n: 1/Gamma(b-m) = (-1)^m sin(pi b) Gamma(1-b+m)/pi
    cplx a_minus(1.0, 0.0);
    for (const cplx& b : params.lower) a_minus *= sin_pi(b) / pi;
    if (a_minus != cplx(0.0, 0.0)) {
        const auto logg = [&params](const cplx& x) {
            cplx s(0.0, 0.0);
            for (const cplx& b : params.lower) s += log_gamma(1.0 - b + x);
            for (const cplx& a : params.upper) s -= log_gamma(1.0 - a + x);
            return s;
        };
        double tail_err = 0.0;
        const cplx tail = abel_plana_tail(logg, double(n0), phi_minus, kappa,
                                          quad_tol / std::abs(a_minus), tail_err,
                                          out.terms_used);
        core += a_minus * tail;
        err += std::abs(a_minus) * tail_err;
    }

    out.value = core;
    out.abs_error_estimate = err;
    out.status = (at_one || kappa < -1.0) ? SeriesStatus::converged
                                          : SeriesStatus::regularized;
    return out;
}

SeriesValue bilateral_h_star_cesaro(const BilateralParams& params, long n_max) {
    validate(params);
    const double kappa = params.kappa();
    if (kappa >= 0.0)
        throw DivergenceError("bilateral series diverges: convergence exponent >= 0");
    const bool at_one = std::abs(params.z - cplx(1.0, 0.0)) < 1e-12;
    if (at_one && kappa >= -1.0)
        throw DivergenceError("bilateral series diverges at z = 1 for exponent >= -1");
    cplx partial = bilateral_term(params, 0);
    cplx acc = partial;
    cplx avg = partial;
    double lo = std::abs(partial), hi = lo;
    for (long k = 1; k <= n_max; ++k) {
        partial += bilateral_term(params, k) + bilateral_term(params, -k);
        acc += partial;
        avg = acc / double(k + 1);
        if (k > n_max - 10) {
            lo = std::min(lo, std::abs(avg));
            hi = std::max(hi, std::abs(avg));
        }
    }
    SeriesValue out;
    out.value = avg;
    out.terms_used = 2 * n_max + 1;
    out.abs_error_estimate = (hi - lo) + 1e-15 * std::abs(avg);
    out.status = SeriesStatus::regularized;
    return out;
}

cplx dougall_closed_form(const cplx& a1, const cplx& a2, const cplx& b1,
                         const cplx& b2) {
    const cplx s = b1 + b2 - a1 - a2;
    if (s.real() <= 1.0)
        throw DivergenceError("Dougall sum requires Re(b1+b2-a1-a2) > 1");
    if (is_nonpositive_integer(s - 1.0))
        throw PoleError("Dougall numerator Gamma(b1+b2-a1-a2-1) at a pole");
    return gamma_ratio({s - 1.0}, {b1 - a1, b1 - a2, b2 - a1, b2 - a2});
}

SeriesValue shifted_solution_jt(const cplx& a1, const cplx& a2, const cplx& b1,
                                const cplx& b2, const cplx& t, const cplx& z) {
    if (std::abs(z - cplx(1.0, 0.0)) < 1e-12)
        throw BranchError("(-z)^t branch undefined at z = 1");
    const double phi = arg_2pi(z);
    const cplx prefactor = std::exp(t * cplx(0.0, 1.0) * (phi - pi));
    BilateralParams shifted;
    shifted.upper = {a1 + t, a2 + t};
    shifted.lower = {b1 + t, b2 + t};
    shifted.z = z;
    SeriesValue h = bilateral_h_star(shifted);
    h.value *= prefactor;
    h.abs_error_estimate *= std::abs(prefactor);
    return h;
}

} // namespace idxt
