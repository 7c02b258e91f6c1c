#include "idxt/hyp2f1.hpp"

#include <algorithm>
#include <limits>

#include "idxt/errors.hpp"
#include "idxt/gamma.hpp"

namespace idxt {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr long kMaxTerms = 20000;

bool is_terminating(const cplx& a) {
    return is_nonpositive_integer(a) && a.real() > -1.0e6;
}

// Plain power series at z.  Handles terminating cases exactly; throws
// ParameterPole if c hits a nonpositive integer before termination.
SeriesValue direct_series(const cplx& a, const cplx& b, const cplx& c,
                          const cplx& z) {
    SeriesValue out;
    cplx term(1.0, 0.0);
    cplx sum = term;
    double magsum = 1.0;
    int small_count = 0;
    for (long n = 0; n < kMaxTerms; ++n) {
        const cplx an = a + double(n);
        const cplx bn = b + double(n);
        if (an == cplx(0.0, 0.0) || bn == cplx(0.0, 0.0)) {
            out.value = sum;
            out.terms_used = n + 1;
            out.abs_error_estimate = 4.0 * kEps * magsum;
            out.status = SeriesStatus::converged;
            return out;
        }
        const cplx cn = c + double(n);
        if (cn == cplx(0.0, 0.0))
            throw ParameterPole("2F1 lower parameter pole: c = nonpositive integer");
        term *= an * bn / (cn * double(n + 1)) * z;
        sum += term;
        magsum += std::abs(term);
        if (std::abs(term) < 1e-15 * (std::abs(sum) + 1e-300)) {
            if (++small_count >= 3) {
                out.value = sum;
                out.terms_used = n + 2;
                out.abs_error_estimate = std::abs(term) + 4.0 * kEps * magsum;
                out.status = SeriesStatus::converged;
                return out;
            }
        } else {
            small_count = 0;
        }
    }
    out.value = sum;
    out.terms_used = kMaxTerms;
    out.abs_error_estimate =
        std::abs(term) * double(kMaxTerms) + 4.0 * kEps * magsum;
    out.status = SeriesStatus::truncated;
    return out;
}

// z -> 1-z connection (HTF I, 2.10.1); needs c-a-b nonintegral.
SeriesValue connection_1mz(const cplx& a, const cplx& b, const cplx& c,
                           const cplx& z) {
    const cplx cab = c - a - b;
    if (integer_distance(cab) < 1e-9)
        throw LogarithmicCase("integer c-a-b: 1-z connection formula degenerates");
    const cplx u = 1.0 - z;
    const cplx coef1 = gamma_ratio({c, cab}, {c - a, c - b});
    const cplx coef2 = gamma_ratio({c, -cab}, {a, b});
    const SeriesValue f1 = direct_series(a, b, a + b - c + 1.0, u);
    const SeriesValue f2 = direct_series(c - a, c - b, cab + 1.0, u);
    const cplx pw = std::exp(cab * std::log(u));
    const cplx t1 = coef1 * f1.value;
    const cplx t2 = coef2 * pw * f2.value;
    SeriesValue out;
    out.value = t1 + t2;
    out.terms_used = f1.terms_used + f2.terms_used;
    out.abs_error_estimate = std::abs(coef1) * f1.abs_error_estimate +
                             std::abs(coef2 * pw) * f2.abs_error_estimate +
                             4.0 * kEps * (std::abs(t1) + std::abs(t2));
    out.status = (f1.status == SeriesStatus::converged &&
                  f2.status == SeriesStatus::converged)
                     ? SeriesStatus::converged
                     : SeriesStatus::truncated;
    return out;
}

SeriesValue pfaff(const cplx& a, const cplx& b, const cplx& c, const cplx& z) {
    const cplx w = z / (z - 1.0);
    const cplx pw = std::exp(-a * std::log(1.0 - z));
    SeriesValue f = direct_series(a, c - b, c, w);
    f.value *= pw;
    f.abs_error_estimate *= std::abs(pw);
    return f;
}

// One Taylor re-expansion step of the hypergeometric ODE
//   z(1-z) F'' + (c - (a+b+1) z) F' - a b F = 0
// from an ordinary point z0 (values f0, f0p) to z0 + u.
void taylor_step(const cplx& a, const cplx& b, const cplx& c, const cplx& z0,
                 const cplx& u, cplx& f0, cplx& f0p, double& err_accum) {
    const cplx P0 = z0 - z0 * z0;
    const cplx P1 = 1.0 - 2.0 * z0;
    const cplx Q0 = c - (a + b + 1.0) * z0;
    const cplx Q1 = -(a + b + 1.0);
    const cplx ab = a * b;

    cplx fk = f0, fk1 = f0p;       // Taylor coefficients f_k, f_{k+1}
    cplx F = fk + fk1 * u;         // running values of F and F'
    cplx Fp = fk1;
    cplx upow = u;                 // u^{k+1}
    double magsum = std::abs(F);
    for (int k = 0; k + 2 < 200; ++k) {
        const cplx fk2 = -((P1 * double(k) + Q0) * double(k + 1) * fk1 +
                           (-double(k) * double(k - 1) + Q1 * double(k) - ab) * fk) /
                         (P0 * double(k + 2) * double(k + 1));
        Fp += double(k + 2) * fk2 * upow;
        upow *= u;
        const cplx dF = fk2 * upow;
        F += dF;
        magsum += std::abs(dF);
        fk = fk1;
        fk1 = fk2;
        if (std::abs(dF) < 1e-17 * (std::abs(F) + 1e-300) && k > 4) break;
    }
    err_accum += 8.0 * kEps * magsum;
    f0 = F;
    f0p = Fp;
}

// Continuation along a straight path from a convergent anchor.  Covers the
// unit-circle band around exp(+-i pi/3) where every classical transform has
// series argument of modulus ~1.
SeriesValue taylor_walk(const cplx& a, const cplx& b, const cplx& c,
                        const cplx& z) {
    const cplx z0 = 0.72 * z / std::abs(z);
    SeriesValue fv = direct_series(a, b, c, z0);
    SeriesValue fpv = direct_series(a + 1.0, b + 1.0, c + 1.0, z0);
    cplx f = fv.value;
    cplx fp = (a * b / c) * fpv.value;
    double err = fv.abs_error_estimate + std::abs(a * b / c) * fpv.abs_error_estimate;
    cplx zc = z0;
    long terms = fv.terms_used + fpv.terms_used;
    for (int step = 0; step < 64; ++step) {
        const cplx rest = z - zc;
        if (std::abs(rest) == 0.0) break;
        const double sing = std::min(std::abs(zc), std::abs(zc - 1.0));
        const double hmax = 0.3 * sing;
        cplx u = rest;
        if (std::abs(rest) > hmax) u = rest * (hmax / std::abs(rest));
        taylor_step(a, b, c, zc, u, f, fp, err);
        zc += u;
        terms += 40;
        if (std::abs(z - zc) < 1e-15 * std::abs(z)) {
            zc = z;
            break;
        }
    }
    if (std::abs(z - zc) > 1e-12 * std::abs(z))
        throw RangeError("2F1 continuation path did not reach the target argument");
    SeriesValue out;
    out.value = f;
    out.abs_error_estimate = err;
    out.terms_used = terms;
    out.status = SeriesStatus::converged;
    return out;
}

} // namespace

SeriesValue gauss_2f1(const cplx& a, const cplx& b, const cplx& c, const cplx& z) {
    if (is_nonpositive_integer(c) && !is_terminating(a) && !is_terminating(b))
        throw ParameterPole("2F1 lower parameter c is a nonpositive integer");
    if (is_terminating(a) || is_terminating(b)) return direct_series(a, b, c, z);
    if (z == cplx(0.0, 0.0)) return direct_series(a, b, c, z);

    const double az = std::abs(z);
    const double a1z = std::abs(1.0 - z);
    const double aw = az / a1z; // |z/(z-1)|

    if (az <= 0.75) return direct_series(a, b, c, z);
    if (a1z <= 0.75) return connection_1mz(a, b, c, z);
    if (aw <= 0.75) return pfaff(a, b, c, z);
    if (az <= 0.92) return direct_series(a, b, c, z);
    if (a1z <= 0.92) return connection_1mz(a, b, c, z);
    if (aw <= 0.92) return pfaff(a, b, c, z);
    if (az <= 1.08) {
        if (z.imag() == 0.0 && z.real() >= 1.0)
            throw RangeError("2F1 argument on the branch cut [1, inf)");
        return taylor_walk(a, b, c, z);
    }
    throw RangeError("2F1 argument outside the validated region");
}

SeriesValue gauss_2f1_derivative(const cplx& a, const cplx& b, const cplx& c,
                                 const cplx& z) {
    const cplx f = a * b / c;
    if (f == cplx(0.0, 0.0)) return SeriesValue{};
    SeriesValue d = gauss_2f1(a + 1.0, b + 1.0, c + 1.0, z);
    d.value *= f;
    d.abs_error_estimate *= std::abs(f);
    return d;
}

double contiguous_step_2f1(const cplx& p, const cplx& q, const cplx& r,
                           const cplx& y) {
    const cplx d = p - q;
    if (std::abs(d) < 1e-12 || std::abs(d - 1.0) < 1e-12 || std::abs(d + 1.0) < 1e-12)
        throw DegenerateError("contiguous relation degenerates at p-q in {0,+1,-1}");
    const cplx cm = q * (r - p) / ((q - p) * (1.0 + q - p));
    const cplx cp = p * (r - q) / ((p - q) * (1.0 + p - q));
    const cplx f0 = gauss_2f1(p, q, r, y).value;
    const cplx fm = gauss_2f1(p - 1.0, q + 1.0, r, y).value;
    const cplx fp = gauss_2f1(p + 1.0, q - 1.0, r, y).value;
    return std::abs(-y * f0 - (cm * fm - (cm + cp) * f0 + cp * fp));
}

} // namespace idxt
