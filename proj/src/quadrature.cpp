#include "idxt/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "idxt/errors.hpp"

namespace idxt {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
    double a, b;
    cplx value;
    double error;
};

struct SegmentOrder {
    bool operator()(const Segment& x, const Segment& y) const {
        return x.error < y.error;
    }
};

Segment gk15_panel(const Integrand& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const cplx f0 = f(mid);
    cplx k15 = kWgk[7] * f0;
    cplx g7 = kWg[3] * f0;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const cplx fs = f(mid + dx) + f(mid - dx);
        k15 += kWgk[i] * fs;
        if (i % 2 == 1) g7 += kWg[i / 2] * fs;
    }
    k15 *= half;
    g7 *= half;
    return Segment{a, b, k15, std::abs(k15 - g7)};
}

QuadResult gk15_run(const Integrand& f, double a, double b, double abs_tol,
                    long max_evals, bool throw_on_failure) {
    QuadResult out;
    if (a == b) return out;
    std::priority_queue<Segment, std::vector<Segment>, SegmentOrder> segs;
    segs.push(gk15_panel(f, a, b));
    out.evals = 15;
    double total_err = segs.top().error;
    cplx total = segs.top().value;
    while (total_err > abs_tol) {
        if (out.evals + 30 > max_evals || segs.top().error == 0.0) {
            if (throw_on_failure)
                throw QuadratureFailure(
                    "gk15_adaptive: tolerance unreachable within evaluation budget");
            break;
        }
        Segment worst = segs.top();
        segs.pop();
        const double m = 0.5 * (worst.a + worst.b);
        if (m <= worst.a || m >= worst.b) {
            // interval at machine resolution, keep as is
            segs.push(Segment{worst.a, worst.b, worst.value, 0.0});
            continue;
        }
        Segment left = gk15_panel(f, worst.a, m);
        Segment right = gk15_panel(f, m, worst.b);
        out.evals += 30;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        segs.push(left);
        segs.push(right);
    }
    // re-accumulate in deterministic order for a stable result
    std::vector<Segment> all;
    all.reserve(segs.size());
    while (!segs.empty()) {
        all.push_back(segs.top());
        segs.pop();
    }
    std::sort(all.begin(), all.end(),
              [](const Segment& x, const Segment& y) { return x.a < y.a; });
    out.value = cplx(0.0, 0.0);
    out.abs_error = 0.0;
    for (const Segment& s : all) {
        out.value += s.value;
        out.abs_error += s.error;
    }
    return out;
}

} // namespace

QuadResult gk15_adaptive(const Integrand& f, double a, double b, double abs_tol,
                         long max_evals) {
    return gk15_run(f, a, b, abs_tol, max_evals, true);
}

QuadResult gk15_best_effort(const Integrand& f, double a, double b,
                            double abs_tol, long max_evals) {
    return gk15_run(f, a, b, abs_tol, max_evals, false);
}

const std::array<double, 15>& gl15_nodes() {
    static const std::array<double, 15> nodes = [] {
        std::array<double, 15> x{};
        // Newton iteration on the Legendre polynomial P_15.
        const int n = 15;
        for (int i = 0; i < (n + 1) / 2; ++i) {
            double z = std::cos(pi * (i + 0.75) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = 0.0;
                for (int j = 0; j < n; ++j) {
                    const double p2 = p1;
                    p1 = p0;
                    p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
                }
                const double dp = n * (z * p0 - p1) / (z * z - 1.0);
                const double dz = p0 / dp;
                z -= dz;
                if (std::abs(dz) < 1e-16) break;
            }
            x[i] = -z;
            x[n - 1 - i] = z;
        }
        return x;
    }();
    return nodes;
}

const std::array<double, 15>& gl15_weights() {
    static const std::array<double, 15> weights = [] {
        std::array<double, 15> w{};
        const auto& x = gl15_nodes();
        const int n = 15;
        for (int i = 0; i < n; ++i) {
            const double z = x[i];
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            const double dp = n * (z * p0 - p1) / (z * z - 1.0);
            w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        }
        return w;
    }();
    return weights;
}

cplx panel_integrate(const Integrand& f, double a, double b, double panel_width) {
    if (!(panel_width > 0.0)) throw RangeError("panel_integrate: width must be positive");
    if (a == b) return cplx(0.0, 0.0);
    const long k = std::max(1L, (long)std::ceil((b - a) / panel_width));
    const double h = (b - a) / double(k);
    const auto& x = gl15_nodes();
    const auto& w = gl15_weights();
    cplx total(0.0, 0.0);
    for (long j = 0; j < k; ++j) {
        const double lo = a + h * double(j);
        const double mid = lo + 0.5 * h;
        cplx s(0.0, 0.0);
        for (int i = 0; i < 15; ++i) s += w[i] * f(mid + 0.5 * h * x[i]);
        total += 0.5 * h * s;
    }
    return total;
}

QuadResult integrate_sinh_line(const Integrand& f, double u_max, double abs_tol,
                               long max_evals) {
    auto g = [&f](double u) {
        const double x = 0.5 * std::sinh(u);
        return f(x) * (0.5 * std::cosh(u));
    };
    return gk15_adaptive(g, -u_max, u_max, abs_tol, max_evals);
}

} // namespace idxt
