// Throwaway development probe; not part of the build.
#include <cstdio>
#include <random>

#include "idxt/bilateral.hpp"
#include "idxt/gamma.hpp"
#include "idxt/hyp2f1.hpp"

using namespace idxt;

int main() {
    // gamma sanity
    std::printf("Gamma(1)   = %.16g\n", complex_gamma(cplx(1, 0)).real());
    std::printf("Gamma(0.5) = %.16g (sqrt(pi)=%.16g)\n",
                complex_gamma(cplx(0.5, 0)).real(), std::sqrt(pi));
    cplx g34 = complex_gamma(cplx(3, 4));
    std::printf("Gamma(3+4i) = %.15g + %.15gi\n", g34.real(), g34.imag());
    // recurrence check
    {
        cplx z(0.3, 2.7);
        cplx lhs = complex_gamma(z + 1.0), rhs = z * complex_gamma(z);
        std::printf("recurrence rel err %.3e\n", std::abs(lhs - rhs) / std::abs(rhs));
    }
    // reciprocal near pole
    std::printf("rgamma(-3) = %.3e, rgamma(-2.5) = %.16g (expect %.16g)\n",
                std::abs(reciprocal_gamma(cplx(-3, 0))),
                reciprocal_gamma(cplx(-2.5, 0)).real(),
                1.0 / (-8.0 * std::sqrt(pi) / 15.0));

    // 2F1 regions vs binomial identity 2F1(a,b;b;z) = (1-z)^{-a}
    {
        cplx a(0.7, 0.2), b(1.3, 0.0);
        for (double re : {0.1, 0.6, -0.4, 0.45}) {
            for (double im : {0.0, 0.4, 0.9, -0.85}) {
                cplx z(re, im);
                if (std::abs(z) > 1.05) continue;
                if (z.imag() == 0 && z.real() >= 1) continue;
                cplx f = gauss_2f1(a, b, b, z).value;
                cplx ref = std::exp(-a * std::log(1.0 - z));
                std::printf("binom z=(%.2f,%.2f): rel %.2e\n", re, im,
                            std::abs(f - ref) / std::abs(ref));
            }
        }
        // on the unit circle, including the hard band near exp(i pi/3)
        for (double th : {0.2, 0.8, 1.0471975511965976, 1.1, 1.9, 2.8, 3.14159, 4.5, 6.0}) {
            cplx z = std::polar(1.0, th);
            cplx f = gauss_2f1(a, b, b, z).value;
            cplx ref = std::exp(-a * std::log(1.0 - z));
            std::printf("binom circle th=%.4f: rel %.2e\n", th,
                        std::abs(f - ref) / std::abs(ref));
        }
    }
    // classical value 2F1(1,1;2;z) = -log(1-z)/z at 0.5
    {
        cplx f = gauss_2f1(cplx(1, 0), cplx(1, 0), cplx(2, 0), cplx(0.5, 0)).value;
        std::printf("2F1(1,1;2;.5) = %.15g expect %.15g\n", f.real(),
                    -std::log(0.5) / 0.5);
    }

    // Dougall at the clean point: a1=a2=0, b1=b2=3/2 -> 16/pi^2
    {
        BilateralParams bp;
        bp.upper = {cplx(0, 0), cplx(0, 0)};
        bp.lower = {cplx(1.5, 0), cplx(1.5, 0)};
        bp.z = cplx(1, 0);
        SeriesValue s = bilateral_h_star(bp);
        std::printf("2H2*(0,0;1.5,1.5;1) = %.15g  expect %.15g  err_est %.2e\n",
                    s.value.real(), 16.0 / (pi * pi), s.abs_error_estimate);
    }

    // Dougall random sweep
    {
        std::mt19937_64 rng(12345);
        std::uniform_real_distribution<double> u(0, 1);
        double worst = 0;
        int n = 0;
        while (n < 120) {
            cplx a1(-0.3 + 0.75 * u(rng), -0.4 + 0.8 * u(rng));
            cplx a2(-0.3 + 0.75 * u(rng), -0.4 + 0.8 * u(rng));
            cplx b1(0.9 + 0.7 * u(rng), -0.4 + 0.8 * u(rng));
            cplx b2(0.9 + 0.7 * u(rng), -0.4 + 0.8 * u(rng));
            double kappa = (a1 + a2 - b1 - b2).real();
            if (kappa >= -1.2) continue;
            ++n;
            BilateralParams bp{{a1, a2}, {b1, b2}, cplx(1, 0)};
            SeriesValue s = bilateral_h_star(bp);
            cplx d = dougall_closed_form(a1, a2, b1, b2);
            double rel = std::abs(s.value - d) / (1.0 + std::abs(d));
            if (rel > worst) {
                worst = rel;
                std::printf("  draw %3d kappa=%.3f rel=%.3e est=%.2e |d|=%.2e\n", n,
                            kappa, rel, s.abs_error_estimate, std::abs(d));
            }
        }
        std::printf("Dougall sweep worst rel = %.3e\n", worst);
    }

    // three-term dependence at the quoted parameters
    {
        cplx a1(0.15, 0.1), a2(0.25, 0), b1(1.2, 0), b2(1.35, 0);
        cplx z = std::polar(1.0, 2.0);
        cplx t1(0, 0), t2 = 1.0 - b1, t3 = 1.0 - b2;
        cplx J1 = shifted_solution_jt(a1, a2, b1, b2, t1, z).value;
        cplx J2 = shifted_solution_jt(a1, a2, b1, b2, t2, z).value;
        cplx J3 = shifted_solution_jt(a1, a2, b1, b2, t3, z).value;
        cplx resid = sin_pi(t2 - t3) * J1 + sin_pi(t3 - t1) * J2 + sin_pi(t1 - t2) * J3;
        double scale = std::max({std::abs(J1), std::abs(J2), std::abs(J3)});
        std::printf("three-term resid rel = %.3e (|J| ~ %.2e)\n",
                    std::abs(resid) / scale, scale);
    }

    // conditional regime (kappa = -1) vs Cesaro
    {
        BilateralParams bp{{cplx(0.2, 0.1), cplx(0.3, -0.2)},
                           {cplx(1.1, 0), cplx(1.4, 0.1)},
                           std::polar(1.0, 2.2)};
        std::printf("kappa = %.3f\n", bp.kappa());
        SeriesValue fast = bilateral_h_star(bp);
        SeriesValue ces = bilateral_h_star_cesaro(bp, 4000);
        std::printf("conditional: fast=(%.12g,%.12g) est=%.1e, cesaro diff=%.2e est=%.1e\n",
                    fast.value.real(), fast.value.imag(), fast.abs_error_estimate,
                    std::abs(fast.value - ces.value), ces.abs_error_estimate);
    }

    // reduction b2=1: 2H2*[a1,a2;b1,1;z] = 2F1(a1,a2;b1;z)/(G(1-a1)G(1-a2)G(b1))
    {
        cplx a1(0.2, 0), a2(0.3, 0), b1(1.1, 0), z(0.5, 0);
        BilateralParams bp{{a1, a2}, {b1, cplx(1, 0)}, z};
        // |z| != 1 here; check the identity with z on the circle instead
        bp.z = std::polar(1.0, 1.3);
        SeriesValue s = bilateral_h_star(bp);
        cplx ref = gauss_2f1(a1, a2, b1, bp.z).value *
                   reciprocal_gamma(1.0 - a1) * reciprocal_gamma(1.0 - a2) *
                   reciprocal_gamma(b1);
        std::printf("b2=1 reduction rel = %.3e\n",
                    std::abs(s.value - ref) / std::abs(ref));
    }
    return 0;
}
