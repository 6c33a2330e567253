// SPDX-License-Identifier: Apache-2.0
//
// oamlink - underwater acoustic OAM multiplexing link simulator
// Copyright (C) 2026 oamlink contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <cmath>
#include <complex>
#include <numbers>

#include <doctest.h>

#include "oam/lgbeam.hpp"

using namespace oam::lgbeam;
using std::complex;

namespace {

constexpr double kPi = std::numbers::pi;

// Independent oracle: L_p^a(x) by the explicit summation
// sum_{m=0}^{p} (-1)^m C(p+a, p-m) x^m / m!
double laguerre_by_sum(unsigned p, double alpha, double x) {
    double acc = 0.0;
    double sign = 1.0;
    for (unsigned m = 0; m <= p; ++m) {
        const double binom =
            std::exp(std::lgamma(p + alpha + 1.0) - std::lgamma(p - m + 1.0) -
                     std::lgamma(alpha + m + 1.0));
        acc += sign * binom * std::pow(x, m) / std::tgamma(m + 1.0);
        sign = -sign;
    }
    return acc;
}

// Independent oracle: term-by-term product of the transverse mode formula.
complex<double> amplitude_by_terms(int l, unsigned p, double w0, double rho,
                                   double theta) {
    const int la = std::abs(l);
    const double norm =
        std::sqrt(2.0 * std::tgamma(p + 1.0) / (kPi * std::tgamma(p + la + 1.0)));
    const double radial = norm / w0 * std::pow(rho * std::sqrt(2.0) / w0, la) *
                          std::exp(-rho * rho / (w0 * w0)) *
                          laguerre_by_sum(p, la, 2.0 * rho * rho / (w0 * w0));
    return radial * std::exp(complex<double>(0.0, l * theta));
}

// Adaptive Simpson quadrature for the normalization check.
double simpson(const auto& f, double a, double b) {
    const double c = 0.5 * (a + b);
    return (b - a) / 6.0 * (f(a) + 4.0 * f(c) + f(b));
}

double adaptive_simpson(const auto& f, double a, double b, double eps,
                        int depth) {
    const double c = 0.5 * (a + b);
    const double whole = simpson(f, a, b);
    const double left = simpson(f, a, c);
    const double right = simpson(f, c, b);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * eps)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, c, eps / 2.0, depth - 1) +
           adaptive_simpson(f, c, b, eps / 2.0, depth - 1);
}

LGMode mode_of(int l, unsigned p = 0, double w0 = 1.0, double k = 1.0) {
    LGMode m;
    m.charge = l;
    m.radial_index = p;
    m.waist = w0;
    m.wavenumber = k;
    return m;
}

double eq4_residual(int l, double w0, double radius) {
    const double la = std::abs(l);
    const double lhs = std::pow(2.0 / la, la) * std::pow(radius / w0, 2.0 * la) *
                       std::exp(-2.0 * radius * radius / (w0 * w0));
    return lhs - std::exp(-la);
}

} // namespace

TEST_CASE("assoc_laguerre closed-form values") {
    CHECK(assoc_laguerre(0, 3.0, 7.2) == 1.0);
    CHECK(assoc_laguerre(1, 2.0, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(assoc_laguerre(3, 1.0, 0.5) ==
          doctest::Approx(laguerre_by_sum(3, 1.0, 0.5)).epsilon(1e-13));
}

TEST_CASE("assoc_laguerre matches the summation oracle over a sweep") {
    for (unsigned p : {0u, 1u, 2u, 4u, 7u}) {
        for (double alpha : {0.0, 1.0, 3.0, 8.0}) {
            for (double x : {0.0, 0.25, 1.0, 2.5, 9.0}) {
                // the alternating sum itself cancels digits at larger x
                const double want = laguerre_by_sum(p, alpha, x);
                CHECK(assoc_laguerre(p, alpha, x) ==
                      doctest::Approx(want).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("amplitude null core and on-axis value") {
    CHECK(std::abs(amplitude(mode_of(3), 0.0, 1.234)) == 0.0);
    CHECK(std::abs(amplitude(mode_of(1), 0.0, 0.0)) == 0.0);

    const auto on_axis = amplitude(mode_of(0, 0, 0.7), 0.0, 2.0);
    CHECK(on_axis.real() ==
          doctest::Approx(std::sqrt(2.0 / kPi) / 0.7).epsilon(1e-14));
    CHECK(on_axis.imag() == doctest::Approx(0.0));
}

TEST_CASE("amplitude matches the term-by-term oracle") {
    const double w0 = 0.31;
    for (int l : {-4, -1, 0, 2, 5, 8}) {
        for (unsigned p : {0u, 1u, 3u}) {
            for (double rho : {0.05, 0.31, 0.62, 1.1}) {
                const double theta = 0.37 * l + 0.21 * rho;
                const auto got = amplitude(mode_of(l, p, w0), rho, theta);
                const auto want = amplitude_by_terms(l, p, w0, rho, theta);
                CHECK(std::abs(got - want) <= 1e-12 * std::abs(want));
            }
        }
    }
    // the l=2 case called out with magnitude and phase
    const auto v = amplitude(mode_of(2), 1.0, kPi / 4.0);
    CHECK(std::arg(v) == doctest::Approx(kPi / 2.0).epsilon(1e-13));
    CHECK(std::abs(v) ==
          doctest::Approx(std::abs(amplitude_by_terms(2, 0, 1.0, 1.0, 0.0)))
              .epsilon(1e-13));
}

TEST_CASE("azimuthal phase winding") {
    for (int l : {-3, 1, 5}) {
        const double rho = 0.8;
        const double t1 = 0.3, t2 = 1.7;
        const auto a1 = amplitude(mode_of(l), rho, t1);
        const auto a2 = amplitude(mode_of(l), rho, t2);
        const double winding =
            std::remainder(std::arg(a2) - std::arg(a1) - l * (t2 - t1),
                           2.0 * kPi);
        CHECK(std::abs(winding) < 1e-12);
    }
}

TEST_CASE("amplitude_full reduces to the source-plane amplitude at z=0") {
    for (int l : {-2, 0, 1, 8}) {
        for (double rho : {0.0, 0.4, 1.3}) {
            const auto a = amplitude(mode_of(l, 0, 0.8, 40.0), rho, 0.9);
            const auto b = amplitude_full(mode_of(l, 0, 0.8, 40.0), rho, 0.9, 0.0);
            CHECK(std::abs(a - b) <= 1e-14 * std::abs(a));
        }
    }
}

TEST_CASE("amplitude_full keeps the null core along the axis") {
    for (double z : {0.0, 0.5, 3.0})
        CHECK(std::abs(amplitude_full(mode_of(1, 0, 1.0, 10.0), 0.0, 0.2, z)) ==
              0.0);
}

TEST_CASE("amplitude_full Guoy and curvature phases") {
    const auto mode = mode_of(1, 0, 1.0, 20.0);
    const double zr = mode.rayleigh_range();
    CHECK(zr == doctest::Approx(10.0));

    // at z = z_R the Guoy angle is (2p+|l|+1)*atan(1) = pi/2
    const double rho = 1.0, theta = 0.0;
    const auto got = amplitude_full(mode, rho, theta, zr);
    const double wz = mode.width_at(zr);
    const double radial = std::sqrt(2.0 / (kPi * 1.0)) / wz *
                          (rho * std::sqrt(2.0) / wz) *
                          std::exp(-rho * rho / (wz * wz));
    const double curvature =
        -mode.wavenumber * rho * rho * zr / (2.0 * (zr * zr + zr * zr));
    const auto want =
        radial * std::exp(std::complex<double>(0.0, curvature - kPi / 2.0));
    CHECK(std::abs(got - want) <= 1e-12 * std::abs(want));
}

TEST_CASE("intensity definition and theta independence") {
    CHECK(intensity(mode_of(1), 0.0) == 0.0);
    CHECK_THROWS_AS(intensity(mode_of(1, 2), 0.5), std::invalid_argument);

    for (int l : {0, 1, 4, 8}) {
        for (double rho : {0.1, 0.7, 1.9}) {
            const double i = intensity(mode_of(l), rho);
            for (double theta : {0.0, 1.1, 4.4}) {
                const double via_amp = std::norm(amplitude(mode_of(l), rho, theta));
                CHECK(std::abs(i - via_amp) <= 1e-12 * via_amp);
            }
        }
    }
}

TEST_CASE("intensity integrates to unity") {
    for (int l = 1; l <= 8; ++l) {
        const double w0 = 0.6;
        const auto integrand = [&](double rho) {
            return intensity(mode_of(l, 0, w0), rho) * rho;
        };
        const double integral =
            2.0 * kPi * adaptive_simpson(integrand, 0.0, 10.0 * w0, 1e-10, 30);
        CHECK(integral == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("max_intensity_radius analytic identity and residual") {
    for (int l : {-8, -3, -1, 1, 2, 5, 8}) {
        for (double w0 : {0.1, 1.0, 10.0}) {
            const double r = max_intensity_radius(l, w0);
            const double want = w0 * std::sqrt(std::abs(l) / 2.0);
            CHECK(std::abs(r - want) <= 1e-9 * want);
            CHECK(std::abs(eq4_residual(l, w0, r)) < 1e-12);
        }
    }
    CHECK(max_intensity_radius(1, 1.0) ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(max_intensity_radius(8, 1.0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(max_intensity_radius(-3, 0.5) ==
          doctest::Approx(max_intensity_radius(3, 0.5)).epsilon(1e-14));
    CHECK_THROWS_AS(max_intensity_radius(0, 1.0), std::invalid_argument);
}

TEST_CASE("peak_intensity values and dominance") {
    CHECK(peak_intensity(0, 1.0) == doctest::Approx(2.0 / kPi).epsilon(1e-14));
    CHECK(peak_intensity(1, 1.0) ==
          doctest::Approx(2.0 / kPi * std::exp(-1.0)).epsilon(1e-12));

    for (int l : {0, 1, 4, 8}) {
        const double peak = peak_intensity(l, 1.0);
        for (int i = 1; i <= 1000; ++i) {
            const double rho = 4.0 * i / 1000.0;
            CHECK(peak >= intensity(mode_of(l), rho) * (1.0 - 1e-12));
        }
    }
}
