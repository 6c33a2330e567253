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

#include "oam/lgbeam.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oam::lgbeam {

namespace {

constexpr double kPi = std::numbers::pi;

void require_nonnegative_radius(double rho) {
    if (rho < 0.0)
        throw std::invalid_argument("lgbeam: rho must be >= 0");
}

} // namespace

double LGMode::width_at(double z) const {
    const double zr = rayleigh_range();
    return waist * std::sqrt(1.0 + (z * z) / (zr * zr));
}

void LGMode::validate() const {
    if (!(waist > 0.0))
        throw std::invalid_argument("lgbeam: waist must be > 0");
    if (!(wavenumber > 0.0))
        throw std::invalid_argument("lgbeam: wavenumber must be > 0");
}

double assoc_laguerre(unsigned p, double alpha, double x) {
    if (p == 0)
        return 1.0;
    double prev = 1.0;              // L_0
    double cur = 1.0 + alpha - x;   // L_1
    for (unsigned k = 2; k <= p; ++k) {
        const double next =
            ((2.0 * k - 1.0 + alpha - x) * cur - (k - 1.0 + alpha) * prev) / k;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::complex<double> amplitude_full(const LGMode& mode, double rho,
                                    double theta, double z) {
    mode.validate();
    require_nonnegative_radius(rho);

    const int la = std::abs(mode.charge);
    const double p = static_cast<double>(mode.radial_index);
    const double zr = mode.rayleigh_range();
    const double wz = mode.width_at(z);

    // sqrt(2*p! / (pi*(p+|l|)!)) via log-gamma so large |l| cannot overflow
    const double norm = std::sqrt(
        2.0 / kPi * std::exp(std::lgamma(p + 1.0) - std::lgamma(p + la + 1.0)));

    const double u = 2.0 * rho * rho / (wz * wz);
    const double radial = (norm / wz) *
                          std::pow(rho * std::sqrt(2.0) / wz, la) *
                          std::exp(-rho * rho / (wz * wz)) *
                          assoc_laguerre(mode.radial_index, la, u);

    const double curvature =
        -mode.wavenumber * rho * rho * z / (2.0 * (zr * zr + z * z));
    const double guoy = -(2.0 * p + la + 1.0) * std::atan2(z, zr);
    const double phase = mode.charge * theta + curvature + guoy;

    return radial * std::complex<double>(std::cos(phase), std::sin(phase));
}

std::complex<double> amplitude(const LGMode& mode, double rho, double theta) {
    return amplitude_full(mode, rho, theta, 0.0);
}

double intensity(const LGMode& mode, double rho) {
    mode.validate();
    require_nonnegative_radius(rho);
    if (mode.radial_index != 0)
        throw std::invalid_argument(
            "lgbeam: intensity requires radial_index 0; use |amplitude|^2 "
            "for higher radial orders");

    const int la = std::abs(mode.charge);
    const double w0 = mode.waist;
    if (rho == 0.0)
        return la == 0 ? 2.0 / (kPi * w0 * w0) : 0.0;

    const double u = 2.0 * rho * rho / (w0 * w0);
    // log domain: 2/(pi*|l|!*w0^2) * u^|l| * e^-u
    const double log_i = std::log(2.0 / kPi) - 2.0 * std::log(w0) -
                         std::lgamma(la + 1.0) + la * std::log(u) - u;
    return std::exp(log_i);
}

double max_intensity_radius(int charge, double waist) {
    if (charge == 0)
        throw std::invalid_argument(
            "lgbeam: max_intensity_radius requires charge != 0 (the l = 0 "
            "intensity peaks on axis)");
    if (!(waist > 0.0))
        throw std::invalid_argument("lgbeam: waist must be > 0");

    const double la = std::abs(charge);
    // log-intensity up to a constant: f(rho) = |l|*ln(u) - u, u = 2 rho^2/w0^2
    const auto log_intensity = [&](double rho) {
        const double u = 2.0 * rho * rho / (waist * waist);
        return la * std::log(u) - u;
    };

    // Unimodal on (0, 2*w0*sqrt(|l|)]; golden-section to 1e-13 absolute
    // of the bracket, then one Newton step on d(log I)/d(rho).
    double a = 1e-12 * waist;
    double b = 2.0 * waist * std::sqrt(la);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = log_intensity(c);
    double fd = log_intensity(d);
    const double tol = 1e-13 * b;
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = log_intensity(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = log_intensity(d);
        }
    }
    double r = 0.5 * (a + b);

    // Newton polish on d(log I)/d(rho) = (|l|/u - 1)*4 rho/w0^2,
    // equivalent to solving |l| - u(rho) = 0.
    const double u = 2.0 * r * r / (waist * waist);
    r += (la - u) * waist * waist / (4.0 * r);
    return r;
}

double peak_intensity(int charge, double waist) {
    LGMode mode;
    mode.charge = charge;
    mode.waist = waist;
    if (charge == 0)
        return intensity(mode, 0.0);
    return intensity(mode, max_intensity_radius(charge, waist));
}

} // namespace oam::lgbeam
