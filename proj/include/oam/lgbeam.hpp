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

#pragma once

#include <complex>

namespace oam::lgbeam {

// Parameters of a Laguerre-Gaussian vortex mode.
struct LGMode {
    int charge = 0;            // topological charge l, sign sets handedness
    unsigned radial_index = 0; // radial index p
    double waist = 1.0;        // beam waist w(0), m
    double wavenumber = 1.0;   // k = 2*pi/lambda, rad/m

    // z_R = k*w(0)^2/2
    double rayleigh_range() const { return 0.5 * wavenumber * waist * waist; }
    // w(z) = w(0)*sqrt(1 + z^2/z_R^2)
    double width_at(double z) const;

    void validate() const; // waist > 0, wavenumber > 0
};

// Associated Laguerre polynomial L_p^alpha(x) by the stable three-term
// recurrence. Total on p >= 0.
double assoc_laguerre(unsigned p, double alpha, double x);

// Transverse mode amplitude at the source plane: the u_{l,p}(rho,theta,0)
// spatial factor times e^{i*l*theta}. Axial/time phases are the
// transmitter's business.
std::complex<double> amplitude(const LGMode& mode, double rho, double theta);

// Full paraxial amplitude at axial distance z: width growth, radial
// curvature phase and Guoy phase included. Reduces exactly to amplitude()
// at z = 0.
std::complex<double> amplitude_full(const LGMode& mode, double rho,
                                    double theta, double z);

// |u_{l,0}|^2 at the source plane. Defined for radial_index 0 only;
// use |amplitude()|^2 for p > 0. Independent of theta.
double intensity(const LGMode& mode, double rho);

// Radius of the maximum-intensity circle for charge l != 0. Golden-section
// maximisation of the log-intensity followed by a Newton polish; converges
// to 1e-12 relative.
double max_intensity_radius(int charge, double waist);

// Intensity at the maximum-intensity radius (at rho = 0 for l = 0).
// This is the per-charge excitation scale of the transmitter.
double peak_intensity(int charge, double waist);

} // namespace oam::lgbeam
