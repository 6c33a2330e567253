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

#include <array>
#include <cstdint>
#include <vector>

#include "oam/types.hpp"

namespace oam::txarray {

// Fixed threshold-calibration preamble, prepended to every channel.
// Contains isolated and repeated marks of both polarities.
inline constexpr std::array<std::uint8_t, 8> kPreamble = {1, 0, 1, 0, 1, 1, 0, 0};

// Circular transmitter geometry: n elements equally spaced on a circle,
// element 0 on the +x axis, angles 2*pi*i/n.
struct RingArray {
    std::size_t n = 0;
    double radius = 0.0; // m
    std::vector<std::array<double, 3>> positions;
    std::vector<double> angles; // rad, strictly increasing from 0
};

RingArray ring_positions(std::size_t n, double radius);

// How per-channel excitation amplitudes are assigned.
enum class AmplitudeMode {
    per_charge, // peak intensity of each charge's own mode
    uniform,    // every channel at the |l| = 1 peak intensity
};

// Ordered OAM channel map: distinct nonzero charges, one amplitude each.
struct ChannelPlan {
    std::vector<int> charges;
    std::vector<double> amplitudes;
    double carrier_freq = 0.0;   // Hz
    unsigned symbol_periods = 1; // carrier periods per symbol
};

// Build and validate a plan against the array it will drive: charges must
// be distinct and pairwise non-congruent modulo array.n, amplitudes come
// from the mode peak intensities at the given beam waist.
ChannelPlan make_channel_plan(const RingArray& array,
                              const std::vector<int>& charges,
                              double beam_waist, double carrier_freq,
                              unsigned symbol_periods,
                              AmplitudeMode mode = AmplitudeMode::per_charge);

// Throws if any pair of plan charges aliases on an n-element ring
// (l == l' mod n makes their excitation vectors identical).
void check_aliasing(const std::vector<int>& charges, std::size_t n_elements);

// Rectangular NRZ stream: each bit held for samples_per_symbol samples.
std::vector<double> ook_baseband(const std::vector<std::uint8_t>& bits,
                                 std::size_t samples_per_symbol);

// Per-element multiplexed excitation: element i carries
// sum_p S_p(t) * A_p * exp(i*(w*t + l_p*theta_i)), sampled at sample_rate
// starting at t0. One waveform per array element.
std::vector<ComplexWaveform> multiplex_excitations(const RingArray& array,
                                                   const ChannelPlan& plan,
                                                   const BitMatrix& payload,
                                                   double sample_rate,
                                                   double t0 = 0.0);

// Samples per symbol implied by (sample_rate, plan); throws unless it is a
// positive integer and the carrier is sampled at >= 4x.
std::size_t samples_per_symbol(const ChannelPlan& plan, double sample_rate);

// Prepend the fixed calibration preamble to every channel row.
BitMatrix frame_build(const BitMatrix& payload);

} // namespace oam::txarray
