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

#include "oam/txarray.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "oam/lgbeam.hpp"

namespace oam::txarray {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

RingArray ring_positions(std::size_t n, double radius) {
    if (n < 3)
        throw std::invalid_argument("txarray: ring needs at least 3 elements");
    if (!(radius > 0.0))
        throw std::invalid_argument("txarray: ring radius must be > 0");

    RingArray a;
    a.n = n;
    a.radius = radius;
    a.positions.reserve(n);
    a.angles.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double theta = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
        a.angles.push_back(theta);
        a.positions.push_back({radius * std::cos(theta), radius * std::sin(theta), 0.0});
    }
    return a;
}

void check_aliasing(const std::vector<int>& charges, std::size_t n_elements) {
    const long n = static_cast<long>(n_elements);
    for (std::size_t i = 0; i < charges.size(); ++i) {
        if (charges[i] == 0)
            throw std::invalid_argument("txarray: channel charge 0 is not allowed");
        for (std::size_t j = i + 1; j < charges.size(); ++j) {
            long diff = (static_cast<long>(charges[i]) - charges[j]) % n;
            if (diff == 0)
                throw std::invalid_argument(
                    "txarray: charges " + std::to_string(charges[i]) + " and " +
                    std::to_string(charges[j]) + " alias on a " +
                    std::to_string(n_elements) + "-element ring");
        }
    }
}

ChannelPlan make_channel_plan(const RingArray& array,
                              const std::vector<int>& charges,
                              double beam_waist, double carrier_freq,
                              unsigned symbol_periods, AmplitudeMode mode) {
    if (charges.empty())
        throw std::invalid_argument("txarray: channel plan needs >= 1 charge");
    if (!(carrier_freq > 0.0))
        throw std::invalid_argument("txarray: carrier frequency must be > 0");
    if (symbol_periods < 1)
        throw std::invalid_argument("txarray: symbol_periods must be >= 1");
    check_aliasing(charges, array.n);

    ChannelPlan plan;
    plan.charges = charges;
    plan.carrier_freq = carrier_freq;
    plan.symbol_periods = symbol_periods;
    plan.amplitudes.reserve(charges.size());
    for (int l : charges) {
        const int scale_charge = mode == AmplitudeMode::uniform ? 1 : l;
        plan.amplitudes.push_back(lgbeam::peak_intensity(scale_charge, beam_waist));
    }
    return plan;
}

std::vector<double> ook_baseband(const std::vector<std::uint8_t>& bits,
                                 std::size_t samples_per_symbol) {
    if (bits.empty())
        throw std::invalid_argument("txarray: empty bit sequence");
    if (samples_per_symbol < 1)
        throw std::invalid_argument("txarray: samples_per_symbol must be >= 1");

    std::vector<double> out;
    out.reserve(bits.size() * samples_per_symbol);
    for (std::uint8_t b : bits) {
        if (b > 1)
            throw std::invalid_argument("txarray: bits must be 0 or 1");
        out.insert(out.end(), samples_per_symbol, static_cast<double>(b));
    }
    return out;
}

std::size_t samples_per_symbol(const ChannelPlan& plan, double sample_rate) {
    if (sample_rate < 4.0 * plan.carrier_freq)
        throw std::invalid_argument(
            "txarray: sample_rate must be >= 4x the carrier frequency");
    const double spp = sample_rate * plan.symbol_periods / plan.carrier_freq;
    const double rounded = std::round(spp);
    if (rounded < 1.0 || std::abs(spp - rounded) > 1e-9 * spp)
        throw std::invalid_argument(
            "txarray: samples per symbol must be a positive integer "
            "(sample_rate * symbol_periods / carrier_freq)");
    return static_cast<std::size_t>(rounded);
}

std::vector<ComplexWaveform> multiplex_excitations(const RingArray& array,
                                                   const ChannelPlan& plan,
                                                   const BitMatrix& payload,
                                                   double sample_rate,
                                                   double t0) {
    if (payload.n_channels != plan.charges.size())
        throw std::invalid_argument(
            "txarray: payload channel count does not match the plan");
    check_aliasing(plan.charges, array.n);

    const std::size_t spp = samples_per_symbol(plan, sample_rate);
    const std::size_t n_samples = payload.n_symbols * spp;
    const std::size_t n_ch = plan.charges.size();
    const double omega = kTwoPi * plan.carrier_freq;

    std::vector<ComplexWaveform> out(array.n);
    for (auto& w : out) {
        w.samples.assign(n_samples, cdouble{0.0, 0.0});
        w.sample_rate = sample_rate;
        w.t0 = t0;
    }

    // Sample times snap to the absolute sample index (t0 is a whole number
    // of sample periods in chunked runs), so block boundaries can never
    // shift the carrier phase.
    const auto base = static_cast<long long>(std::llround(t0 * sample_rate));

    // Per-symbol the baseband is constant, so element i's samples are
    // (sum_p b_p*A_p*e^{i l_p theta_i}) * e^{i w t} within each symbol.
    std::vector<cdouble> spatial(n_ch);
    for (std::size_t i = 0; i < array.n; ++i) {
        const double theta = array.angles[i];
        for (std::size_t p = 0; p < n_ch; ++p)
            spatial[p] = plan.amplitudes[p] *
                         std::polar(1.0, plan.charges[p] * theta);
        auto& samples = out[i].samples;
        for (std::size_t m = 0; m < payload.n_symbols; ++m) {
            cdouble drive{0.0, 0.0};
            for (std::size_t p = 0; p < n_ch; ++p)
                if (payload.at(p, m))
                    drive += spatial[p];
            if (drive == cdouble{0.0, 0.0})
                continue;
            for (std::size_t j = m * spp; j < (m + 1) * spp; ++j) {
                const double t =
                    static_cast<double>(base + static_cast<long long>(j)) /
                    sample_rate;
                samples[j] = drive * std::polar(1.0, omega * t);
            }
        }
    }
    return out;
}

BitMatrix frame_build(const BitMatrix& payload) {
    if (payload.n_channels == 0 || payload.n_symbols == 0)
        throw std::invalid_argument("txarray: payload must have >= 1 symbol");

    BitMatrix framed = BitMatrix::zeros(payload.n_channels,
                                        payload.n_symbols + kPreamble.size());
    framed.preamble_len = kPreamble.size();
    for (std::size_t ch = 0; ch < payload.n_channels; ++ch) {
        for (std::size_t m = 0; m < kPreamble.size(); ++m)
            framed.at(ch, m) = kPreamble[m];
        for (std::size_t m = 0; m < payload.n_symbols; ++m)
            framed.at(ch, kPreamble.size() + m) = payload.at(ch, m);
    }
    return framed;
}

} // namespace oam::txarray
