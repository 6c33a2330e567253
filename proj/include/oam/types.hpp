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
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace oam {

using cdouble = std::complex<double>;

// Uniformly sampled complex analytic signal (pressure-proportional,
// arbitrary linear units).
struct ComplexWaveform {
    std::vector<cdouble> samples;
    double sample_rate = 0.0; // Hz
    double t0 = 0.0;          // start time of samples[0], s

    double time_at(std::size_t i) const {
        return t0 + static_cast<double>(i) / sample_rate;
    }
};

// Per-channel bit streams, n_channels x n_symbols, row-major.
// preamble_len counts leading calibration symbols on every channel.
struct BitMatrix {
    std::size_t n_channels = 0;
    std::size_t n_symbols = 0;
    std::size_t preamble_len = 0;
    std::vector<std::uint8_t> bits; // values 0/1

    static BitMatrix zeros(std::size_t channels, std::size_t symbols) {
        BitMatrix m;
        m.n_channels = channels;
        m.n_symbols = symbols;
        m.bits.assign(channels * symbols, 0);
        return m;
    }

    std::uint8_t& at(std::size_t ch, std::size_t sym) {
        return bits[ch * n_symbols + sym];
    }
    std::uint8_t at(std::size_t ch, std::size_t sym) const {
        return bits[ch * n_symbols + sym];
    }
};

} // namespace oam
