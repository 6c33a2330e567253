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
#include <random>
#include <span>
#include <vector>

#include "oam/txarray.hpp"
#include "oam/types.hpp"

namespace oam::channel {

using Point = std::array<double, 3>;

// Complex gains from every transmitter to every receiver, plus a hash of
// the geometry that produced them.
struct TransferMatrix {
    std::size_t n_rx = 0;
    std::size_t n_tx = 0;
    std::vector<cdouble> gains; // row-major, [rx][tx]
    std::uint64_t geometry_hash = 0;

    cdouble at(std::size_t rx, std::size_t tx) const {
        return gains[rx * n_tx + tx];
    }
};

// Free-space monopole propagation: gain = exp(i*k*d)/(4*pi*d).
// Rejects coincident tx/rx points.
TransferMatrix transfer_matrix(std::span<const Point> tx,
                               std::span<const Point> rx, double wavenumber);

// Non-diffracting modal propagation: the drive's ring harmonics map to the
// corresponding source-plane LG patterns, evaluated at the receiver points
// and carried to the receiver plane with only the axial phase e^{i*k*z}.
// The representable harmonics are the n consecutive charges centred on 0.
TransferMatrix lg_transfer_matrix(const txarray::RingArray& array,
                                  std::span<const Point> rx, double beam_waist,
                                  double wavenumber, double standoff);

// Apply a transfer matrix sample-wise: rx_r(t) = sum_s gains[r][s]*tx_s(t).
std::vector<ComplexWaveform> propagate(const TransferMatrix& matrix,
                                       const std::vector<ComplexWaveform>& tx);

struct NoiseSpec {
    double snr_db = 20.0;
    std::uint64_t seed = 0;
    bool enabled = true;
};

// Mean squared magnitude over all receivers and samples.
double mean_signal_power(const std::vector<ComplexWaveform>& waveforms);

// Streams complex circular Gaussian noise of a fixed variance into
// successive waveform chunks. Each receiver consumes its own seed-derived
// substream in time order, so the realization is independent of chunk
// boundaries and of any parallel schedule.
class AwgnInjector {
public:
    AwgnInjector(std::uint64_t seed, std::size_t n_rx, double noise_variance);

    // Adds noise in place; chunk must have exactly n_rx waveforms and
    // successive calls must present samples in time order.
    void apply(std::vector<ComplexWaveform>& chunk);

    double noise_variance() const { return variance_; }

private:
    std::vector<std::mt19937_64> streams_;
    double component_sigma_;
    double variance_;
};

// Noise variance realizing snr_db against the given signal power.
double noise_variance_for(double signal_power, double snr_db);

// Adds white complex Gaussian noise calibrated so that
// 10*log10(P_sig/sigma^2) = spec.snr_db, with P_sig the mean squared
// magnitude over all receivers and the whole frame. Disabled spec is a
// bit-exact pass-through; identical seeds give identical realizations.
std::vector<ComplexWaveform> add_awgn(std::vector<ComplexWaveform> rx,
                                      const NoiseSpec& spec);

} // namespace oam::channel
