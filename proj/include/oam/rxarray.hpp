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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oam/txarray.hpp"
#include "oam/types.hpp"

namespace oam::rxarray {

// Receiver grid shape. Full layouts centre the scan area on the beam axis,
// half layouts cover the y >= 0 half only. width/height give the full-area
// extents; a half layout spans y in [0, height/2].
struct GridLayout {
    std::string name;
    std::size_t cols = 0;
    std::size_t rows = 0;
    double width = 0.0;  // m
    double height = 0.0; // m
    bool half = false;
};

// Parses "(full|half)-<cols>x<rows>" over the standard 1.5x1.5 wavelength
// scan area, e.g. full-8x8, full-4x4, half-4x2, half-16x4.
GridLayout parse_layout(std::string_view name, double wavelength);

// Receiver points on the plane z = standoff, with cached polar coordinates.
struct ReceiverGrid {
    GridLayout layout;
    double standoff = 0.0;
    std::vector<std::array<double, 3>> positions;
    std::vector<double> azimuth; // atan2(y, x) per point
    std::vector<double> radius;  // hypot(x, y) per point
};

ReceiverGrid grid_positions(const GridLayout& layout, double standoff);

// One spatial projection per channel: weights[q][r] applied to receiver r.
struct DemuxWeights {
    std::size_t n_channels = 0;
    std::size_t n_rx = 0;
    std::vector<cdouble> w; // row-major [channel][rx]

    std::span<const cdouble> row(std::size_t ch) const {
        return {w.data() + ch * n_rx, n_rx};
    }
};

// The plain inverse-spiral-phase projection e^{-i*l_q*theta_r} per charge.
DemuxWeights spiral_weights(const ReceiverGrid& grid,
                            const std::vector<int>& charges);

// Least-squares (zero-forcing) rows of pinv(signatures), where
// signatures[r*n_channels + q] is the noiseless field of channel q at
// receiver r. Channels whose signature is numerically zero get zero
// weights (they surface later as calibration failures).
DemuxWeights zf_weights(const std::vector<cdouble>& signatures,
                        std::size_t n_rx, std::size_t n_channels);

// Weighted spatial projection followed by coherent downconversion:
// D(t) = (sum_r w_r * p_r(t)) * e^{-i*w*t}.
std::vector<cdouble> project_series(const std::vector<ComplexWaveform>& rx,
                                    std::span<const cdouble> weights,
                                    double carrier_freq);

// Inverse-spiral-phase demultiplexing of one charge:
// D_q(t) = sum_r p_r(t) e^{-i*l_q*theta_r} e^{-i*w*t}.
std::vector<cdouble> demux_channel(const std::vector<ComplexWaveform>& rx,
                                   const ReceiverGrid& grid, int l_q,
                                   double carrier_freq);

// |mean| of the series over each symbol's samples.
std::vector<double> symbol_statistics(std::span<const cdouble> series,
                                      std::size_t samples_per_symbol,
                                      std::size_t n_symbols);

// Per-symbol complex means (the statistic before taking magnitudes);
// lets chunked pipelines accumulate decisions without keeping the series.
std::vector<cdouble> symbol_means(std::span<const cdouble> series,
                                  std::size_t samples_per_symbol,
                                  std::size_t n_symbols);

// Raised when the preamble statistics cannot produce a usable threshold;
// decide_frame turns this into a channel erasure.
class CalibrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Midpoint between the mean statistic over preamble one-symbols and the
// mean over preamble zero-symbols. The preamble pattern must contain both
// symbol values; a non-separating or non-positive midpoint throws
// CalibrationError.
double calibrate_threshold(std::span<const double> preamble_stats,
                           std::span<const std::uint8_t> preamble_bits);

struct DecisionRecord {
    int charge = 0;
    std::vector<double> statistics; // per symbol, whole frame
    double threshold = 0.0;
    std::vector<std::uint8_t> bits; // decided payload bits
    bool erased = false;
};

// Threshold decision over the first n_symbols of the series.
DecisionRecord demodulate_ook(std::span<const cdouble> series,
                              std::size_t samples_per_symbol,
                              std::size_t n_symbols, double threshold);

// Frame structure the receiver assumes: preamble pattern, payload length
// and the symbol raster.
struct FrameSpec {
    std::vector<std::uint8_t> preamble_bits{txarray::kPreamble.begin(),
                                            txarray::kPreamble.end()};
    std::size_t n_payload_symbols = 0;
    std::size_t samples_per_symbol = 0;

    std::size_t n_symbols() const {
        return preamble_bits.size() + n_payload_symbols;
    }
};

struct DecodedFrame {
    BitMatrix payload; // erased channels all-zero
    std::vector<DecisionRecord> channels;
};

// Calibrate and decide every channel from per-symbol complex means
// (n_channels x frame.n_symbols, row-major). Calibration failures erase
// the channel instead of aborting.
DecodedFrame decide_from_symbol_means(const std::vector<cdouble>& means,
                                      const std::vector<int>& charges,
                                      const FrameSpec& frame);

// Full receive chain for one frame: project each plan charge, calibrate on
// the preamble, decide and strip it. Uses the given weights, or the plain
// spiral projection when weights are empty.
DecodedFrame decide_frame(const std::vector<ComplexWaveform>& rx,
                          const ReceiverGrid& grid,
                          const txarray::ChannelPlan& plan,
                          const FrameSpec& frame,
                          const DemuxWeights& weights = {});

} // namespace oam::rxarray
