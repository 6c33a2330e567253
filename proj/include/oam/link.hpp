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

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "oam/channel.hpp"
#include "oam/codec.hpp"
#include "oam/rxarray.hpp"
#include "oam/txarray.hpp"
#include "oam/types.hpp"

namespace oam::link {

enum class ChannelModel {
    quasi_lg, // non-diffracting modal propagation (default)
    monopole, // free-space point-source propagation
};

enum class DemuxMode {
    zf,     // model-matched least-squares projection (default)
    spiral, // plain inverse-spiral-phase sum
};

std::string to_string(ChannelModel m);
std::string to_string(DemuxMode m);
std::string to_string(txarray::AmplitudeMode m);
std::string to_string(codec::BitOrder o);
ChannelModel channel_model_from(const std::string& s);
DemuxMode demux_mode_from(const std::string& s);
txarray::AmplitudeMode amplitude_mode_from(const std::string& s);
codec::BitOrder bit_order_from(const std::string& s);

// Full experiment configuration. Defaults reproduce the reference setup:
// 20 elements on a 1-wavelength ring at 10 kHz, 2.5 kHz baud, charges
// +1..+8, 8x8 receiver grid over 1.5x1.5 wavelengths at 20 wavelengths.
struct LinkConfig {
    double carrier_freq = 10000.0; // Hz
    double sound_speed = 1500.0;   // m/s
    std::size_t n_elements = 20;
    double ring_radius_wl = 1.0; // wavelengths
    double standoff_wl = 20.0;   // wavelengths
    double waist_wl = 0.375;     // wavelengths; puts the |l|=8 ring at the
                                 // scan-area half width
    std::vector<int> charges = {1, 2, 3, 4, 5, 6, 7, 8};
    unsigned symbol_periods = 4;
    unsigned samples_per_period = 16;
    std::string layout = "full-8x8";
    double snr_db = std::numeric_limits<double>::infinity(); // inf = noiseless
    std::uint64_t seed = 1;
    std::string image_path; // empty = built-in 64x64 test pattern
    std::string out_dir = ".";
    std::size_t block_symbols = 1024;
    txarray::AmplitudeMode amplitude_mode = txarray::AmplitudeMode::per_charge;
    codec::BitOrder bit_order = codec::BitOrder::msb_first;
    ChannelModel channel_model = ChannelModel::quasi_lg;
    DemuxMode demux = DemuxMode::zf;

    double wavelength() const { return sound_speed / carrier_freq; }
    double sample_rate() const { return carrier_freq * samples_per_period; }
    double baud() const { return carrier_freq / symbol_periods; }
    std::size_t samples_per_symbol() const {
        return static_cast<std::size_t>(samples_per_period) * symbol_periods;
    }
    double ring_radius_m() const { return ring_radius_wl * wavelength(); }
    double standoff_m() const { return standoff_wl * wavelength(); }
    double waist_m() const { return waist_wl * wavelength(); }
    bool noiseless() const { return !std::isfinite(snr_db); }
};

// Everything derived from a config that both ends of the link share.
struct LinkSetup {
    txarray::RingArray array;
    txarray::ChannelPlan plan;
    rxarray::ReceiverGrid grid;
    channel::TransferMatrix matrix;
    rxarray::DemuxWeights weights;
};

LinkSetup build_setup(const LinkConfig& cfg);

// Noiseless per-channel receiver signatures under the setup's model:
// signatures[r*n_channels + q] is channel q's field at receiver r.
std::vector<cdouble> channel_signatures(const LinkSetup& setup);

struct RunResult {
    codec::LinkReport report;
    codec::GrayImage received;
    std::vector<rxarray::DecisionRecord> channels;
    double noise_variance = 0.0; // injected sigma^2 (0 when noiseless)
};

// One end-to-end image transmission:
// frame -> multiplex -> propagate -> noise -> decide -> image.
// Processing is chunked in blocks of cfg.block_symbols; the chunking is
// exact (fixed matrix per sample, per-receiver noise substreams).
RunResult run_link(const LinkConfig& cfg, const codec::GrayImage& image);

// Loads cfg.image_path (or the built-in pattern), runs the link and writes
// received.pgm, sent.pgm and report.txt under cfg.out_dir.
RunResult run_link_files(const LinkConfig& cfg);

// Config echo plus results as flat key=value text. Wall-clock runtime is
// deliberately not included so reports are byte-reproducible.
void write_report(std::ostream& out, const LinkConfig& cfg,
                  const RunResult& result);

struct SnapshotSpec {
    std::size_t pixels = 64;  // per side
    double width_wl = 6.0;    // plane extent, wavelengths
    double time_instant = 0.0;
};

struct FieldSnapshot {
    std::size_t nx = 0, ny = 0;
    std::vector<double> xs, ys;  // m; axis point always included
    std::vector<cdouble> field;  // row-major [y][x]
    double max_magnitude = 0.0;
};

// Pressure field over a transverse plane at the configured standoff while
// every charge in the subset transmits a mark symbol.
FieldSnapshot snapshot_field(const LinkConfig& cfg,
                             const std::vector<int>& charges_subset,
                             const SnapshotSpec& spec);

// CSV of x, y, normalized magnitude and phase; PGM of the magnitude
// normalized to the plane maximum.
void write_snapshot_csv(const FieldSnapshot& snap, std::ostream& out);
codec::GrayImage snapshot_to_image(const FieldSnapshot& snap);

struct SnrSweepRow {
    double snr_db = 0.0;
    std::uint64_t seed = 0;
    std::vector<double> per_channel_ber;
    double aggregate_ber = 0.0;
    double mean_aggregate_ber = 0.0; // over all seeds at this SNR
};

std::vector<SnrSweepRow> sweep_snr(const LinkConfig& cfg,
                                   const std::vector<double>& snr_list,
                                   std::size_t seeds_per_point,
                                   const codec::GrayImage& image);
void write_snr_csv(const std::vector<SnrSweepRow>& rows,
                   std::size_t n_channels, std::ostream& out);

struct GeometryRow {
    std::string layout;
    std::size_t receivers = 0;
    double noiseless_ber = 0.0;
    std::size_t noiseless_erased = 0;
    bool has_noisy = false;
    double noisy_ber = 0.0;
    std::size_t noisy_erased = 0;
    // decision-statistic quality of the noisy run when present, else of the
    // noiseless one: mean over channels of (on-mean - off-mean), and the
    // worst-case (min on - max off) margin
    double separation = 0.0;
    double margin = 0.0;
};

std::vector<GeometryRow> sweep_geometry(const LinkConfig& cfg,
                                        const std::vector<std::string>& layouts,
                                        const codec::GrayImage& image);
void write_geometry_csv(const std::vector<GeometryRow>& rows,
                        std::ostream& out);

struct ChargeVerdict {
    int charge = 0;
    bool accepted = false;
    std::string reason; // empty when accepted
};

// Applies the available-OAM constraint of an n-element ring: charges must
// be positive, at most n, and pairwise non-aliasing (mod n) with charges
// already accepted.
std::vector<ChargeVerdict> check_channel_limit(std::size_t n_elements,
                                               const std::vector<int>& charges);

// "%.9g" rendering used by every CSV/report writer.
std::string format_double(double v);

} // namespace oam::link
