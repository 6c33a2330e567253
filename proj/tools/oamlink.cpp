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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oam/link.hpp"

namespace {

namespace fs = std::filesystem;
using oam::link::LinkConfig;

struct CliState {
    LinkConfig cfg;
    std::string amplitude_mode = "per-charge";
    std::string bit_order = "msb";
    std::string channel_model = "quasi-lg";
    std::string demux = "zf";
};

// Every LinkConfig key as a flag; the same names work in --config files.
void add_link_options(CLI::App& app, CliState& state) {
    LinkConfig& cfg = state.cfg;
    app.set_config("--config")->configurable(false);
    app.add_option("--carrier-freq", cfg.carrier_freq, "Carrier frequency, Hz")
        ->capture_default_str();
    app.add_option("--sound-speed", cfg.sound_speed, "Sound speed, m/s")
        ->capture_default_str();
    app.add_option("--elements", cfg.n_elements, "Transmitter ring elements")
        ->capture_default_str();
    app.add_option("--ring-radius-wl", cfg.ring_radius_wl,
                   "Ring radius, wavelengths")
        ->capture_default_str();
    app.add_option("--standoff-wl", cfg.standoff_wl,
                   "Receiver plane distance, wavelengths")
        ->capture_default_str();
    app.add_option("--waist-wl", cfg.waist_wl, "Beam waist, wavelengths")
        ->capture_default_str();
    app.add_option("--charges", cfg.charges, "OAM charges, comma separated")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--symbol-periods", cfg.symbol_periods,
                   "Carrier periods per symbol")
        ->capture_default_str();
    app.add_option("--samples-per-period", cfg.samples_per_period,
                   "Samples per carrier period")
        ->capture_default_str();
    app.add_option("--layout", cfg.layout,
                   "Receiver layout, (full|half)-<cols>x<rows>")
        ->capture_default_str();
    app.add_option("--snr-db", cfg.snr_db, "SNR in dB; inf = noiseless")
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "Noise seed")->capture_default_str();
    app.add_option("--image", cfg.image_path,
                   "Input PGM; empty = built-in 64x64 test pattern");
    app.add_option("--out-dir", cfg.out_dir, "Output directory")
        ->capture_default_str();
    app.add_option("--block-symbols", cfg.block_symbols,
                   "Symbols per processing block")
        ->capture_default_str();
    app.add_option("--amplitude-mode", state.amplitude_mode,
                   "per-charge or uniform")
        ->capture_default_str();
    app.add_option("--bit-order", state.bit_order, "msb or lsb")
        ->capture_default_str();
    app.add_option("--channel-model", state.channel_model,
                   "quasi-lg or monopole")
        ->capture_default_str();
    app.add_option("--demux", state.demux, "zf or spiral")
        ->capture_default_str();
}

void finalize(CliState& state) {
    state.cfg.amplitude_mode = oam::link::amplitude_mode_from(state.amplitude_mode);
    state.cfg.bit_order = oam::link::bit_order_from(state.bit_order);
    state.cfg.channel_model = oam::link::channel_model_from(state.channel_model);
    state.cfg.demux = oam::link::demux_mode_from(state.demux);
}

oam::codec::GrayImage load_image(const LinkConfig& cfg) {
    return cfg.image_path.empty() ? oam::codec::synthetic_image(64, 64)
                                  : oam::codec::read_pgm(cfg.image_path);
}

std::ofstream open_out(const fs::path& path) {
    fs::create_directories(path.parent_path().empty() ? "."
                                                      : path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot create '" + path.string() + "'");
    return out;
}

std::string charge_tag(const std::vector<int>& charges) {
    std::string tag;
    for (int l : charges)
        tag += (l >= 0 ? "+" : "") + std::to_string(l);
    return tag;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"oamlink: acoustic OAM multiplexing link simulator"};
    app.require_subcommand(1);

    CliState state;

    auto* run = app.add_subcommand(
        "run", "Transmit an image end to end and report link quality");
    add_link_options(*run, state);

    auto* snapshot = app.add_subcommand(
        "snapshot", "Export the pressure field over a transverse plane");
    add_link_options(*snapshot, state);
    std::vector<int> snap_charges;
    oam::link::SnapshotSpec snap_spec;
    snapshot->add_option("--snap-charges", snap_charges,
                         "Charges to drive (default: all configured)")
        ->delimiter(',');
    snapshot->add_option("--snap-pixels", snap_spec.pixels,
                         "Snapshot grid points per side")
        ->capture_default_str();
    snapshot->add_option("--snap-width-wl", snap_spec.width_wl,
                         "Snapshot plane width, wavelengths")
        ->capture_default_str();
    snapshot->add_option("--time", snap_spec.time_instant,
                         "Sampling instant, s")
        ->capture_default_str();

    auto* sweep_snr = app.add_subcommand(
        "sweep-snr", "BER over a list of SNR points and noise seeds");
    add_link_options(*sweep_snr, state);
    std::vector<double> snr_list;
    std::size_t seeds_per_point = 20;
    sweep_snr->add_option("--snr-list", snr_list,
                          "SNR points in dB (inf allowed)")
        ->delimiter(',')
        ->required();
    sweep_snr->add_option("--seeds-per-point", seeds_per_point,
                          "Noise seeds per SNR point")
        ->capture_default_str();

    auto* sweep_geometry = app.add_subcommand(
        "sweep-geometry", "Compare receiver layouts on the same link");
    add_link_options(*sweep_geometry, state);
    std::vector<std::string> layouts = {"full-8x8", "full-4x4", "half-4x2",
                                        "half-4x4"};
    sweep_geometry->add_option("--layouts", layouts, "Layout names")
        ->delimiter(',')
        ->capture_default_str();

    auto* check = app.add_subcommand(
        "check-limit", "Check charges against an n-element ring");
    add_link_options(*check, state);

    CLI11_PARSE(app, argc, argv);

    try {
        finalize(state);
        const LinkConfig& cfg = state.cfg;

        if (run->parsed()) {
            const auto res = oam::link::run_link_files(cfg);
            std::printf("aggregate BER %s (%zu/%zu bits, %zu pixel errors, "
                        "%zu erased channels) in %.2f s\n",
                        oam::link::format_double(res.report.aggregate_ber).c_str(),
                        res.report.bit_errors, res.report.total_bits,
                        res.report.pixel_errors,
                        res.report.erased_channels.size(),
                        res.report.runtime_seconds);
            std::printf("wrote %s/{sent.pgm,received.pgm,report.txt}\n",
                        cfg.out_dir.c_str());
        } else if (snapshot->parsed()) {
            const auto& charges =
                snap_charges.empty() ? cfg.charges : snap_charges;
            const auto snap = oam::link::snapshot_field(cfg, charges, snap_spec);
            const std::string stem = "snapshot_l" + charge_tag(charges);
            auto csv = open_out(fs::path(cfg.out_dir) / (stem + ".csv"));
            oam::link::write_snapshot_csv(snap, csv);
            oam::codec::write_pgm(
                oam::link::snapshot_to_image(snap),
                (fs::path(cfg.out_dir) / (stem + ".pgm")).string());
            std::printf("wrote %s/%s.{csv,pgm}\n", cfg.out_dir.c_str(),
                        stem.c_str());
        } else if (sweep_snr->parsed()) {
            const auto image = load_image(cfg);
            const auto rows =
                oam::link::sweep_snr(cfg, snr_list, seeds_per_point, image);
            auto csv = open_out(fs::path(cfg.out_dir) / "snr_sweep.csv");
            oam::link::write_snr_csv(rows, cfg.charges.size(), csv);
            std::printf("wrote %s/snr_sweep.csv (%zu rows)\n",
                        cfg.out_dir.c_str(), rows.size());
        } else if (sweep_geometry->parsed()) {
            const auto image = load_image(cfg);
            const auto rows = oam::link::sweep_geometry(cfg, layouts, image);
            auto csv = open_out(fs::path(cfg.out_dir) / "geometry_sweep.csv");
            oam::link::write_geometry_csv(rows, csv);
            for (const auto& row : rows)
                std::printf("%-12s %3zu rx  noiseless BER %s%s\n",
                            row.layout.c_str(), row.receivers,
                            oam::link::format_double(row.noiseless_ber).c_str(),
                            row.has_noisy
                                ? ("  noisy BER " +
                                   oam::link::format_double(row.noisy_ber))
                                      .c_str()
                                : "");
            std::printf("wrote %s/geometry_sweep.csv\n", cfg.out_dir.c_str());
        } else if (check->parsed()) {
            const auto verdicts =
                oam::link::check_channel_limit(cfg.n_elements, cfg.charges);
            for (const auto& v : verdicts)
                std::printf("%+d: %s%s\n", v.charge,
                            v.accepted ? "accepted" : "rejected - ",
                            v.reason.c_str());
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "oamlink: %s\n", e.what());
        return 1;
    }
    return 0;
}
