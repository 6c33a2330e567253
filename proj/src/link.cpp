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

#include "oam/link.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "oam/lgbeam.hpp"

namespace oam::link {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

BitMatrix slice_symbols(const BitMatrix& m, std::size_t s0, std::size_t s1) {
    BitMatrix out = BitMatrix::zeros(m.n_channels, s1 - s0);
    for (std::size_t ch = 0; ch < m.n_channels; ++ch)
        for (std::size_t k = s0; k < s1; ++k)
            out.at(ch, k - s0) = m.at(ch, k);
    return out;
}

// Mean squared received magnitude over the frame, computed exactly from
// the per-symbol fields: within a symbol the envelope is constant, so the
// sample mean equals the symbol mean.
double frame_signal_power(const std::vector<cdouble>& signatures,
                          std::size_t n_rx, const BitMatrix& framed) {
    const std::size_t n_ch = framed.n_channels;
    double acc = 0.0;
    for (std::size_t m = 0; m < framed.n_symbols; ++m) {
        for (std::size_t r = 0; r < n_rx; ++r) {
            cdouble field{0.0, 0.0};
            for (std::size_t q = 0; q < n_ch; ++q)
                if (framed.at(q, m))
                    field += signatures[r * n_ch + q];
            acc += std::norm(field);
        }
    }
    return acc / (static_cast<double>(framed.n_symbols) *
                  static_cast<double>(n_rx));
}

std::string join_charges(const std::vector<int>& charges) {
    std::string s;
    for (std::size_t i = 0; i < charges.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(charges[i]);
    }
    return s;
}

std::string charge_label(int charge) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%+d", charge);
    return buf;
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string to_string(ChannelModel m) {
    return m == ChannelModel::quasi_lg ? "quasi-lg" : "monopole";
}
std::string to_string(DemuxMode m) {
    return m == DemuxMode::zf ? "zf" : "spiral";
}
std::string to_string(txarray::AmplitudeMode m) {
    return m == txarray::AmplitudeMode::per_charge ? "per-charge" : "uniform";
}
std::string to_string(codec::BitOrder o) {
    return o == codec::BitOrder::msb_first ? "msb" : "lsb";
}

ChannelModel channel_model_from(const std::string& s) {
    if (s == "quasi-lg")
        return ChannelModel::quasi_lg;
    if (s == "monopole")
        return ChannelModel::monopole;
    throw std::invalid_argument("link: unknown channel model '" + s + "'");
}
DemuxMode demux_mode_from(const std::string& s) {
    if (s == "zf")
        return DemuxMode::zf;
    if (s == "spiral")
        return DemuxMode::spiral;
    throw std::invalid_argument("link: unknown demux mode '" + s + "'");
}
txarray::AmplitudeMode amplitude_mode_from(const std::string& s) {
    if (s == "per-charge")
        return txarray::AmplitudeMode::per_charge;
    if (s == "uniform")
        return txarray::AmplitudeMode::uniform;
    throw std::invalid_argument("link: unknown amplitude mode '" + s + "'");
}
codec::BitOrder bit_order_from(const std::string& s) {
    if (s == "msb")
        return codec::BitOrder::msb_first;
    if (s == "lsb")
        return codec::BitOrder::lsb_first;
    throw std::invalid_argument("link: unknown bit order '" + s + "'");
}

namespace {

// Exact per-channel signatures under the modal channel: the mode field
// itself, so null-core zeros are exact and dead channels are detected
// exactly (the matrix route leaves ~1e-15 residue on the axis).
std::vector<cdouble> lg_direct_signatures(const LinkConfig& cfg,
                                          const LinkSetup& setup) {
    const std::size_t n_rx = setup.grid.positions.size();
    const std::size_t n_ch = setup.plan.charges.size();
    const cdouble axial =
        std::polar(1.0, kTwoPi / cfg.wavelength() * cfg.standoff_m());
    std::vector<cdouble> sig(n_rx * n_ch);
    for (std::size_t q = 0; q < n_ch; ++q) {
        lgbeam::LGMode mode;
        mode.charge = setup.plan.charges[q];
        mode.waist = cfg.waist_m();
        mode.wavenumber = kTwoPi / cfg.wavelength();
        for (std::size_t r = 0; r < n_rx; ++r)
            sig[r * n_ch + q] =
                setup.plan.amplitudes[q] *
                lgbeam::amplitude(mode, setup.grid.radius[r],
                                  setup.grid.azimuth[r]) *
                axial;
    }
    return sig;
}

} // namespace

LinkSetup build_setup(const LinkConfig& cfg) {
    if (!(cfg.carrier_freq > 0.0))
        throw std::invalid_argument("link: carrier-freq must be > 0");
    if (!(cfg.sound_speed > 0.0))
        throw std::invalid_argument("link: sound-speed must be > 0");
    if (cfg.samples_per_period < 4)
        throw std::invalid_argument(
            "link: samples-per-period must be >= 4 (carrier undersampled)");
    if (cfg.block_symbols < 1)
        throw std::invalid_argument("link: block-symbols must be >= 1");

    const double lam = cfg.wavelength();
    const double k = kTwoPi / lam;

    LinkSetup s;
    s.array = txarray::ring_positions(cfg.n_elements, cfg.ring_radius_m());
    s.plan = txarray::make_channel_plan(s.array, cfg.charges, cfg.waist_m(),
                                        cfg.carrier_freq, cfg.symbol_periods,
                                        cfg.amplitude_mode);
    s.grid = rxarray::grid_positions(rxarray::parse_layout(cfg.layout, lam),
                                     cfg.standoff_m());
    if (cfg.channel_model == ChannelModel::monopole)
        s.matrix = channel::transfer_matrix(s.array.positions, s.grid.positions, k);
    else
        s.matrix = channel::lg_transfer_matrix(s.array, s.grid.positions,
                                               cfg.waist_m(), k, cfg.standoff_m());
    if (cfg.demux == DemuxMode::zf) {
        const auto sig = cfg.channel_model == ChannelModel::quasi_lg
                             ? lg_direct_signatures(cfg, s)
                             : channel_signatures(s);
        s.weights = rxarray::zf_weights(sig, s.grid.positions.size(),
                                        cfg.charges.size());
    } else {
        s.weights = rxarray::spiral_weights(s.grid, cfg.charges);
    }
    return s;
}

std::vector<cdouble> channel_signatures(const LinkSetup& setup) {
    const std::size_t n_rx = setup.matrix.n_rx;
    const std::size_t n_tx = setup.matrix.n_tx;
    const std::size_t n_ch = setup.plan.charges.size();

    std::vector<cdouble> drive(n_tx);
    std::vector<cdouble> sig(n_rx * n_ch);
    for (std::size_t q = 0; q < n_ch; ++q) {
        for (std::size_t s = 0; s < n_tx; ++s)
            drive[s] = setup.plan.amplitudes[q] *
                       std::polar(1.0, setup.plan.charges[q] *
                                           setup.array.angles[s]);
        for (std::size_t r = 0; r < n_rx; ++r) {
            cdouble acc{0.0, 0.0};
            for (std::size_t s = 0; s < n_tx; ++s)
                acc += setup.matrix.at(r, s) * drive[s];
            sig[r * n_ch + q] = acc;
        }
    }
    return sig;
}

RunResult run_link(const LinkConfig& cfg, const codec::GrayImage& image) {
    const auto t_start = std::chrono::steady_clock::now();
    if (cfg.charges.size() != 8)
        throw std::invalid_argument(
            "link: image transport needs exactly 8 channels (one per bit "
            "plane); got " + std::to_string(cfg.charges.size()));

    const LinkSetup setup = build_setup(cfg);
    const BitMatrix payload = codec::image_to_bits(image, 8, cfg.bit_order);
    const BitMatrix framed = txarray::frame_build(payload);
    const std::size_t spp =
        txarray::samples_per_symbol(setup.plan, cfg.sample_rate());
    const std::size_t n_rx = setup.grid.positions.size();
    const std::size_t n_ch = cfg.charges.size();
    const std::size_t total_syms = framed.n_symbols;
    const double fs = cfg.sample_rate();

    double noise_var = 0.0;
    std::optional<channel::AwgnInjector> injector;
    if (!cfg.noiseless()) {
        const double p_sig =
            frame_signal_power(channel_signatures(setup), n_rx, framed);
        noise_var = channel::noise_variance_for(p_sig, cfg.snr_db);
        injector.emplace(cfg.seed, n_rx, noise_var);
    }

    std::vector<cdouble> means(n_ch * total_syms);
    for (std::size_t s0 = 0; s0 < total_syms; s0 += cfg.block_symbols) {
        const std::size_t s1 = std::min(total_syms, s0 + cfg.block_symbols);
        const BitMatrix chunk = slice_symbols(framed, s0, s1);
        const double t0 = static_cast<double>(s0 * spp) / fs;
        auto tx = txarray::multiplex_excitations(setup.array, setup.plan,
                                                 chunk, fs, t0);
        auto rx = channel::propagate(setup.matrix, tx);
        if (injector)
            injector->apply(rx);
        for (std::size_t q = 0; q < n_ch; ++q) {
            const auto series =
                rxarray::project_series(rx, setup.weights.row(q),
                                        cfg.carrier_freq);
            const auto m = rxarray::symbol_means(series, spp, s1 - s0);
            std::copy(m.begin(), m.end(), means.begin() + q * total_syms + s0);
        }
    }

    rxarray::FrameSpec frame;
    frame.n_payload_symbols = payload.n_symbols;
    frame.samples_per_symbol = spp;
    auto decoded = rxarray::decide_from_symbol_means(means, cfg.charges, frame);

    RunResult res;
    res.received = codec::bits_to_image(decoded.payload, image.width,
                                        image.height, cfg.bit_order);
    res.report = codec::ber(payload, decoded.payload);
    res.report.snr_db = cfg.snr_db;
    res.report.geometry = cfg.layout;
    res.report.spectral_efficiency_bits_per_symbol = n_ch;
    for (std::size_t q = 0; q < decoded.channels.size(); ++q)
        if (decoded.channels[q].erased)
            res.report.erased_channels.push_back(q);
    res.channels = std::move(decoded.channels);
    res.noise_variance = noise_var;
    res.report.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      t_start)
            .count();
    return res;
}

RunResult run_link_files(const LinkConfig& cfg) {
    const codec::GrayImage image = cfg.image_path.empty()
                                       ? codec::synthetic_image(64, 64)
                                       : codec::read_pgm(cfg.image_path);
    RunResult res = run_link(cfg, image);

    namespace fs = std::filesystem;
    fs::create_directories(cfg.out_dir);
    codec::write_pgm(image, (fs::path(cfg.out_dir) / "sent.pgm").string());
    codec::write_pgm(res.received,
                     (fs::path(cfg.out_dir) / "received.pgm").string());
    std::ofstream report((fs::path(cfg.out_dir) / "report.txt").string(),
                         std::ios::binary);
    if (!report)
        throw std::runtime_error("link: cannot write report.txt");
    write_report(report, cfg, res);
    return res;
}

void write_report(std::ostream& out, const LinkConfig& cfg,
                  const RunResult& result) {
    out << "# oamlink run report\n";
    out << "carrier-freq=" << format_double(cfg.carrier_freq) << "\n";
    out << "sound-speed=" << format_double(cfg.sound_speed) << "\n";
    out << "elements=" << cfg.n_elements << "\n";
    out << "ring-radius-wl=" << format_double(cfg.ring_radius_wl) << "\n";
    out << "standoff-wl=" << format_double(cfg.standoff_wl) << "\n";
    out << "waist-wl=" << format_double(cfg.waist_wl) << "\n";
    out << "charges=" << join_charges(cfg.charges) << "\n";
    out << "symbol-periods=" << cfg.symbol_periods << "\n";
    out << "samples-per-period=" << cfg.samples_per_period << "\n";
    out << "layout=" << cfg.layout << "\n";
    out << "snr-db=" << format_double(cfg.snr_db) << "\n";
    out << "seed=" << cfg.seed << "\n";
    out << "image=" << cfg.image_path << "\n";
    out << "out-dir=" << cfg.out_dir << "\n";
    out << "block-symbols=" << cfg.block_symbols << "\n";
    out << "amplitude-mode=" << to_string(cfg.amplitude_mode) << "\n";
    out << "bit-order=" << to_string(cfg.bit_order) << "\n";
    out << "channel-model=" << to_string(cfg.channel_model) << "\n";
    out << "demux=" << to_string(cfg.demux) << "\n";
    out << "wavelength-m=" << format_double(cfg.wavelength()) << "\n";
    out << "sample-rate-hz=" << format_double(cfg.sample_rate()) << "\n";
    out << "baud-hz=" << format_double(cfg.baud()) << "\n";
    out << "samples-per-symbol=" << cfg.samples_per_symbol() << "\n";
    out << "noise-variance=" << format_double(result.noise_variance) << "\n";
    out << "spectral-efficiency-bits-per-symbol="
        << result.report.spectral_efficiency_bits_per_symbol << "\n";
    out << "aggregate-ber=" << format_double(result.report.aggregate_ber)
        << "\n";
    out << "bit-errors=" << result.report.bit_errors << "\n";
    out << "total-bits=" << result.report.total_bits << "\n";
    out << "pixel-errors=" << result.report.pixel_errors << "\n";
    out << "erased-channels=";
    for (std::size_t i = 0; i < result.report.erased_channels.size(); ++i) {
        if (i)
            out << ",";
        out << charge_label(cfg.charges[result.report.erased_channels[i]]);
    }
    out << "\n";
    for (std::size_t q = 0; q < cfg.charges.size(); ++q)
        out << "ber-l" << charge_label(cfg.charges[q]) << "="
            << format_double(result.report.per_channel_ber[q]) << "\n";
}

FieldSnapshot snapshot_field(const LinkConfig& cfg,
                             const std::vector<int>& charges_subset,
                             const SnapshotSpec& spec) {
    if (charges_subset.empty())
        throw std::invalid_argument("link: snapshot needs >= 1 charge");
    if (spec.pixels == 0)
        throw std::invalid_argument("link: snapshot grid is empty");
    if (!(spec.width_wl > 0.0))
        throw std::invalid_argument("link: snapshot width must be > 0");

    const double lam = cfg.wavelength();
    const double k = kTwoPi / lam;
    const auto array = txarray::ring_positions(cfg.n_elements, cfg.ring_radius_m());
    const auto plan = txarray::make_channel_plan(
        array, charges_subset, cfg.waist_m(), cfg.carrier_freq,
        cfg.symbol_periods, cfg.amplitude_mode);

    FieldSnapshot snap;
    snap.nx = snap.ny = spec.pixels;
    const double step = spec.width_wl * lam / static_cast<double>(spec.pixels);
    const auto coord = [&](std::size_t i) {
        return (static_cast<double>(i) -
                static_cast<double>(spec.pixels / 2)) *
               step;
    };
    snap.xs.resize(spec.pixels);
    snap.ys.resize(spec.pixels);
    for (std::size_t i = 0; i < spec.pixels; ++i)
        snap.xs[i] = snap.ys[i] = coord(i);

    std::vector<channel::Point> points;
    points.reserve(spec.pixels * spec.pixels);
    for (double y : snap.ys)
        for (double x : snap.xs)
            points.push_back({x, y, cfg.standoff_m()});

    channel::TransferMatrix matrix;
    if (cfg.channel_model == ChannelModel::monopole)
        matrix = channel::transfer_matrix(array.positions, points, k);
    else
        matrix = channel::lg_transfer_matrix(array, points, cfg.waist_m(), k,
                                             cfg.standoff_m());

    std::vector<cdouble> drive(array.n, cdouble{0.0, 0.0});
    const double omega = kTwoPi * cfg.carrier_freq;
    for (std::size_t s = 0; s < array.n; ++s)
        for (std::size_t p = 0; p < plan.charges.size(); ++p)
            drive[s] += plan.amplitudes[p] *
                        std::polar(1.0, omega * spec.time_instant +
                                            plan.charges[p] * array.angles[s]);

    snap.field.assign(points.size(), cdouble{0.0, 0.0});
    for (std::size_t r = 0; r < points.size(); ++r) {
        cdouble acc{0.0, 0.0};
        for (std::size_t s = 0; s < array.n; ++s)
            acc += matrix.at(r, s) * drive[s];
        snap.field[r] = acc;
        snap.max_magnitude = std::max(snap.max_magnitude, std::abs(acc));
    }
    return snap;
}

void write_snapshot_csv(const FieldSnapshot& snap, std::ostream& out) {
    out << "x,y,magnitude,phase\n";
    const double scale =
        snap.max_magnitude > 0.0 ? 1.0 / snap.max_magnitude : 0.0;
    for (std::size_t j = 0; j < snap.ny; ++j) {
        for (std::size_t i = 0; i < snap.nx; ++i) {
            const cdouble v = snap.field[j * snap.nx + i];
            out << format_double(snap.xs[i]) << ","
                << format_double(snap.ys[j]) << ","
                << format_double(std::abs(v) * scale) << ","
                << format_double(std::arg(v)) << "\n";
        }
    }
}

codec::GrayImage snapshot_to_image(const FieldSnapshot& snap) {
    codec::GrayImage img;
    img.width = snap.nx;
    img.height = snap.ny;
    img.pixels.resize(snap.nx * snap.ny);
    const double scale =
        snap.max_magnitude > 0.0 ? 255.0 / snap.max_magnitude : 0.0;
    for (std::size_t i = 0; i < snap.field.size(); ++i)
        img.pixels[i] = static_cast<std::uint8_t>(
            std::lround(std::abs(snap.field[i]) * scale));
    return img;
}

std::vector<SnrSweepRow> sweep_snr(const LinkConfig& cfg,
                                   const std::vector<double>& snr_list,
                                   std::size_t seeds_per_point,
                                   const codec::GrayImage& image) {
    if (snr_list.empty())
        throw std::invalid_argument("link: sweep needs >= 1 SNR point");
    if (seeds_per_point < 1)
        throw std::invalid_argument("link: sweep needs >= 1 seed per point");

    std::vector<SnrSweepRow> rows;
    rows.reserve(snr_list.size() * seeds_per_point);
    for (double snr : snr_list) {
        const std::size_t first = rows.size();
        double sum = 0.0;
        for (std::size_t i = 0; i < seeds_per_point; ++i) {
            LinkConfig run_cfg = cfg;
            run_cfg.snr_db = snr;
            run_cfg.seed = cfg.seed + i;
            const RunResult res = run_link(run_cfg, image);
            SnrSweepRow row;
            row.snr_db = snr;
            row.seed = run_cfg.seed;
            row.per_channel_ber = res.report.per_channel_ber;
            row.aggregate_ber = res.report.aggregate_ber;
            sum += row.aggregate_ber;
            rows.push_back(std::move(row));
        }
        const double mean = sum / static_cast<double>(seeds_per_point);
        for (std::size_t i = first; i < rows.size(); ++i)
            rows[i].mean_aggregate_ber = mean;
    }
    return rows;
}

void write_snr_csv(const std::vector<SnrSweepRow>& rows,
                   std::size_t n_channels, std::ostream& out) {
    out << "snr-db,seed";
    for (std::size_t q = 1; q <= n_channels; ++q)
        out << ",ber-ch" << q;
    out << ",aggregate-ber,mean-aggregate-ber\n";
    for (const auto& row : rows) {
        out << format_double(row.snr_db) << "," << row.seed;
        for (double b : row.per_channel_ber)
            out << "," << format_double(b);
        out << "," << format_double(row.aggregate_ber) << ","
            << format_double(row.mean_aggregate_ber) << "\n";
    }
}

namespace {

// Decision-statistic quality over the payload region against the sent bits.
void statistic_quality(const RunResult& res, const BitMatrix& sent,
                       std::size_t preamble_len, double& separation,
                       double& margin) {
    separation = 0.0;
    margin = 0.0;
    std::size_t live = 0;
    bool first_margin = true;
    for (std::size_t q = 0; q < res.channels.size(); ++q) {
        const auto& rec = res.channels[q];
        if (rec.erased)
            continue;
        double on_sum = 0.0, off_sum = 0.0;
        double on_min = 0.0, off_max = 0.0;
        std::size_t on_n = 0, off_n = 0;
        for (std::size_t m = 0; m < sent.n_symbols; ++m) {
            const double stat = rec.statistics[preamble_len + m];
            if (sent.at(q, m)) {
                on_sum += stat;
                on_min = on_n == 0 ? stat : std::min(on_min, stat);
                ++on_n;
            } else {
                off_sum += stat;
                off_max = off_n == 0 ? stat : std::max(off_max, stat);
                ++off_n;
            }
        }
        if (on_n == 0 || off_n == 0)
            continue;
        separation += on_sum / on_n - off_sum / off_n;
        const double ch_margin = on_min - off_max;
        margin = first_margin ? ch_margin : std::min(margin, ch_margin);
        first_margin = false;
        ++live;
    }
    if (live > 0)
        separation /= static_cast<double>(live);
}

} // namespace

std::vector<GeometryRow> sweep_geometry(const LinkConfig& cfg,
                                        const std::vector<std::string>& layouts,
                                        const codec::GrayImage& image) {
    if (layouts.empty())
        throw std::invalid_argument("link: geometry sweep needs >= 1 layout");

    const BitMatrix sent = codec::image_to_bits(image, 8, cfg.bit_order);
    std::vector<GeometryRow> rows;
    for (const auto& name : layouts) {
        GeometryRow row;
        row.layout = name;

        LinkConfig quiet = cfg;
        quiet.layout = name;
        quiet.snr_db = std::numeric_limits<double>::infinity();
        const RunResult clean = run_link(quiet, image);
        row.receivers = rxarray::grid_positions(
                            rxarray::parse_layout(name, cfg.wavelength()),
                            cfg.standoff_m())
                            .positions.size();
        row.noiseless_ber = clean.report.aggregate_ber;
        row.noiseless_erased = clean.report.erased_channels.size();
        statistic_quality(clean, sent, txarray::kPreamble.size(),
                          row.separation, row.margin);

        if (!cfg.noiseless()) {
            LinkConfig noisy = cfg;
            noisy.layout = name;
            const RunResult res = run_link(noisy, image);
            row.has_noisy = true;
            row.noisy_ber = res.report.aggregate_ber;
            row.noisy_erased = res.report.erased_channels.size();
            statistic_quality(res, sent, txarray::kPreamble.size(),
                              row.separation, row.margin);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_geometry_csv(const std::vector<GeometryRow>& rows,
                        std::ostream& out) {
    out << "layout,receivers,noiseless-ber,noiseless-erased,noisy-ber,"
           "noisy-erased,separation,margin\n";
    for (const auto& row : rows) {
        out << row.layout << "," << row.receivers << ","
            << format_double(row.noiseless_ber) << "," << row.noiseless_erased
            << ",";
        if (row.has_noisy)
            out << format_double(row.noisy_ber) << "," << row.noisy_erased;
        else
            out << ",";
        out << "," << format_double(row.separation) << ","
            << format_double(row.margin) << "\n";
    }
}

std::vector<ChargeVerdict> check_channel_limit(std::size_t n_elements,
                                               const std::vector<int>& charges) {
    if (n_elements < 3)
        throw std::invalid_argument("link: need >= 3 array elements");

    std::vector<ChargeVerdict> verdicts;
    std::vector<int> accepted;
    const long n = static_cast<long>(n_elements);
    for (int l : charges) {
        ChargeVerdict v;
        v.charge = l;
        if (l <= 0) {
            v.reason = "charge must be positive (the element phase step "
                       "l*theta_i must stay in (0, 2*pi])";
        } else {
            for (int prev : accepted) {
                if ((static_cast<long>(l) - prev) % n == 0) {
                    v.reason = "aliases accepted charge " +
                               charge_label(prev) + " on a " +
                               std::to_string(n_elements) + "-element ring";
                    break;
                }
            }
            if (v.reason.empty() && l > static_cast<int>(n_elements))
                v.reason = "exceeds the element count " +
                           std::to_string(n_elements);
        }
        v.accepted = v.reason.empty();
        if (v.accepted)
            accepted.push_back(l);
        verdicts.push_back(std::move(v));
    }
    return verdicts;
}

} // namespace oam::link
