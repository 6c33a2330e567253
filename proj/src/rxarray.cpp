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

#include "oam/rxarray.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace oam::rxarray {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> axis_samples(std::size_t count, double lo, double hi) {
    std::vector<double> v(count);
    if (count == 1) {
        v[0] = 0.0;
        return v;
    }
    for (std::size_t i = 0; i < count; ++i)
        v[i] = lo + (hi - lo) * static_cast<double>(i) /
                        static_cast<double>(count - 1);
    return v;
}

} // namespace

GridLayout parse_layout(std::string_view name, double wavelength) {
    GridLayout l;
    l.name = std::string(name);
    std::string_view rest;
    if (name.starts_with("full-")) {
        l.half = false;
        rest = name.substr(5);
    } else if (name.starts_with("half-")) {
        l.half = true;
        rest = name.substr(5);
    } else {
        throw std::invalid_argument("rxarray: unknown layout '" +
                                    std::string(name) +
                                    "' (expected (full|half)-<cols>x<rows>)");
    }
    unsigned cols = 0, rows = 0;
    char tail = 0;
    if (std::sscanf(std::string(rest).c_str(), "%ux%u%c", &cols, &rows, &tail) != 2 ||
        cols < 1 || rows < 1)
        throw std::invalid_argument("rxarray: unknown layout '" +
                                    std::string(name) +
                                    "' (expected (full|half)-<cols>x<rows>)");
    l.cols = cols;
    l.rows = rows;
    l.width = 1.5 * wavelength;
    l.height = 1.5 * wavelength;
    return l;
}

ReceiverGrid grid_positions(const GridLayout& layout, double standoff) {
    if (layout.cols < 1 || layout.rows < 1)
        throw std::invalid_argument("rxarray: layout needs >= 1 row and column");
    if (!(standoff > 0.0))
        throw std::invalid_argument("rxarray: standoff must be > 0");
    if ((layout.cols > 1 && !(layout.width > 0.0)) ||
        (layout.rows > 1 && !(layout.height > 0.0)))
        throw std::invalid_argument("rxarray: zero-area layout");

    const auto xs = axis_samples(layout.cols, -layout.width / 2, layout.width / 2);
    const auto ys = layout.half
                        ? axis_samples(layout.rows, 0.0, layout.height / 2)
                        : axis_samples(layout.rows, -layout.height / 2,
                                       layout.height / 2);

    ReceiverGrid g;
    g.layout = layout;
    g.standoff = standoff;
    g.positions.reserve(xs.size() * ys.size());
    for (double y : ys) {
        for (double x : xs) {
            g.positions.push_back({x, y, standoff});
            g.azimuth.push_back(std::atan2(y, x));
            g.radius.push_back(std::hypot(x, y));
        }
    }
    return g;
}

DemuxWeights spiral_weights(const ReceiverGrid& grid,
                            const std::vector<int>& charges) {
    DemuxWeights w;
    w.n_channels = charges.size();
    w.n_rx = grid.positions.size();
    w.w.reserve(w.n_channels * w.n_rx);
    for (int l : charges)
        for (double theta : grid.azimuth)
            w.w.push_back(std::polar(1.0, -l * theta));
    return w;
}

DemuxWeights zf_weights(const std::vector<cdouble>& signatures,
                        std::size_t n_rx, std::size_t n_channels) {
    if (signatures.size() != n_rx * n_channels)
        throw std::invalid_argument("rxarray: signature matrix size mismatch");
    if (n_rx == 0 || n_channels == 0)
        throw std::invalid_argument("rxarray: empty signature matrix");

    // Column norms identify channels the layout cannot see at all.
    std::vector<double> col_norm(n_channels, 0.0);
    double max_norm = 0.0;
    for (std::size_t r = 0; r < n_rx; ++r)
        for (std::size_t q = 0; q < n_channels; ++q)
            col_norm[q] += std::norm(signatures[r * n_channels + q]);
    for (double& nrm : col_norm) {
        nrm = std::sqrt(nrm);
        max_norm = std::max(max_norm, nrm);
    }

    DemuxWeights out;
    out.n_channels = n_channels;
    out.n_rx = n_rx;
    out.w.assign(n_channels * n_rx, cdouble{0.0, 0.0});
    if (max_norm == 0.0)
        return out; // nothing received anywhere: all channels dead

    std::vector<std::size_t> live;
    for (std::size_t q = 0; q < n_channels; ++q)
        if (col_norm[q] > 1e-12 * max_norm)
            live.push_back(q);
    const std::size_t k = live.size();
    if (k > n_rx)
        throw std::invalid_argument(
            "rxarray: more live channels than receivers; least squares "
            "is underdetermined");

    // Modified Gram-Schmidt QR of the live columns, then W = R^-1 Q^H.
    std::vector<cdouble> qmat(n_rx * k);
    for (std::size_t r = 0; r < n_rx; ++r)
        for (std::size_t j = 0; j < k; ++j)
            qmat[r * k + j] = signatures[r * n_channels + live[j]];
    std::vector<cdouble> rmat(k * k, cdouble{0.0, 0.0});
    for (std::size_t j = 0; j < k; ++j) {
        double nrm = 0.0;
        for (std::size_t r = 0; r < n_rx; ++r)
            nrm += std::norm(qmat[r * k + j]);
        nrm = std::sqrt(nrm);
        if (nrm <= 1e-14 * max_norm)
            throw std::invalid_argument(
                "rxarray: receiver layout cannot separate the requested "
                "charges (rank-deficient signatures)");
        rmat[j * k + j] = nrm;
        for (std::size_t r = 0; r < n_rx; ++r)
            qmat[r * k + j] /= nrm;
        for (std::size_t to = j + 1; to < k; ++to) {
            cdouble dot{0.0, 0.0};
            for (std::size_t r = 0; r < n_rx; ++r)
                dot += std::conj(qmat[r * k + j]) * qmat[r * k + to];
            rmat[j * k + to] = dot;
            for (std::size_t r = 0; r < n_rx; ++r)
                qmat[r * k + to] -= dot * qmat[r * k + j];
        }
    }

    // W = R^-1 Q^H. Row i needs row i of R^-1: solve x^T R = e_i^T by
    // forward substitution on R^T, then W_i = x^T Q^H.
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<cdouble> x(k, cdouble{0.0, 0.0});
        for (std::size_t jj = 0; jj < k; ++jj) {
            cdouble acc = jj == i ? cdouble{1.0, 0.0} : cdouble{0.0, 0.0};
            for (std::size_t t = 0; t < jj; ++t)
                acc -= rmat[t * k + jj] * x[t];
            x[jj] = acc / rmat[jj * k + jj];
        }
        for (std::size_t r = 0; r < n_rx; ++r) {
            cdouble acc{0.0, 0.0};
            for (std::size_t t = 0; t < k; ++t)
                acc += x[t] * std::conj(qmat[r * k + t]);
            out.w[live[i] * n_rx + r] = acc;
        }
    }
    return out;
}

std::vector<cdouble> project_series(const std::vector<ComplexWaveform>& rx,
                                    std::span<const cdouble> weights,
                                    double carrier_freq) {
    if (rx.size() != weights.size())
        throw std::invalid_argument(
            "rxarray: weight count does not match receiver count");
    if (rx.empty())
        throw std::invalid_argument("rxarray: no receiver waveforms");

    const std::size_t n_samples = rx.front().samples.size();
    for (const auto& w : rx)
        if (w.samples.size() != n_samples)
            throw std::invalid_argument("rxarray: rx waveform length mismatch");

    std::vector<cdouble> series(n_samples, cdouble{0.0, 0.0});
    auto* acc = reinterpret_cast<double*>(series.data());
    for (std::size_t r = 0; r < rx.size(); ++r) {
        const cdouble wr = weights[r];
        if (wr == cdouble{0.0, 0.0})
            continue;
        const double gr = wr.real(), gi = wr.imag();
        const auto* in = reinterpret_cast<const double*>(rx[r].samples.data());
        for (std::size_t j = 0; j < n_samples; ++j) {
            const double ar = in[2 * j], ai = in[2 * j + 1];
            acc[2 * j] += gr * ar - gi * ai;
            acc[2 * j + 1] += gr * ai + gi * ar;
        }
    }
    const double omega = kTwoPi * carrier_freq;
    const double fs = rx.front().sample_rate;
    // same sample-index time base as the transmitter, so chunked and
    // whole-frame processing downconvert with identical phases
    const auto base =
        static_cast<long long>(std::llround(rx.front().t0 * fs));
    for (std::size_t j = 0; j < n_samples; ++j) {
        const double t =
            static_cast<double>(base + static_cast<long long>(j)) / fs;
        series[j] *= std::polar(1.0, -omega * t);
    }
    return series;
}

std::vector<cdouble> demux_channel(const std::vector<ComplexWaveform>& rx,
                                   const ReceiverGrid& grid, int l_q,
                                   double carrier_freq) {
    if (rx.size() != grid.positions.size())
        throw std::invalid_argument(
            "rxarray: waveform count does not match grid point count");
    std::vector<cdouble> w(grid.positions.size());
    for (std::size_t r = 0; r < w.size(); ++r)
        w[r] = std::polar(1.0, -l_q * grid.azimuth[r]);
    return project_series(rx, w, carrier_freq);
}

std::vector<cdouble> symbol_means(std::span<const cdouble> series,
                                  std::size_t samples_per_symbol,
                                  std::size_t n_symbols) {
    if (samples_per_symbol == 0)
        throw std::invalid_argument("rxarray: samples_per_symbol must be >= 1");
    if (series.size() < samples_per_symbol * n_symbols)
        throw std::invalid_argument("rxarray: series too short for the frame");
    std::vector<cdouble> means(n_symbols);
    for (std::size_t m = 0; m < n_symbols; ++m) {
        cdouble acc{0.0, 0.0};
        for (std::size_t j = m * samples_per_symbol;
             j < (m + 1) * samples_per_symbol; ++j)
            acc += series[j];
        means[m] = acc / static_cast<double>(samples_per_symbol);
    }
    return means;
}

std::vector<double> symbol_statistics(std::span<const cdouble> series,
                                      std::size_t samples_per_symbol,
                                      std::size_t n_symbols) {
    const auto means = symbol_means(series, samples_per_symbol, n_symbols);
    std::vector<double> stats(means.size());
    for (std::size_t m = 0; m < means.size(); ++m)
        stats[m] = std::abs(means[m]);
    return stats;
}

double calibrate_threshold(std::span<const double> preamble_stats,
                           std::span<const std::uint8_t> preamble_bits) {
    if (preamble_stats.size() != preamble_bits.size())
        throw std::invalid_argument(
            "rxarray: preamble statistic/bit count mismatch");
    double on_sum = 0.0, off_sum = 0.0;
    std::size_t on_count = 0, off_count = 0;
    for (std::size_t m = 0; m < preamble_bits.size(); ++m) {
        if (preamble_bits[m]) {
            on_sum += preamble_stats[m];
            ++on_count;
        } else {
            off_sum += preamble_stats[m];
            ++off_count;
        }
    }
    if (on_count == 0 || off_count == 0)
        throw std::invalid_argument(
            "rxarray: degenerate preamble (needs both ones and zeros)");

    const double on_mean = on_sum / static_cast<double>(on_count);
    const double off_mean = off_sum / static_cast<double>(off_count);
    const double threshold = 0.5 * (on_mean + off_mean);
    if (!(on_mean > off_mean) || !(threshold > 0.0))
        throw CalibrationError(
            "rxarray: preamble statistics do not separate marks from spaces");
    return threshold;
}

DecisionRecord demodulate_ook(std::span<const cdouble> series,
                              std::size_t samples_per_symbol,
                              std::size_t n_symbols, double threshold) {
    DecisionRecord rec;
    rec.statistics = symbol_statistics(series, samples_per_symbol, n_symbols);
    rec.threshold = threshold;
    rec.bits.resize(n_symbols);
    for (std::size_t m = 0; m < n_symbols; ++m)
        rec.bits[m] = rec.statistics[m] >= threshold ? 1 : 0;
    return rec;
}

DecodedFrame decide_from_symbol_means(const std::vector<cdouble>& means,
                                      const std::vector<int>& charges,
                                      const FrameSpec& frame) {
    const std::size_t n_ch = charges.size();
    const std::size_t n_sym = frame.n_symbols();
    if (means.size() != n_ch * n_sym)
        throw std::invalid_argument("rxarray: symbol-mean matrix size mismatch");
    const std::size_t p_len = frame.preamble_bits.size();

    DecodedFrame out;
    out.payload = BitMatrix::zeros(n_ch, frame.n_payload_symbols);
    out.channels.resize(n_ch);
    for (std::size_t q = 0; q < n_ch; ++q) {
        DecisionRecord& rec = out.channels[q];
        rec.charge = charges[q];
        rec.statistics.resize(n_sym);
        for (std::size_t m = 0; m < n_sym; ++m)
            rec.statistics[m] = std::abs(means[q * n_sym + m]);
        try {
            rec.threshold = calibrate_threshold(
                std::span(rec.statistics).first(p_len), frame.preamble_bits);
        } catch (const CalibrationError&) {
            rec.erased = true;
            rec.threshold = 0.0;
            rec.bits.assign(frame.n_payload_symbols, 0);
            continue;
        }
        rec.bits.resize(frame.n_payload_symbols);
        for (std::size_t m = 0; m < frame.n_payload_symbols; ++m) {
            rec.bits[m] = rec.statistics[p_len + m] >= rec.threshold ? 1 : 0;
            out.payload.at(q, m) = rec.bits[m];
        }
    }
    return out;
}

DecodedFrame decide_frame(const std::vector<ComplexWaveform>& rx,
                          const ReceiverGrid& grid,
                          const txarray::ChannelPlan& plan,
                          const FrameSpec& frame, const DemuxWeights& weights) {
    const DemuxWeights& w =
        weights.w.empty() ? spiral_weights(grid, plan.charges) : weights;
    if (w.n_rx != rx.size() || w.n_channels != plan.charges.size())
        throw std::invalid_argument("rxarray: weight matrix shape mismatch");

    const std::size_t n_sym = frame.n_symbols();
    std::vector<cdouble> means(plan.charges.size() * n_sym);
    for (std::size_t q = 0; q < plan.charges.size(); ++q) {
        const auto series = project_series(rx, w.row(q), plan.carrier_freq);
        const auto m = symbol_means(series, frame.samples_per_symbol, n_sym);
        std::copy(m.begin(), m.end(), means.begin() + q * n_sym);
    }
    return decide_from_symbol_means(means, plan.charges, frame);
}

} // namespace oam::rxarray
