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

#include "oam/channel.hpp"

#include <cmath>
#include <cstring>
#include <numbers>
#include <stdexcept>

#include "oam/lgbeam.hpp"

namespace oam::channel {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

std::uint64_t fnv1a(std::uint64_t hash, const void* data, std::size_t size) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < size; ++i) {
        hash ^= bytes[i];
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::uint64_t hash_geometry(std::span<const Point> tx, std::span<const Point> rx,
                            double wavenumber) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    h = fnv1a(h, tx.data(), tx.size_bytes());
    h = fnv1a(h, rx.data(), rx.size_bytes());
    h = fnv1a(h, &wavenumber, sizeof(wavenumber));
    return h;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void check_uniform(const std::vector<ComplexWaveform>& waveforms) {
    if (waveforms.empty())
        throw std::invalid_argument("channel: no waveforms");
    const auto& first = waveforms.front();
    for (const auto& w : waveforms) {
        if (w.samples.size() != first.samples.size() ||
            w.sample_rate != first.sample_rate || w.t0 != first.t0)
            throw std::invalid_argument(
                "channel: waveforms must share sample count, rate and t0");
    }
}

} // namespace

TransferMatrix transfer_matrix(std::span<const Point> tx,
                               std::span<const Point> rx, double wavenumber) {
    if (tx.empty() || rx.empty())
        throw std::invalid_argument("channel: empty geometry");
    if (!(wavenumber > 0.0))
        throw std::invalid_argument("channel: wavenumber must be > 0");

    TransferMatrix m;
    m.n_rx = rx.size();
    m.n_tx = tx.size();
    m.gains.reserve(m.n_rx * m.n_tx);
    for (const auto& r : rx) {
        for (const auto& s : tx) {
            const double dx = r[0] - s[0];
            const double dy = r[1] - s[1];
            const double dz = r[2] - s[2];
            const double d = std::sqrt(dx * dx + dy * dy + dz * dz);
            if (!(d > 0.0))
                throw std::invalid_argument(
                    "channel: coincident tx/rx points make the propagation "
                    "singular");
            m.gains.push_back(std::polar(1.0 / (4.0 * kPi * d), wavenumber * d));
        }
    }
    m.geometry_hash = hash_geometry(tx, rx, wavenumber);
    return m;
}

TransferMatrix lg_transfer_matrix(const txarray::RingArray& array,
                                  std::span<const Point> rx, double beam_waist,
                                  double wavenumber, double standoff) {
    if (rx.empty())
        throw std::invalid_argument("channel: empty receiver geometry");
    if (!(beam_waist > 0.0))
        throw std::invalid_argument("channel: beam waist must be > 0");

    const std::size_t n = array.n;
    const long m_lo = -static_cast<long>((n - 1) / 2);
    const long m_hi = static_cast<long>(n / 2);

    TransferMatrix m;
    m.n_rx = rx.size();
    m.n_tx = n;
    m.gains.assign(m.n_rx * n, cdouble{0.0, 0.0});

    const cdouble axial = std::polar(1.0, wavenumber * standoff);
    std::vector<cdouble> mode_field(static_cast<std::size_t>(m_hi - m_lo) + 1);
    for (std::size_t r = 0; r < rx.size(); ++r) {
        const double rho = std::hypot(rx[r][0], rx[r][1]);
        const double theta = std::atan2(rx[r][1], rx[r][0]);
        for (long mm = m_lo; mm <= m_hi; ++mm) {
            lgbeam::LGMode mode;
            mode.charge = static_cast<int>(mm);
            mode.waist = beam_waist;
            mode.wavenumber = wavenumber;
            mode_field[static_cast<std::size_t>(mm - m_lo)] =
                lgbeam::amplitude(mode, rho, theta);
        }
        for (std::size_t s = 0; s < n; ++s) {
            cdouble g{0.0, 0.0};
            for (long mm = m_lo; mm <= m_hi; ++mm)
                g += mode_field[static_cast<std::size_t>(mm - m_lo)] *
                     std::polar(1.0, -static_cast<double>(mm) * array.angles[s]);
            m.gains[r * n + s] = g * axial / static_cast<double>(n);
        }
    }
    m.geometry_hash = hash_geometry(std::span<const Point>(array.positions), rx,
                                    wavenumber);
    m.geometry_hash = fnv1a(m.geometry_hash, &beam_waist, sizeof(beam_waist));
    m.geometry_hash = fnv1a(m.geometry_hash, &standoff, sizeof(standoff));
    return m;
}

std::vector<ComplexWaveform> propagate(const TransferMatrix& matrix,
                                       const std::vector<ComplexWaveform>& tx) {
    if (tx.size() != matrix.n_tx)
        throw std::invalid_argument(
            "channel: waveform count does not match matrix columns");
    check_uniform(tx);

    const std::size_t n_samples = tx.front().samples.size();
    std::vector<ComplexWaveform> out(matrix.n_rx);
    for (std::size_t r = 0; r < matrix.n_rx; ++r) {
        auto& w = out[r];
        w.sample_rate = tx.front().sample_rate;
        w.t0 = tx.front().t0;
        w.samples.assign(n_samples, cdouble{0.0, 0.0});
        // split real/imag so the accumulation vectorizes
        auto* acc = reinterpret_cast<double*>(w.samples.data());
        for (std::size_t s = 0; s < matrix.n_tx; ++s) {
            const cdouble g = matrix.at(r, s);
            const double gr = g.real(), gi = g.imag();
            const auto* in =
                reinterpret_cast<const double*>(tx[s].samples.data());
            for (std::size_t j = 0; j < n_samples; ++j) {
                const double ar = in[2 * j], ai = in[2 * j + 1];
                acc[2 * j] += gr * ar - gi * ai;
                acc[2 * j + 1] += gr * ai + gi * ar;
            }
        }
    }
    return out;
}

double mean_signal_power(const std::vector<ComplexWaveform>& waveforms) {
    check_uniform(waveforms);
    double acc = 0.0;
    std::size_t count = 0;
    for (const auto& w : waveforms) {
        for (const cdouble& v : w.samples)
            acc += std::norm(v);
        count += w.samples.size();
    }
    if (count == 0)
        throw std::invalid_argument("channel: waveforms carry no samples");
    return acc / static_cast<double>(count);
}

double noise_variance_for(double signal_power, double snr_db) {
    return signal_power / std::pow(10.0, snr_db / 10.0);
}

AwgnInjector::AwgnInjector(std::uint64_t seed, std::size_t n_rx,
                           double noise_variance)
    : component_sigma_(std::sqrt(noise_variance / 2.0)),
      variance_(noise_variance) {
    std::uint64_t state = seed;
    (void)splitmix64(state);
    streams_.reserve(n_rx);
    for (std::size_t r = 0; r < n_rx; ++r) {
        std::uint64_t derived = state ^ (r + 1);
        streams_.emplace_back(splitmix64(derived));
    }
}

void AwgnInjector::apply(std::vector<ComplexWaveform>& chunk) {
    if (chunk.size() != streams_.size())
        throw std::invalid_argument(
            "channel: chunk receiver count does not match the injector");
    for (std::size_t r = 0; r < chunk.size(); ++r) {
        auto& rng = streams_[r];
        for (cdouble& v : chunk[r].samples) {
            // Box-Muller on explicit 53-bit uniforms keeps the realization
            // identical across standard libraries.
            const double u1 =
                (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
            const double u2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            const double mag = std::sqrt(-2.0 * std::log(u1)) * component_sigma_;
            v += cdouble{mag * std::cos(kTwoPi * u2), mag * std::sin(kTwoPi * u2)};
        }
    }
}

std::vector<ComplexWaveform> add_awgn(std::vector<ComplexWaveform> rx,
                                      const NoiseSpec& spec) {
    if (!spec.enabled)
        return rx;
    if (rx.empty() || rx.front().samples.empty())
        throw std::invalid_argument("channel: add_awgn needs >= 1 rx sample");

    const double variance =
        noise_variance_for(mean_signal_power(rx), spec.snr_db);
    AwgnInjector injector(spec.seed, rx.size(), variance);
    injector.apply(rx);
    return rx;
}

} // namespace oam::channel
