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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "oam/types.hpp"

namespace oam::codec {

struct GrayImage {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::uint8_t> pixels; // row-major, 0..255

    std::uint8_t at(std::size_t x, std::size_t y) const {
        return pixels[y * width + x];
    }
};

enum class BitOrder {
    msb_first, // channel 1 carries the most significant bit
    lsb_first,
};

// One channel per bit plane: channel k's symbol m is bit k of pixel m.
// Requires exactly 8 channels.
BitMatrix image_to_bits(const GrayImage& img, std::size_t n_channels = 8,
                        BitOrder order = BitOrder::msb_first);

// Inverse of image_to_bits. Erased channels arrive as all-zero rows and
// simply contribute zero bits.
GrayImage bits_to_image(const BitMatrix& bits, std::size_t width,
                        std::size_t height,
                        BitOrder order = BitOrder::msb_first);

// Link-quality summary for one transmission.
struct LinkReport {
    std::vector<double> per_channel_ber;
    double aggregate_ber = 0.0;
    std::size_t bit_errors = 0;
    std::size_t total_bits = 0;
    std::size_t pixel_errors = 0; // symbols whose bit columns differ
    std::vector<std::size_t> erased_channels;
    double snr_db = 0.0; // +inf when noiseless
    std::string geometry;
    std::size_t spectral_efficiency_bits_per_symbol = 0;
    double runtime_seconds = 0.0;
};

// Per-channel and aggregate bit-error ratios plus the pixel error count.
LinkReport ber(const BitMatrix& sent, const BitMatrix& received);

// Binary PGM (P5, maxval 255) with tolerant header parsing.
GrayImage read_pgm(const std::string& path);
GrayImage read_pgm(std::istream& in);
void write_pgm(const GrayImage& img, const std::string& path);
void write_pgm(const GrayImage& img, std::ostream& out);

// Deterministic gradient-and-checker test pattern that exercises every
// bit plane; the bundled stand-in for an external test image.
GrayImage synthetic_image(std::size_t width, std::size_t height);

} // namespace oam::codec
