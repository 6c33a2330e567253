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

#include "oam/codec.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace oam::codec {

namespace {

std::size_t plane_bit(std::size_t channel, BitOrder order) {
    return order == BitOrder::msb_first ? 7 - channel : channel;
}

// Next header token, skipping whitespace and '#' comment lines.
std::string pgm_token(std::istream& in) {
    std::string tok;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {
            }
            continue;
        }
        if (std::isspace(c)) {
            if (!tok.empty())
                return tok;
            continue;
        }
        tok.push_back(static_cast<char>(c));
    }
    if (tok.empty())
        throw std::runtime_error("codec: truncated PGM header");
    return tok;
}

std::size_t pgm_number(std::istream& in, const char* what) {
    const std::string tok = pgm_token(in);
    std::size_t value = 0;
    for (char ch : tok) {
        if (ch < '0' || ch > '9')
            throw std::runtime_error(std::string("codec: malformed PGM ") + what);
        value = value * 10 + static_cast<std::size_t>(ch - '0');
    }
    return value;
}

} // namespace

BitMatrix image_to_bits(const GrayImage& img, std::size_t n_channels,
                        BitOrder order) {
    if (n_channels != 8)
        throw std::invalid_argument(
            "codec: image transport uses one channel per bit plane "
            "(exactly 8 channels)");
    if (img.pixels.size() != img.width * img.height)
        throw std::invalid_argument("codec: image pixel count mismatch");
    if (img.pixels.empty())
        throw std::invalid_argument("codec: empty image");

    BitMatrix m = BitMatrix::zeros(8, img.pixels.size());
    for (std::size_t ch = 0; ch < 8; ++ch) {
        const std::size_t bit = plane_bit(ch, order);
        for (std::size_t sym = 0; sym < img.pixels.size(); ++sym)
            m.at(ch, sym) = (img.pixels[sym] >> bit) & 1u;
    }
    return m;
}

GrayImage bits_to_image(const BitMatrix& bits, std::size_t width,
                        std::size_t height, BitOrder order) {
    if (bits.n_channels != 8)
        throw std::invalid_argument("codec: bits_to_image needs 8 channels");
    if (bits.n_symbols != width * height)
        throw std::invalid_argument(
            "codec: symbol count does not match image dimensions");

    GrayImage img;
    img.width = width;
    img.height = height;
    img.pixels.assign(width * height, 0);
    for (std::size_t ch = 0; ch < 8; ++ch) {
        const std::size_t bit = plane_bit(ch, order);
        for (std::size_t sym = 0; sym < bits.n_symbols; ++sym)
            if (bits.at(ch, sym))
                img.pixels[sym] |= static_cast<std::uint8_t>(1u << bit);
    }
    return img;
}

LinkReport ber(const BitMatrix& sent, const BitMatrix& received) {
    if (sent.n_channels != received.n_channels ||
        sent.n_symbols != received.n_symbols)
        throw std::invalid_argument("codec: BER needs matching dimensions");
    if (sent.n_channels == 0 || sent.n_symbols == 0)
        throw std::invalid_argument("codec: BER over empty matrices");

    LinkReport r;
    r.per_channel_ber.assign(sent.n_channels, 0.0);
    for (std::size_t ch = 0; ch < sent.n_channels; ++ch) {
        std::size_t errors = 0;
        for (std::size_t sym = 0; sym < sent.n_symbols; ++sym)
            errors += sent.at(ch, sym) != received.at(ch, sym);
        r.per_channel_ber[ch] =
            static_cast<double>(errors) / static_cast<double>(sent.n_symbols);
        r.bit_errors += errors;
    }
    r.total_bits = sent.n_channels * sent.n_symbols;
    r.aggregate_ber =
        static_cast<double>(r.bit_errors) / static_cast<double>(r.total_bits);
    for (std::size_t sym = 0; sym < sent.n_symbols; ++sym) {
        for (std::size_t ch = 0; ch < sent.n_channels; ++ch) {
            if (sent.at(ch, sym) != received.at(ch, sym)) {
                ++r.pixel_errors;
                break;
            }
        }
    }
    return r;
}

GrayImage read_pgm(std::istream& in) {
    if (pgm_token(in) != "P5")
        throw std::runtime_error("codec: not a binary PGM (magic must be P5)");
    const std::size_t width = pgm_number(in, "width");
    const std::size_t height = pgm_number(in, "height");
    const std::size_t maxval = pgm_number(in, "maxval");
    if (width == 0 || height == 0)
        throw std::runtime_error("codec: PGM with zero dimension");
    if (maxval != 255)
        throw std::runtime_error(
            "codec: unsupported PGM depth (maxval " + std::to_string(maxval) +
            "; only 255 is supported)");
    // the whitespace byte closing the maxval token separates header from
    // raster; the tokenizer has already consumed it

    GrayImage img;
    img.width = width;
    img.height = height;
    img.pixels.resize(width * height);
    in.read(reinterpret_cast<char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
    if (static_cast<std::size_t>(in.gcount()) != img.pixels.size())
        throw std::runtime_error("codec: truncated PGM raster");
    return img;
}

GrayImage read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("codec: cannot open '" + path + "'");
    return read_pgm(in);
}

void write_pgm(const GrayImage& img, std::ostream& out) {
    if (img.pixels.size() != img.width * img.height || img.pixels.empty())
        throw std::invalid_argument("codec: malformed image");
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              static_cast<std::streamsize>(img.pixels.size()));
    if (!out)
        throw std::runtime_error("codec: PGM write failed");
}

void write_pgm(const GrayImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("codec: cannot create '" + path + "'");
    write_pgm(img, out);
}

GrayImage synthetic_image(std::size_t width, std::size_t height) {
    if (width == 0 || height == 0)
        throw std::invalid_argument("codec: empty image dimensions");
    GrayImage img;
    img.width = width;
    img.height = height;
    img.pixels.resize(width * height);
    const double span = static_cast<double>(width + height - 2);
    for (std::size_t y = 0; y < height; ++y) {
        for (std::size_t x = 0; x < width; ++x) {
            const double g = span > 0.0
                                 ? 255.0 * static_cast<double>(x + y) / span
                                 : 0.0;
            auto v = static_cast<std::uint8_t>(std::lround(g));
            if (((x / 8) + (y / 8)) % 2 == 1)
                v = static_cast<std::uint8_t>(255 - v);
            img.pixels[y * width + x] = v;
        }
    }
    return img;
}

} // namespace oam::codec
