#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qimp/imagepipe/image.hpp"

namespace qimp {

/// One Boolean plane of an image: bit `plane_index` of every pixel
/// (7 = most significant). `channel` records slicing provenance.
struct BitPlane {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> bits;  // 0 / 1
    int plane_index = 7;
    std::string channel = "gray";

    BitPlane() = default;
    BitPlane(int r, int c, int plane = 7, std::string ch = "gray")
        : rows(r), cols(c), bits(static_cast<std::size_t>(r) * c, 0), plane_index(plane),
          channel(std::move(ch)) {}

    std::uint8_t at(int r, int c) const { return bits[static_cast<std::size_t>(r) * cols + c]; }
    std::uint8_t& at(int r, int c) { return bits[static_cast<std::size_t>(r) * cols + c]; }

    bool operator==(const BitPlane&) const = default;
};

/// 2x2 tile at (row0, col0); entries ordered (1,1),(1,2),(2,1),(2,2).
struct Tile2x2 {
    int row0 = 0;
    int col0 = 0;
    std::array<std::uint8_t, 4> v{};
};

/// Plane d of the result holds bit d of every pixel.
std::array<BitPlane, 8> bit_slice(const GrayImage& img, const std::string& channel = "gray");

/// Exact inverse of bit_slice.
GrayImage bit_reassemble(const std::array<BitPlane, 8>& planes);

BitPlane msb_plane(const GrayImage& img, const std::string& channel = "gray");

/// Row-major non-overlapping 2x2 tiles; dimensions must be even.
std::vector<Tile2x2> tiles_2x2(const BitPlane& plane);
std::vector<Tile2x2> tiles_2x2(const GrayImage& img);

/// Write tile values back at their coordinates.
void put_tile(BitPlane& plane, const Tile2x2& t);

}  // namespace qimp
