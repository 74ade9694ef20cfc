#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace qimp {

/// 8-bit grayscale raster, row-major.
struct GrayImage {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> pixels;

    GrayImage() = default;
    GrayImage(int r, int c, std::uint8_t fill = 0)
        : rows(r), cols(c), pixels(static_cast<std::size_t>(r) * c, fill) {}

    std::uint8_t at(int r, int c) const { return pixels[static_cast<std::size_t>(r) * cols + c]; }
    std::uint8_t& at(int r, int c) { return pixels[static_cast<std::size_t>(r) * cols + c]; }

    bool operator==(const GrayImage&) const = default;
};

struct RgbImage {
    std::array<GrayImage, 3> channels;  // R, G, B
    int rows() const { return channels[0].rows; }
    int cols() const { return channels[0].cols; }
};

/// Binary PGM (P5), maxval 255.
GrayImage load_pgm(const std::string& path);
void save_pgm(const GrayImage& img, const std::string& path);

/// Binary PPM (P6), maxval 255, split into three gray channels.
RgbImage load_ppm(const std::string& path);
void save_ppm(const RgbImage& img, const std::string& path);

/// Synthetic rasters for experiments (no external assets required).
GrayImage gen_gradient(int rows, int cols);
GrayImage gen_checker(int rows, int cols, int cell = 8);
GrayImage gen_noise(int rows, int cols, std::uint64_t seed);

}  // namespace qimp
