#include "qimp/imagepipe/image.hpp"

#include <cstdio>
#include <fstream>
#include <random>

#include "qimp/simcore/errors.hpp"

namespace qimp {

namespace {

// Header fields may be separated by arbitrary whitespace and '#' comments.
int next_header_int(std::istream& in, const std::string& path) {
    while (true) {
        const int ch = in.peek();
        if (ch == EOF) throw FormatError(path + ": truncated header");
        if (std::isspace(ch)) {
            in.get();
            continue;
        }
        if (ch == '#') {
            std::string comment;
            std::getline(in, comment);
            continue;
        }
        int value = 0;
        if (!(in >> value)) throw FormatError(path + ": malformed header");
        return value;
    }
}

void read_header(std::istream& in, const std::string& path, const char* magic, int& rows,
                 int& cols) {
    char m0 = 0, m1 = 0;
    in.get(m0);
    in.get(m1);
    if (m0 != magic[0] || m1 != magic[1])
        throw FormatError(path + ": expected " + magic + " magic");
    cols = next_header_int(in, path);
    rows = next_header_int(in, path);
    const int maxval = next_header_int(in, path);
    if (maxval != 255) throw FormatError(path + ": only maxval 255 is supported");
    in.get();  // single whitespace before raster data
    if (rows < 1 || cols < 1) throw FormatError(path + ": bad dimensions");
}

}  // namespace

GrayImage load_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path);
    int rows = 0, cols = 0;
    read_header(in, path, "P5", rows, cols);
    GrayImage img(rows, cols);
    in.read(reinterpret_cast<char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
    if (in.gcount() != static_cast<std::streamsize>(img.pixels.size()))
        throw FormatError(path + ": truncated raster data");
    return img;
}

void save_pgm(const GrayImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write " + path);
    out << "P5\n" << img.cols << " " << img.rows << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              static_cast<std::streamsize>(img.pixels.size()));
}

RgbImage load_ppm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path);
    int rows = 0, cols = 0;
    read_header(in, path, "P6", rows, cols);
    std::vector<std::uint8_t> raw(static_cast<std::size_t>(rows) * cols * 3);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (in.gcount() != static_cast<std::streamsize>(raw.size()))
        throw FormatError(path + ": truncated raster data");

    RgbImage img;
    for (auto& ch : img.channels) ch = GrayImage(rows, cols);
    for (std::size_t i = 0; i < raw.size() / 3; ++i)
        for (int ch = 0; ch < 3; ++ch) img.channels[ch].pixels[i] = raw[3 * i + ch];
    return img;
}

void save_ppm(const RgbImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write " + path);
    out << "P6\n" << img.cols() << " " << img.rows() << "\n255\n";
    std::vector<std::uint8_t> raw(static_cast<std::size_t>(img.rows()) * img.cols() * 3);
    for (std::size_t i = 0; i < raw.size() / 3; ++i)
        for (int ch = 0; ch < 3; ++ch) raw[3 * i + ch] = img.channels[ch].pixels[i];
    out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
}

GrayImage gen_gradient(int rows, int cols) {
    GrayImage img(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            img.at(r, c) = static_cast<std::uint8_t>((r + c) * 255 / (rows + cols - 2));
    return img;
}

GrayImage gen_checker(int rows, int cols, int cell) {
    GrayImage img(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            img.at(r, c) = ((r / cell + c / cell) % 2) ? 255 : 0;
    return img;
}

GrayImage gen_noise(int rows, int cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(0, 255);
    GrayImage img(rows, cols);
    for (auto& p : img.pixels) p = static_cast<std::uint8_t>(dist(rng));
    return img;
}

}  // namespace qimp
