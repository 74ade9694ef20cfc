#include "qimp/imagepipe/bitplane.hpp"

#include "qimp/simcore/errors.hpp"

namespace qimp {

std::array<BitPlane, 8> bit_slice(const GrayImage& img, const std::string& channel) {
    std::array<BitPlane, 8> planes;
    for (int d = 0; d < 8; ++d) planes[d] = BitPlane(img.rows, img.cols, d, channel);
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        const std::uint8_t v = img.pixels[i];
        for (int d = 0; d < 8; ++d) planes[d].bits[i] = (v >> d) & 1;
    }
    return planes;
}

GrayImage bit_reassemble(const std::array<BitPlane, 8>& planes) {
    const int rows = planes[0].rows, cols = planes[0].cols;
    for (const BitPlane& p : planes)
        if (p.rows != rows || p.cols != cols)
            throw StructuralError("bitplane shapes do not match");
    GrayImage img(rows, cols);
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        int v = 0;
        for (int d = 0; d < 8; ++d)
            if (planes[d].bits[i]) v |= 1 << d;
        img.pixels[i] = static_cast<std::uint8_t>(v);
    }
    return img;
}

BitPlane msb_plane(const GrayImage& img, const std::string& channel) {
    BitPlane p(img.rows, img.cols, 7, channel);
    for (std::size_t i = 0; i < img.pixels.size(); ++i) p.bits[i] = img.pixels[i] >> 7;
    return p;
}

namespace {

template <typename Grid>
std::vector<Tile2x2> tiles_of(const Grid& g) {
    if (g.rows % 2 != 0 || g.cols % 2 != 0)
        throw StructuralError("2x2 tiling requires even dimensions");
    std::vector<Tile2x2> out;
    out.reserve(static_cast<std::size_t>(g.rows / 2) * (g.cols / 2));
    for (int r = 0; r < g.rows; r += 2)
        for (int c = 0; c < g.cols; c += 2)
            out.push_back({r, c, {g.at(r, c), g.at(r, c + 1), g.at(r + 1, c), g.at(r + 1, c + 1)}});
    return out;
}

}  // namespace

std::vector<Tile2x2> tiles_2x2(const BitPlane& plane) { return tiles_of(plane); }
std::vector<Tile2x2> tiles_2x2(const GrayImage& img) { return tiles_of(img); }

void put_tile(BitPlane& plane, const Tile2x2& t) {
    plane.at(t.row0, t.col0) = t.v[0];
    plane.at(t.row0, t.col0 + 1) = t.v[1];
    plane.at(t.row0 + 1, t.col0) = t.v[2];
    plane.at(t.row0 + 1, t.col0 + 1) = t.v[3];
}

}  // namespace qimp
