#include "evscan/volume.hpp"

#include <cstring>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace evscan {

namespace {

constexpr char kMagic[8] = {'E', 'V', 'X', 'G', 'R', 'I', 'D', '1'};

void put_u32le(std::ostream& out, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                          static_cast<unsigned char>((v >> 8) & 0xff),
                          static_cast<unsigned char>((v >> 16) & 0xff),
                          static_cast<unsigned char>((v >> 24) & 0xff)};
    out.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32le(std::istream& in) {
    unsigned char b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    if (!in) throw std::runtime_error("EVXGRID1: truncated header");
    return static_cast<std::uint32_t>(b[0]) |
           (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) |
           (static_cast<std::uint32_t>(b[3]) << 24);
}

void put_f32le(std::ostream& out, float v) {
    std::uint32_t bits;
    std::memcpy(&bits, &v, 4);
    put_u32le(out, bits);
}

float get_f32le(std::istream& in) {
    std::uint32_t bits = get_u32le(in);
    float v;
    std::memcpy(&v, &bits, 4);
    return v;
}

}  // namespace

void write_evxgrid(std::ostream& out, int planes, int height, int width,
                   const std::vector<double>& values) {
    if (planes <= 0 || height <= 0 || width <= 0)
        throw std::invalid_argument("EVXGRID1: non-positive dimension");
    const std::size_t n = static_cast<std::size_t>(planes) * height * width;
    if (values.size() != n)
        throw std::invalid_argument("EVXGRID1: value count does not match dims");
    out.write(kMagic, 8);
    put_u32le(out, static_cast<std::uint32_t>(planes));
    put_u32le(out, static_cast<std::uint32_t>(height));
    put_u32le(out, static_cast<std::uint32_t>(width));
    for (double v : values) put_f32le(out, static_cast<float>(v));
    if (!out) throw std::runtime_error("EVXGRID1: write failed");
}

FeatureVolume read_evxgrid(std::istream& in) {
    char magic[8];
    in.read(magic, 8);
    if (!in || std::memcmp(magic, kMagic, 8) != 0)
        throw std::runtime_error("EVXGRID1: bad magic");
    const std::uint32_t planes = get_u32le(in);
    const std::uint32_t height = get_u32le(in);
    const std::uint32_t width = get_u32le(in);
    if (planes == 0 || height == 0 || width == 0)
        throw std::runtime_error("EVXGRID1: zero dimension");
    FeatureVolume vol(static_cast<int>(planes), static_cast<int>(height),
                      static_cast<int>(width));
    for (double& v : vol.values) {
        v = get_f32le(in);
        if (!in) throw std::runtime_error("EVXGRID1: truncated payload");
    }
    return vol;
}

void write_evxgrid_file(const std::string& path, int planes, int height,
                        int width, const std::vector<double>& values) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_evxgrid(out, planes, height, width, values);
}

FeatureVolume read_evxgrid_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    return read_evxgrid(in);
}

void write_volume_csv(std::ostream& out, const FeatureVolume& vol) {
    out << "plane,y,x,value\n";
    for (int c = 0; c < vol.channels; ++c)
        for (int y = 0; y < vol.height; ++y)
            for (int x = 0; x < vol.width; ++x)
                out << c << ',' << y << ',' << x << ','
                    << static_cast<float>(vol.at(c, y, x)) << '\n';
}

}  // namespace evscan
