#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace evscan {

/// Dense C x H x W feature volume, channel-major / row-major storage.
/// Values are held as doubles in memory; the on-disk container (EVXGRID1)
/// stores 32-bit floats.
struct FeatureVolume {
    int channels = 0;
    int height = 0;
    int width = 0;
    std::vector<double> values;  // size channels*height*width

    FeatureVolume() = default;
    FeatureVolume(int c, int h, int w)
        : channels(c), height(h), width(w),
          values(static_cast<std::size_t>(c) * h * w, 0.0) {}

    std::size_t index(int c, int y, int x) const {
        return (static_cast<std::size_t>(c) * height + y) * width + x;
    }
    double at(int c, int y, int x) const { return values[index(c, y, x)]; }
    double& at(int c, int y, int x) { return values[index(c, y, x)]; }
    std::size_t cell_count() const { return values.size(); }

    bool same_shape(const FeatureVolume& o) const {
        return channels == o.channels && height == o.height && width == o.width;
    }
};

// EVXGRID1 container: 8-byte magic "EVXGRID1", then planes, height, width as
// 32-bit little-endian unsigned, then planes*height*width IEEE-754 binary32
// little-endian values in plane-major, row-major order.
void write_evxgrid(std::ostream& out, int planes, int height, int width,
                   const std::vector<double>& values);
FeatureVolume read_evxgrid(std::istream& in);

void write_evxgrid_file(const std::string& path, int planes, int height,
                        int width, const std::vector<double>& values);
FeatureVolume read_evxgrid_file(const std::string& path);

/// CSV inspection dump, one "plane,y,x,value" row per cell (header included).
void write_volume_csv(std::ostream& out, const FeatureVolume& vol);

}  // namespace evscan
