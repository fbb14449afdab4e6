#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace evscan::events {

/// One asynchronous brightness change.
struct Event {
    int x = 0;
    int y = 0;
    double t = 0.0;  // seconds
    int p = 1;       // polarity, -1 or +1
};

struct SensorDims {
    int width = 0;
    int height = 0;
};

struct ParseResult {
    std::vector<Event> events;
    std::optional<SensorDims> dims;       // from an optional "W H" header line
    std::size_t nonmonotonic_count = 0;   // timestamp inversions (flagged, kept)
    std::size_t first_nonmonotonic_line = 0;
};

/// Parses "t x y p" lines (whitespace separated); polarity 0 maps to -1.
/// An optional first line "W H" gives the sensor size. Malformed lines throw
/// std::runtime_error naming the line number.
ParseResult parse_events(std::istream& in);
ParseResult parse_events_file(const std::string& path);

/// Events of one frame window, time-sorted, with T_k <= t < s_k.
struct EventGroup {
    std::vector<Event> events;
    double window_start = 0.0;  // T_k
    double window_end = 0.0;    // s_k
};

struct GroupResult {
    std::vector<EventGroup> groups;
    std::size_t dropped_before = 0;  // t < s_0
    std::size_t dropped_after = 0;   // t >= s_last
};

/// Half-open binning: group k holds events with s_{k-1} <= t < s_k.
/// Boundaries must be strictly increasing (>= 2 values).
GroupResult group_events(const std::vector<Event>& events,
                         const std::vector<double>& frame_timestamps);

/// B x H x W polarity accumulation with bilinear temporal splatting.
struct VoxelGrid {
    int bins = 0;
    int height = 0;
    int width = 0;
    std::vector<double> values;  // bin-major, row-major

    VoxelGrid() = default;
    VoxelGrid(int b, int h, int w)
        : bins(b), height(h), width(w),
          values(static_cast<std::size_t>(b) * h * w, 0.0) {}

    std::size_t index(int b, int y, int x) const {
        return (static_cast<std::size_t>(b) * height + y) * width + x;
    }
    double at(int b, int y, int x) const { return values[index(b, y, x)]; }
    double& at(int b, int y, int x) { return values[index(b, y, x)]; }
    double mass() const;  // sum of all cells (64-bit accumulation)
};

/// Normalized timestamp t* = (B-1)(t - T_k)/(s_k - T_k); each event adds
/// p * max(0, 1 - |bin - t*|) to the two nearest integer bins at (x, y).
/// Throws on a zero-length window or an out-of-range pixel.
VoxelGrid voxelize(const EventGroup& group, int bins, int height, int width);

}  // namespace evscan::events
