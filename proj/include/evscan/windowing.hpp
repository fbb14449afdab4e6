#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "evscan/rng.hpp"
#include "evscan/volume.hpp"

namespace evscan::windowing {

struct WindowOffset {
    int dh = 0;  // row offset, in [0, s)
    int dw = 0;  // column offset, in [0, s)
    int s = 1;   // window size

    bool operator==(const WindowOffset&) const = default;
};

/// Draws (dh, dw) i.i.d. uniform over {0..s-1}^2; dh first.
WindowOffset sample_offset(int s, Rng& rng);

/// Region-label grid for a cyclically shifted window partition. Row bands are
/// [0, H-s), [H-s, H-dh), [H-dh, H) when dh > 0 (a single band otherwise),
/// likewise for columns; labels run in row-major band order and are compacted
/// so that every value 0..region_count-1 is present (a band can be empty when
/// H == s or W == s).
struct OffsetMask {
    int height = 0;
    int width = 0;
    int region_count = 0;
    std::vector<int> labels;  // row-major, size height*width

    int label(int y, int x) const { return labels[static_cast<std::size_t>(y) * width + x]; }
};

OffsetMask build_mask(int height, int width, const WindowOffset& off);
OffsetMask build_mask(int height, int width, int s, Rng& rng);

/// Text export: one row per line, labels separated by single spaces.
void write_mask_text(std::ostream& out, const OffsetMask& mask);

/// Volume partitioned into s x s windows after a cyclic shift by (-dh, -dw):
/// shifted(y, x) = original((y+dh) mod H, (x+dw) mod W). Windows are stored in
/// row-major window order; non-divisible inputs are reflect-padded (edge
/// excluded) on the bottom/right before shifting and cropped on reassembly.
struct WindowSet {
    WindowOffset offset;
    int channels = 0;
    int orig_height = 0;
    int orig_width = 0;
    int padded_height = 0;
    int padded_width = 0;
    int grid_h = 0;  // windows per column
    int grid_w = 0;  // windows per row
    // layout: [window][channel][wy][wx]
    std::vector<double> data;

    std::size_t window_count() const {
        return static_cast<std::size_t>(grid_h) * grid_w;
    }
    double* window(std::size_t w) {
        return data.data() + w * channels * offset.s * offset.s;
    }
    const double* window(std::size_t w) const {
        return data.data() + w * channels * offset.s * offset.s;
    }
};

WindowSet partition(const FeatureVolume& vol, const WindowOffset& off);
FeatureVolume reassemble(const WindowSet& ws);

/// A deterministic map applied to a volume under a given window offset.
using OffsetPipeline =
    std::function<FeatureVolume(const FeatureVolume&, const WindowOffset&)>;

enum class SampleMode { WithReplacement, WithoutReplacement };

/// Monte-Carlo estimate of the offset expectation: the arithmetic mean of
/// pipeline(vol, offset_i) over samples i.i.d. uniform offsets (or a
/// uniformly chosen subset when sampling without replacement). Sampled
/// offsets are reduced in canonical (dh, dw) order with pairwise summation,
/// so a without-replacement draw of all s^2 offsets reproduces
/// full_enumeration bit-exactly.
FeatureVolume mc_average(const OffsetPipeline& pipeline, const FeatureVolume& vol,
                         int s, int samples, std::uint64_t seed,
                         SampleMode mode = SampleMode::WithReplacement,
                         std::uint64_t layer = 0);

/// Exact expectation over all s^2 offsets.
FeatureVolume full_enumeration(const OffsetPipeline& pipeline,
                               const FeatureVolume& vol, int s);

}  // namespace evscan::windowing
