#include "evscan/windowing.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace evscan::windowing {

namespace {

struct Band {
    int begin = 0;
    int end = 0;  // half-open
    bool empty() const { return begin >= end; }
};

/// Algorithm-2 bands over an extent of length n: (0..-s), (-s..-off),
/// (-off..end) when off > 0, else the whole extent.
std::vector<Band> offset_bands(int n, int s, int off) {
    if (off > 0) return {{0, n - s}, {n - s, n - off}, {n - off, n}};
    return {{0, n}};
}

FeatureVolume reflect_pad(const FeatureVolume& vol, int s) {
    const int pad_h = (s - vol.height % s) % s;
    const int pad_w = (s - vol.width % s) % s;
    if (pad_h == 0 && pad_w == 0) return vol;
    if (pad_h > vol.height - 1 || pad_w > vol.width - 1)
        throw std::invalid_argument("volume too small to reflect-pad to window size");
    FeatureVolume out(vol.channels, vol.height + pad_h, vol.width + pad_w);
    for (int c = 0; c < out.channels; ++c)
        for (int y = 0; y < out.height; ++y) {
            const int sy = y < vol.height ? y : 2 * vol.height - 2 - y;
            for (int x = 0; x < out.width; ++x) {
                const int sx = x < vol.width ? x : 2 * vol.width - 2 - x;
                out.at(c, y, x) = vol.at(c, sy, sx);
            }
        }
    return out;
}

/// Elementwise pairwise-summed mean of equally shaped volumes, consumed in
/// the given order.
FeatureVolume pairwise_mean(std::vector<FeatureVolume> items) {
    const std::size_t count = items.size();
    while (items.size() > 1) {
        std::size_t w = 0;
        for (std::size_t i = 0; i + 1 < items.size(); i += 2) {
            FeatureVolume& a = items[i];
            const FeatureVolume& b = items[i + 1];
            for (std::size_t k = 0; k < a.values.size(); ++k)
                a.values[k] += b.values[k];
            items[w++] = std::move(a);
        }
        if (items.size() % 2 == 1) items[w++] = std::move(items.back());
        items.resize(w);
    }
    FeatureVolume out = std::move(items.front());
    for (double& v : out.values) v /= static_cast<double>(count);
    return out;
}

}  // namespace

WindowOffset sample_offset(int s, Rng& rng) {
    if (s < 1) throw std::invalid_argument("window size must be >= 1");
    WindowOffset off;
    off.s = s;
    off.dh = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(s)));
    off.dw = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(s)));
    return off;
}

OffsetMask build_mask(int height, int width, const WindowOffset& off) {
    if (off.s < 1) throw std::invalid_argument("window size must be >= 1");
    if (off.s > height || off.s > width)
        throw std::invalid_argument("window size exceeds grid extent");
    if (off.dh < 0 || off.dh >= off.s || off.dw < 0 || off.dw >= off.s)
        throw std::invalid_argument("offset out of range");

    const auto rows = offset_bands(height, off.s, off.dh);
    const auto cols = offset_bands(width, off.s, off.dw);

    OffsetMask mask;
    mask.height = height;
    mask.width = width;
    mask.labels.assign(static_cast<std::size_t>(height) * width, 0);

    // raw counter in row-major band order, then compacted so present labels
    // are exactly 0..region_count-1 (a band is empty when height == s)
    std::vector<int> remap(rows.size() * cols.size(), -1);
    int cnt = 0;
    int next = 0;
    for (const Band& r : rows)
        for (const Band& c : cols) {
            if (!r.empty() && !c.empty() && remap[cnt] < 0) remap[cnt] = next++;
            for (int y = r.begin; y < r.end; ++y)
                for (int x = c.begin; x < c.end; ++x)
                    mask.labels[static_cast<std::size_t>(y) * width + x] = remap[cnt];
            ++cnt;
        }
    mask.region_count = next;
    return mask;
}

OffsetMask build_mask(int height, int width, int s, Rng& rng) {
    return build_mask(height, width, sample_offset(s, rng));
}

void write_mask_text(std::ostream& out, const OffsetMask& mask) {
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            if (x) out << ' ';
            out << mask.label(y, x);
        }
        out << '\n';
    }
}

WindowSet partition(const FeatureVolume& vol, const WindowOffset& off) {
    if (off.s < 1) throw std::invalid_argument("window size must be >= 1");
    if (off.dh < 0 || off.dh >= off.s || off.dw < 0 || off.dw >= off.s)
        throw std::invalid_argument("offset out of range");
    if (vol.cell_count() == 0) throw std::invalid_argument("empty volume");

    const FeatureVolume padded = reflect_pad(vol, off.s);

    WindowSet ws;
    ws.offset = off;
    ws.channels = vol.channels;
    ws.orig_height = vol.height;
    ws.orig_width = vol.width;
    ws.padded_height = padded.height;
    ws.padded_width = padded.width;
    ws.grid_h = padded.height / off.s;
    ws.grid_w = padded.width / off.s;
    ws.data.resize(static_cast<std::size_t>(ws.grid_h) * ws.grid_w *
                   ws.channels * off.s * off.s);

    std::size_t at = 0;
    for (int wy = 0; wy < ws.grid_h; ++wy)
        for (int wx = 0; wx < ws.grid_w; ++wx)
            for (int c = 0; c < ws.channels; ++c)
                for (int iy = 0; iy < off.s; ++iy)
                    for (int ix = 0; ix < off.s; ++ix) {
                        // cyclic shift by (-dh, -dw)
                        const int y = (wy * off.s + iy + off.dh) % padded.height;
                        const int x = (wx * off.s + ix + off.dw) % padded.width;
                        ws.data[at++] = padded.at(c, y, x);
                    }
    return ws;
}

FeatureVolume reassemble(const WindowSet& ws) {
    FeatureVolume padded(ws.channels, ws.padded_height, ws.padded_width);
    const int s = ws.offset.s;
    std::size_t at = 0;
    for (int wy = 0; wy < ws.grid_h; ++wy)
        for (int wx = 0; wx < ws.grid_w; ++wx)
            for (int c = 0; c < ws.channels; ++c)
                for (int iy = 0; iy < s; ++iy)
                    for (int ix = 0; ix < s; ++ix) {
                        const int y = (wy * s + iy + ws.offset.dh) % ws.padded_height;
                        const int x = (wx * s + ix + ws.offset.dw) % ws.padded_width;
                        padded.at(c, y, x) = ws.data[at++];
                    }
    if (ws.padded_height == ws.orig_height && ws.padded_width == ws.orig_width)
        return padded;
    FeatureVolume out(ws.channels, ws.orig_height, ws.orig_width);
    for (int c = 0; c < out.channels; ++c)
        for (int y = 0; y < out.height; ++y)
            for (int x = 0; x < out.width; ++x) out.at(c, y, x) = padded.at(c, y, x);
    return out;
}

namespace {

FeatureVolume average_over(const OffsetPipeline& pipeline, const FeatureVolume& vol,
                           std::vector<WindowOffset> offsets) {
    std::sort(offsets.begin(), offsets.end(),
              [](const WindowOffset& a, const WindowOffset& b) {
                  return a.dh != b.dh ? a.dh < b.dh : a.dw < b.dw;
              });
    std::vector<FeatureVolume> outs;
    outs.reserve(offsets.size());
    for (const WindowOffset& off : offsets) {
        FeatureVolume out = pipeline(vol, off);
        if (!out.same_shape(vol))
            throw std::invalid_argument("pipeline changed the volume shape");
        outs.push_back(std::move(out));
    }
    return pairwise_mean(std::move(outs));
}

}  // namespace

FeatureVolume mc_average(const OffsetPipeline& pipeline, const FeatureVolume& vol,
                         int s, int samples, std::uint64_t seed, SampleMode mode,
                         std::uint64_t layer) {
    if (s < 1) throw std::invalid_argument("window size must be >= 1");
    if (samples < 1) throw std::invalid_argument("sample count must be >= 1");
    Rng rng = make_layer_rng(seed, layer);

    std::vector<WindowOffset> offsets;
    if (mode == SampleMode::WithReplacement) {
        offsets.reserve(samples);
        for (int i = 0; i < samples; ++i) offsets.push_back(sample_offset(s, rng));
    } else {
        const int total = s * s;
        if (samples > total)
            throw std::invalid_argument(
                "without-replacement sampling needs samples <= s^2");
        std::vector<WindowOffset> all;
        all.reserve(total);
        for (int dh = 0; dh < s; ++dh)
            for (int dw = 0; dw < s; ++dw) all.push_back({dh, dw, s});
        for (int i = 0; i < samples; ++i) {
            const int j =
                i + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(total - i)));
            std::swap(all[i], all[j]);
        }
        offsets.assign(all.begin(), all.begin() + samples);
    }
    return average_over(pipeline, vol, std::move(offsets));
}

FeatureVolume full_enumeration(const OffsetPipeline& pipeline,
                               const FeatureVolume& vol, int s) {
    if (s < 1) throw std::invalid_argument("window size must be >= 1");
    std::vector<WindowOffset> offsets;
    offsets.reserve(static_cast<std::size_t>(s) * s);
    for (int dh = 0; dh < s; ++dh)
        for (int dw = 0; dw < s; ++dw) offsets.push_back({dh, dw, s});
    return average_over(pipeline, vol, std::move(offsets));
}

}  // namespace evscan::windowing
