#include "evscan/locality.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "evscan/rng.hpp"

namespace evscan::locality {

using curves::CurveKind;
using curves::CurvePath;

SegmentStats segment_stats(const CurvePath& path) {
    if (path.points.size() < 2)
        throw std::invalid_argument("segment_stats requires at least 2 points");
    SegmentStats st;
    st.dimensionality = path.dims.depth > 1 ? 3 : 2;
    st.total_segments = static_cast<std::int64_t>(path.points.size()) - 1;
    for (std::size_t i = 1; i < path.points.size(); ++i) {
        const auto& a = path.points[i - 1];
        const auto& b = path.points[i];
        const std::int64_t dx = b.x - a.x;
        const std::int64_t dy = b.y - a.y;
        const std::int64_t dz = b.z - a.z;
        if (dx * dx + dy * dy + dz * dz > 1) ++st.jump_count;
        if (dx == 0) ++st.still_count_per_dim[0];
        if (dy == 0) ++st.still_count_per_dim[1];
        if (st.dimensionality == 3 && dz == 0) ++st.still_count_per_dim[2];
    }
    const std::int64_t denom = st.dimensionality * st.total_segments;
    std::int64_t stills = 0;
    for (int k = 0; k < st.dimensionality; ++k) stills += st.still_count_per_dim[k];
    st.jump_ratio = Ratio(st.jump_count, denom);
    st.still_ratio = Ratio(stills, denom);
    return st;
}

ClosedFormStats closed_form_stats(int n, int d, CurveKind kind) {
    if (n < 2) throw std::invalid_argument("closed_form_stats requires n >= 2");
    if (d != 2 && d != 3)
        throw std::invalid_argument("closed_form_stats requires d in {2,3}");
    std::int64_t pow_nd = 1;
    std::int64_t geo = 0;  // 1 + n + ... + n^(d-1)
    for (int i = 0; i < d; ++i) {
        geo += pow_nd;
        pow_nd *= n;
    }
    const std::int64_t segments = pow_nd - 1;
    const std::int64_t denom = static_cast<std::int64_t>(d) * segments;
    switch (kind) {
        case CurveKind::Reshape:
            return {Ratio(geo - d, denom), Ratio(d * pow_nd - n * geo, denom)};
        case CurveKind::Hilbert:
            return {Ratio(0), Ratio((d - 1) * segments, denom)};
        default:
            throw std::invalid_argument(
                "closed forms are defined for reshape and hilbert only");
    }
}

namespace {

struct PairScan {
    const std::vector<curves::CurvePoint>& pts;
    double inv_w, inv_h;
    double n_cells;
    SlrResult best;

    void consider(std::size_t i, std::size_t j) {
        const double dx = (pts[i].x - pts[j].x) * inv_w;
        const double dy = (pts[i].y - pts[j].y) * inv_h;
        const double r =
            (dx * dx + dy * dy) * n_cells / static_cast<double>(j - i);
        if (r > best.max_ratio) {
            best.max_ratio = r;
            best.argmax_pair = {static_cast<double>(i) / n_cells,
                                static_cast<double>(j) / n_cells};
        }
    }
};

}  // namespace

SlrResult empirical_slr(const CurvePath& path, std::uint64_t pair_budget) {
    if (path.dims.depth != 1)
        throw std::invalid_argument("empirical_slr is defined for 2D paths");
    if (path.points.size() < 2)
        throw std::invalid_argument("empirical_slr requires at least 2 points");

    const std::size_t n = path.points.size();
    PairScan scan{path.points, 1.0 / path.dims.width, 1.0 / path.dims.height,
                  static_cast<double>(n), {}};

    const bool exhaustive =
        static_cast<std::uint64_t>(n) * n <= pair_budget;
    if (exhaustive) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) scan.consider(i, j);
        return scan.best;
    }

    // stratified subset: maxima live at short linear gaps, so sweep every pair
    // at gaps 1..32 and geometrically spaced longer gaps, then add fixed-seed
    // random pairs up to the budget
    std::vector<std::size_t> gaps;
    for (std::size_t g = 1; g <= 32 && g < n; ++g) gaps.push_back(g);
    for (std::size_t g = 40; g < n; g = g + g / 3) gaps.push_back(g);
    std::uint64_t used = 0;
    for (std::size_t g : gaps) {
        for (std::size_t i = 0; i + g < n; ++i) scan.consider(i, i + g);
        used += n - g;
    }
    Rng rng(splitmix64(0x534c52));  // fixed stream, independent of inputs
    while (used < pair_budget) {
        const std::size_t i = static_cast<std::size_t>(draw_below(rng, n));
        const std::size_t j = static_cast<std::size_t>(draw_below(rng, n));
        if (i < j) scan.consider(i, j);
        else if (j < i) scan.consider(j, i);
        ++used;
    }
    return scan.best;
}

}  // namespace evscan::locality
