#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include <boost/rational.hpp>

#include "evscan/curves.hpp"

namespace evscan::locality {

using Ratio = boost::rational<std::int64_t>;

/// Jump/Still segment statistics of a curve path. A segment is a consecutive
/// point pair; it is a Jump when the Euclidean distance exceeds 1 and a Still
/// in dimension k when coordinate k is unchanged. Ratios are normalized by
/// D * (cell_count - 1).
struct SegmentStats {
    int dimensionality = 2;  // 2 when depth == 1, else 3
    std::int64_t total_segments = 0;
    std::int64_t jump_count = 0;
    std::array<std::int64_t, 3> still_count_per_dim{0, 0, 0};
    Ratio jump_ratio{0};
    Ratio still_ratio{0};
};

SegmentStats segment_stats(const curves::CurvePath& path);

struct ClosedFormStats {
    Ratio jump_ratio{0};
    Ratio still_ratio{0};
};

/// The published closed forms for the jump/still proportions of the reshape
/// scan and the Hilbert scan on an N^D grid. Only Reshape and Hilbert kinds
/// are defined. Note: the reshape jump formula counts per-dimension wrap
/// events; for D = 3 this differs from the per-segment Euclidean count that
/// segment_stats measures (see tests, which pin both values).
ClosedFormStats closed_form_stats(int n, int d, curves::CurveKind kind);

struct SlrResult {
    double max_ratio = 0.0;
    std::pair<double, double> argmax_pair{0.0, 0.0};  // (t, tau), t < tau
};

/// Empirical space-to-linear ratio of a 2D path: the maximum over point pairs
/// of |p(t)-p(tau)|^2 / |t-tau|, with cell (i,j) of a WxH grid mapped to
/// ((i+0.5)/W, (j+0.5)/H) and curve parameter t = index / cell_count (each
/// cell covers an equal share of the unit parameter interval). All pairs are
/// enumerated when cell_count^2 <= pair_budget; otherwise a deterministic
/// stratified subset (geometrically spaced index gaps plus fixed-seed random
/// pairs) is used.
SlrResult empirical_slr(const curves::CurvePath& path,
                        std::uint64_t pair_budget = (1ull << 25));

}  // namespace evscan::locality
