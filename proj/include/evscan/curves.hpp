#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "evscan/volume.hpp"

namespace evscan::curves {

enum class CurveKind { Hilbert, TransHilbert, ZOrder, Peano, Reshape };

const char* to_string(CurveKind kind);
CurveKind curve_kind_from_string(const std::string& name);

struct GridDims {
    int width = 1;
    int height = 1;
    int depth = 1;  // 1 for 2D grids

    std::size_t cell_count() const;
    /// Throws std::invalid_argument on non-positive sides or index overflow.
    void validate() const;
    bool operator==(const GridDims&) const = default;
};

struct CurvePoint {
    int x = 0;
    int y = 0;
    int z = 0;
    bool operator==(const CurvePoint&) const = default;
};

/// Ordered traversal of every cell of a grid, exactly once.
struct CurvePath {
    GridDims dims;
    CurveKind kind = CurveKind::Reshape;
    std::vector<CurvePoint> points;

    std::size_t size() const { return points.size(); }
    /// Row-major linear index ((z*height + y)*width + x) of the i-th point.
    std::uint32_t linear_index(std::size_t i) const;
    /// True iff every cell appears exactly once.
    bool is_bijection() const;
    /// Largest L1 distance between consecutive points (0 for single-point paths).
    int max_l1_step() const;
};

/// Generalized Hilbert curve over arbitrary-sized grids (2D grids are depth-1
/// 3D grids). All consecutive steps are unit steps whenever every side is a
/// power of two; uneven sides use the even-step-preferring split.
CurvePath generate_hilbert(GridDims dims);

/// Hilbert curve of the x/y-swapped grid, with coordinates swapped back.
CurvePath generate_trans_hilbert(GridDims dims);

/// Morton order; x occupies the least-significant interleave slot, then y,
/// then z. Requires every side to be a power of two.
CurvePath generate_zorder(GridDims dims);

/// Peano curve (base-3 digit construction with parity complements).
/// Requires every side to be a power of three.
CurvePath generate_peano(GridDims dims);

/// Row-major traversal: z outermost, then y, x innermost.
CurvePath generate_reshape(GridDims dims);

CurvePath generate(CurveKind kind, GridDims dims);

/// Reads volume cells in path order. Volume axes map as width=W, height=H,
/// depth=channels; dims must match exactly.
std::vector<double> serialize(const CurvePath& path, const FeatureVolume& volume);

/// Exact inverse of serialize.
FeatureVolume deserialize(const CurvePath& path, const std::vector<double>& seq);

/// One "x y z" triple per line, in path order.
void write_path_text(std::ostream& out, const CurvePath& path);

/// 32-bit little-endian unsigned row-major linear indices, in path order.
void write_path_binary(std::ostream& out, const CurvePath& path);

}  // namespace evscan::curves
