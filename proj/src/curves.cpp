#include "evscan/curves.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace evscan::curves {

namespace {

int sgn(int v) { return (v > 0) - (v < 0); }

/// Axis-aligned span vector used by the generalized Hilbert recursion.
struct Vec {
    int x = 0, y = 0, z = 0;

    Vec operator+(const Vec& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec operator-(const Vec& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec operator-() const { return {-x, -y, -z}; }
    Vec half() const { return {x / 2, y / 2, z / 2}; }
    Vec unit() const { return {sgn(x), sgn(y), sgn(z)}; }
    int extent() const { return std::abs(x + y + z); }
};

/// Generalized Hilbert fill of the box spanned by (a, b, c) from origin p.
/// Mirrors the published generate3d recursion, including the even-step
/// preference and the wide/flat special splits.
void hilbert_fill(Vec p, Vec a, Vec b, Vec c, std::vector<CurvePoint>& out) {
    const int w = a.extent();
    const int h = b.extent();
    const int d = c.extent();

    const Vec da = a.unit();
    const Vec db = b.unit();
    const Vec dc = c.unit();

    // trivial row/column fills
    if (h == 1 && d == 1) {
        for (int i = 0; i < w; ++i, p = p + da) out.push_back({p.x, p.y, p.z});
        return;
    }
    if (w == 1 && d == 1) {
        for (int i = 0; i < h; ++i, p = p + db) out.push_back({p.x, p.y, p.z});
        return;
    }
    if (w == 1 && h == 1) {
        for (int i = 0; i < d; ++i, p = p + dc) out.push_back({p.x, p.y, p.z});
        return;
    }

    Vec a2 = a.half();
    Vec b2 = b.half();
    Vec c2 = c.half();

    // prefer even steps
    if ((a2.extent() % 2) && (w > 2)) a2 = a2 + da;
    if ((b2.extent() % 2) && (h > 2)) b2 = b2 + db;
    if ((c2.extent() % 2) && (d > 2)) c2 = c2 + dc;

    if (2 * w > 3 * h && 2 * w > 3 * d) {
        // wide case: split in w only
        hilbert_fill(p, a2, b, c, out);
        hilbert_fill(p + a2, a - a2, b, c, out);
    } else if (3 * h > 4 * d) {
        // do not split in d
        hilbert_fill(p, b2, c, a2, out);
        hilbert_fill(p + b2, a, b - b2, c, out);
        hilbert_fill(p + (a - da) + (b2 - db), -b2, c, -(a - a2), out);
    } else if (3 * d > 4 * h) {
        // do not split in h
        hilbert_fill(p, c2, a2, b, out);
        hilbert_fill(p + c2, a, b, c - c2, out);
        hilbert_fill(p + (a - da) + (c2 - dc), -c2, -(a - a2), b, out);
    } else {
        // regular case: split in all of w/h/d
        hilbert_fill(p, b2, c2, a2, out);
        hilbert_fill(p + b2, c, a2, b - b2, out);
        hilbert_fill(p + (b2 - db) + (c - dc), a, -b2, -(c - c2), out);
        hilbert_fill(p + (a - da) + b2 + (c - dc), -c, -(a - a2), b - b2, out);
        hilbert_fill(p + (a - da) + (b2 - db), -b2, c2, -(a - a2), out);
    }
}

bool is_power_of(int value, int base) {
    if (value < 1) return false;
    while (value % base == 0) value /= base;
    return value == 1;
}

}  // namespace

const char* to_string(CurveKind kind) {
    switch (kind) {
        case CurveKind::Hilbert: return "hilbert";
        case CurveKind::TransHilbert: return "trans-hilbert";
        case CurveKind::ZOrder: return "zorder";
        case CurveKind::Peano: return "peano";
        case CurveKind::Reshape: return "reshape";
    }
    return "?";
}

CurveKind curve_kind_from_string(const std::string& name) {
    std::string s = name;
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    std::erase(s, '_');
    std::erase(s, '-');
    if (s == "hilbert") return CurveKind::Hilbert;
    if (s == "transhilbert") return CurveKind::TransHilbert;
    if (s == "zorder" || s == "morton") return CurveKind::ZOrder;
    if (s == "peano") return CurveKind::Peano;
    if (s == "reshape" || s == "rowmajor") return CurveKind::Reshape;
    throw std::invalid_argument("unknown curve kind: " + name);
}

std::size_t GridDims::cell_count() const {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height) *
           static_cast<std::size_t>(depth);
}

void GridDims::validate() const {
    if (width < 1 || height < 1 || depth < 1)
        throw std::invalid_argument("grid dimensions must be >= 1");
    const unsigned long long total = 1ull * width * height;
    if (total > std::numeric_limits<std::size_t>::max() / static_cast<unsigned>(depth))
        throw std::invalid_argument("grid cell count overflows the index type");
}

std::uint32_t CurvePath::linear_index(std::size_t i) const {
    const CurvePoint& p = points[i];
    const std::size_t idx =
        (static_cast<std::size_t>(p.z) * dims.height + p.y) * dims.width + p.x;
    return static_cast<std::uint32_t>(idx);
}

bool CurvePath::is_bijection() const {
    const std::size_t n = dims.cell_count();
    if (points.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (const CurvePoint& p : points) {
        if (p.x < 0 || p.x >= dims.width || p.y < 0 || p.y >= dims.height ||
            p.z < 0 || p.z >= dims.depth)
            return false;
        const std::size_t idx =
            (static_cast<std::size_t>(p.z) * dims.height + p.y) * dims.width + p.x;
        if (seen[idx]) return false;
        seen[idx] = true;
    }
    return true;
}

int CurvePath::max_l1_step() const {
    int m = 0;
    for (std::size_t i = 1; i < points.size(); ++i) {
        const CurvePoint& a = points[i - 1];
        const CurvePoint& b = points[i];
        m = std::max(m, std::abs(a.x - b.x) + std::abs(a.y - b.y) +
                            std::abs(a.z - b.z));
    }
    return m;
}

CurvePath generate_hilbert(GridDims dims) {
    dims.validate();
    CurvePath path{dims, CurveKind::Hilbert, {}};
    path.points.reserve(dims.cell_count());
    const int w = dims.width, h = dims.height, d = dims.depth;
    // enter along the longest axis
    if (w >= h && w >= d)
        hilbert_fill({0, 0, 0}, {w, 0, 0}, {0, h, 0}, {0, 0, d}, path.points);
    else if (h >= w && h >= d)
        hilbert_fill({0, 0, 0}, {0, h, 0}, {w, 0, 0}, {0, 0, d}, path.points);
    else
        hilbert_fill({0, 0, 0}, {0, 0, d}, {w, 0, 0}, {0, h, 0}, path.points);
    return path;
}

CurvePath generate_trans_hilbert(GridDims dims) {
    dims.validate();
    CurvePath base = generate_hilbert({dims.height, dims.width, dims.depth});
    CurvePath path{dims, CurveKind::TransHilbert, std::move(base.points)};
    for (CurvePoint& p : path.points) std::swap(p.x, p.y);
    return path;
}

CurvePath generate_zorder(GridDims dims) {
    dims.validate();
    if (!is_power_of(dims.width, 2) || !is_power_of(dims.height, 2) ||
        !is_power_of(dims.depth, 2))
        throw std::invalid_argument("zorder requires power-of-two dimensions");

    const int sides[3] = {dims.width, dims.height, dims.depth};
    int bits[3] = {0, 0, 0};
    for (int a = 0; a < 3; ++a)
        while ((1 << bits[a]) < sides[a]) ++bits[a];

    // key-bit slots, least significant first: level 0 takes one bit from
    // x, then y, then z (skipping exhausted axes), then level 1, ...
    std::vector<int> slot_axis;
    const int max_bits = std::max({bits[0], bits[1], bits[2]});
    for (int level = 0; level < max_bits; ++level)
        for (int a = 0; a < 3; ++a)
            if (bits[a] > level) slot_axis.push_back(a);

    CurvePath path{dims, CurveKind::ZOrder, {}};
    const std::size_t total = dims.cell_count();
    path.points.reserve(total);
    for (std::size_t key = 0; key < total; ++key) {
        int coord[3] = {0, 0, 0};
        int level[3] = {0, 0, 0};
        std::size_t k = key;
        for (int axis : slot_axis) {
            coord[axis] |= static_cast<int>(k & 1u) << level[axis];
            ++level[axis];
            k >>= 1;
        }
        path.points.push_back({coord[0], coord[1], coord[2]});
    }
    return path;
}

CurvePath generate_peano(GridDims dims) {
    dims.validate();
    if (!is_power_of(dims.width, 3) || !is_power_of(dims.height, 3) ||
        !is_power_of(dims.depth, 3))
        throw std::invalid_argument("peano requires power-of-three dimensions");

    const int sides[3] = {dims.width, dims.height, dims.depth};
    int trits[3] = {0, 0, 0};
    for (int a = 0; a < 3; ++a) {
        int v = 1;
        while (v < sides[a]) {
            v *= 3;
            ++trits[a];
        }
    }

    // digit positions, most significant first: each level contributes one
    // base-3 digit per remaining axis, z first, x last.
    std::vector<int> pos_axis;
    const int max_trits = std::max({trits[0], trits[1], trits[2]});
    for (int level = 0; level < max_trits; ++level)
        for (int a = 2; a >= 0; --a)
            if (trits[a] > level) pos_axis.push_back(a);

    const std::size_t nd = pos_axis.size();
    const std::size_t total = dims.cell_count();
    CurvePath path{dims, CurveKind::Peano, {}};
    path.points.reserve(total);
    std::vector<int> digits(nd);
    for (std::size_t k = 0; k < total; ++k) {
        std::size_t kk = k;
        for (std::size_t i = nd; i-- > 0;) {
            digits[i] = static_cast<int>(kk % 3);
            kk /= 3;
        }
        // a digit is complemented when the sum of all earlier digits that
        // belong to other axes is odd
        int coord[3] = {0, 0, 0};
        int prefix_axis[3] = {0, 0, 0};
        int prefix_total = 0;
        for (std::size_t i = 0; i < nd; ++i) {
            const int a = pos_axis[i];
            int dgt = digits[i];
            if ((prefix_total - prefix_axis[a]) % 2 != 0) dgt = 2 - dgt;
            coord[a] = coord[a] * 3 + dgt;
            prefix_total += digits[i];
            prefix_axis[a] += digits[i];
        }
        path.points.push_back({coord[0], coord[1], coord[2]});
    }
    return path;
}

CurvePath generate_reshape(GridDims dims) {
    dims.validate();
    CurvePath path{dims, CurveKind::Reshape, {}};
    path.points.reserve(dims.cell_count());
    for (int z = 0; z < dims.depth; ++z)
        for (int y = 0; y < dims.height; ++y)
            for (int x = 0; x < dims.width; ++x) path.points.push_back({x, y, z});
    return path;
}

CurvePath generate(CurveKind kind, GridDims dims) {
    switch (kind) {
        case CurveKind::Hilbert: return generate_hilbert(dims);
        case CurveKind::TransHilbert: return generate_trans_hilbert(dims);
        case CurveKind::ZOrder: return generate_zorder(dims);
        case CurveKind::Peano: return generate_peano(dims);
        case CurveKind::Reshape: return generate_reshape(dims);
    }
    throw std::invalid_argument("unknown curve kind");
}

std::vector<double> serialize(const CurvePath& path, const FeatureVolume& volume) {
    if (volume.width != path.dims.width || volume.height != path.dims.height ||
        volume.channels != path.dims.depth)
        throw std::invalid_argument("serialize: volume dims do not match path dims");
    std::vector<double> seq;
    seq.reserve(path.size());
    for (const CurvePoint& p : path.points) seq.push_back(volume.at(p.z, p.y, p.x));
    return seq;
}

FeatureVolume deserialize(const CurvePath& path, const std::vector<double>& seq) {
    if (seq.size() != path.size())
        throw std::invalid_argument("deserialize: sequence length does not match path");
    FeatureVolume vol(path.dims.depth, path.dims.height, path.dims.width);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const CurvePoint& p = path.points[i];
        vol.at(p.z, p.y, p.x) = seq[i];
    }
    return vol;
}

void write_path_text(std::ostream& out, const CurvePath& path) {
    for (const CurvePoint& p : path.points)
        out << p.x << ' ' << p.y << ' ' << p.z << '\n';
}

void write_path_binary(std::ostream& out, const CurvePath& path) {
    if (path.dims.cell_count() > std::numeric_limits<std::uint32_t>::max())
        throw std::invalid_argument("binary export requires indices to fit 32 bits");
    for (std::size_t i = 0; i < path.size(); ++i) {
        const std::uint32_t v = path.linear_index(i);
        const unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                                    static_cast<unsigned char>((v >> 8) & 0xff),
                                    static_cast<unsigned char>((v >> 16) & 0xff),
                                    static_cast<unsigned char>((v >> 24) & 0xff)};
        out.write(reinterpret_cast<const char*>(b), 4);
    }
}

}  // namespace evscan::curves
