// evscan - space-filling-curve, event-voxel, window-offset and SSM-scan toolkit.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

#include "evscan/curves.hpp"
#include "evscan/events.hpp"
#include "evscan/locality.hpp"
#include "evscan/scan_block.hpp"
#include "evscan/ssm.hpp"
#include "evscan/volume.hpp"
#include "evscan/windowing.hpp"

namespace {

using namespace evscan;

curves::GridDims parse_dims(const std::string& spec) {
    curves::GridDims dims;
    char sep1 = 0, sep2 = 0;
    std::istringstream in(spec);
    if (!(in >> dims.width)) throw std::invalid_argument("bad --dims: " + spec);
    if (in >> sep1) {
        if (sep1 != 'x' && sep1 != 'X') throw std::invalid_argument("bad --dims: " + spec);
        if (!(in >> dims.height)) throw std::invalid_argument("bad --dims: " + spec);
        if (in >> sep2) {
            if (sep2 != 'x' && sep2 != 'X')
                throw std::invalid_argument("bad --dims: " + spec);
            if (!(in >> dims.depth)) throw std::invalid_argument("bad --dims: " + spec);
        }
    } else {
        dims.height = dims.width;
    }
    std::string rest;
    if (in >> rest) throw std::invalid_argument("bad --dims: " + spec);
    dims.validate();
    return dims;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::string fmt_double(double v) {
    std::ostringstream out;
    out << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
    return out.str();
}

std::ofstream open_out(const std::string& path, std::ios::openmode mode) {
    std::ofstream out(path, mode);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

std::string replace_extension(const std::string& path, const std::string& ext) {
    const std::size_t slash = path.find_last_of("/\\");
    const std::size_t dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path + ext;
    return path.substr(0, dot) + ext;
}

// ---------------------------------------------------------------- curve ----

struct CurveArgs {
    std::string kind = "hilbert";
    std::string dims = "8x8";
    std::string out;
    std::string format = "text";
};

int run_curve(const CurveArgs& args) {
    const curves::CurvePath path =
        curves::generate(curves::curve_kind_from_string(args.kind), parse_dims(args.dims));
    if (args.format == "text") {
        if (args.out.empty()) {
            curves::write_path_text(std::cout, path);
        } else {
            auto out = open_out(args.out, std::ios::out);
            curves::write_path_text(out, path);
        }
    } else if (args.format == "bin") {
        if (args.out.empty()) throw std::invalid_argument("--format bin requires --out");
        auto out = open_out(args.out, std::ios::binary);
        curves::write_path_binary(out, path);
    } else {
        throw std::invalid_argument("curve supports --format text|bin");
    }
    return 0;
}

// ------------------------------------------------------------- locality ----

struct LocalityArgs {
    std::string kinds = "hilbert,reshape";
    std::string sizes = "2,4,8,16";
    int d = 2;
    std::uint64_t slr_budget = 1ull << 25;
    std::string out;
};

void write_locality_csv(std::ostream& out, const LocalityArgs& args) {
    if (args.d != 2 && args.d != 3)
        throw std::invalid_argument("--dims must be 2 or 3");
    out << "kind,N,D,jump_ratio,still_ratio,slr\n";
    for (const std::string& kind_name : split_csv(args.kinds)) {
        const curves::CurveKind kind = curves::curve_kind_from_string(kind_name);
        for (const std::string& size_str : split_csv(args.sizes)) {
            const int n = std::stoi(size_str);
            curves::GridDims dims{n, n, args.d == 3 ? n : 1};
            const curves::CurvePath path = curves::generate(kind, dims);
            const locality::SegmentStats st = locality::segment_stats(path);
            out << curves::to_string(kind) << ',' << n << ',' << args.d << ','
                << fmt_double(boost::rational_cast<double>(st.jump_ratio)) << ','
                << fmt_double(boost::rational_cast<double>(st.still_ratio)) << ',';
            if (args.d == 2)
                out << fmt_double(locality::empirical_slr(path, args.slr_budget).max_ratio);
            out << '\n';
        }
    }
}

int run_locality(const LocalityArgs& args) {
    if (args.out.empty()) {
        write_locality_csv(std::cout, args);
    } else {
        auto out = open_out(args.out, std::ios::out);
        write_locality_csv(out, args);
    }
    return 0;
}

// ------------------------------------------------------------- voxelize ----

struct VoxelizeArgs {
    std::string input;
    int bins = 5;
    std::string dims;  // WxH override
    int frames = 1;
    double t0 = std::numeric_limits<double>::quiet_NaN();
    double t1 = std::numeric_limits<double>::quiet_NaN();
    std::string out;
    std::string format = "bin";
};

int run_voxelize(const VoxelizeArgs& args) {
    const events::ParseResult parsed = events::parse_events_file(args.input);

    int width = 0, height = 0;
    if (!args.dims.empty()) {
        const curves::GridDims d = parse_dims(args.dims);
        width = d.width;
        height = d.height;
    } else if (parsed.dims) {
        width = parsed.dims->width;
        height = parsed.dims->height;
    } else {
        // fall back to the event bounding box
        for (const events::Event& e : parsed.events) {
            width = std::max(width, e.x + 1);
            height = std::max(height, e.y + 1);
        }
        if (width == 0)
            throw std::invalid_argument("no header and no events: pass --dims WxH");
    }

    double t0 = args.t0, t1 = args.t1;
    if (std::isnan(t0) || std::isnan(t1)) {
        if (parsed.events.empty())
            throw std::invalid_argument("empty event file: pass --t0/--t1");
        double tmin = parsed.events.front().t, tmax = tmin;
        for (const events::Event& e : parsed.events) {
            tmin = std::min(tmin, e.t);
            tmax = std::max(tmax, e.t);
        }
        if (std::isnan(t0)) t0 = tmin;
        // half-open windows: nudge the end so the last event is included
        if (std::isnan(t1))
            t1 = std::nextafter(std::max(tmax, t0),
                                std::numeric_limits<double>::infinity());
    }
    if (!(t0 < t1)) throw std::invalid_argument("need t0 < t1");
    if (args.frames < 1) throw std::invalid_argument("--frames must be >= 1");

    std::vector<double> boundaries(args.frames + 1);
    for (int i = 0; i <= args.frames; ++i)
        boundaries[i] = t0 + (t1 - t0) * i / args.frames;
    boundaries.back() = t1;

    const events::GroupResult grouped = events::group_events(parsed.events, boundaries);
    if (parsed.nonmonotonic_count > 0)
        std::cerr << "note: " << parsed.nonmonotonic_count
                  << " timestamp inversions (first at line "
                  << parsed.first_nonmonotonic_line << ")\n";
    if (grouped.dropped_before + grouped.dropped_after > 0)
        std::cerr << "note: dropped " << grouped.dropped_before << " events before t0, "
                  << grouped.dropped_after << " at/after t1\n";

    std::string out_base = args.out.empty()
                               ? replace_extension(args.input, ".evx")
                               : args.out;
    for (std::size_t k = 0; k < grouped.groups.size(); ++k) {
        const events::VoxelGrid grid =
            events::voxelize(grouped.groups[k], args.bins, height, width);
        std::string path = out_base;
        if (grouped.groups.size() > 1) {
            std::ostringstream suffixed;
            const std::string stem = replace_extension(out_base, "");
            suffixed << stem << '.' << std::setw(4) << std::setfill('0') << k << ".evx";
            path = suffixed.str();
        }
        if (args.format == "bin") {
            write_evxgrid_file(path, grid.bins, grid.height, grid.width, grid.values);
            std::cout << path << " sum=" << fmt_double(grid.mass()) << " events="
                      << grouped.groups[k].events.size() << '\n';
        } else if (args.format == "csv") {
            FeatureVolume vol(grid.bins, grid.height, grid.width);
            vol.values = grid.values;
            if (args.out.empty() && grouped.groups.size() == 1) {
                write_volume_csv(std::cout, vol);
            } else {
                auto out = open_out(replace_extension(path, ".csv"), std::ios::out);
                write_volume_csv(out, vol);
            }
        } else {
            throw std::invalid_argument("voxelize supports --format bin|csv");
        }
    }
    return 0;
}

// ----------------------------------------------------------------- mask ----

struct MaskArgs {
    std::string dims = "8x8";
    int win_size = 4;
    std::uint64_t seed = 0;
    std::string offsets;  // "dh,dw" override
    std::string out;
};

int run_mask(const MaskArgs& args) {
    const curves::GridDims d = parse_dims(args.dims);
    windowing::WindowOffset off;
    off.s = args.win_size;
    if (!args.offsets.empty()) {
        const auto parts = split_csv(args.offsets);
        if (parts.size() != 2) throw std::invalid_argument("--offsets expects dh,dw");
        off.dh = std::stoi(parts[0]);
        off.dw = std::stoi(parts[1]);
    } else {
        Rng rng = make_layer_rng(args.seed);
        off = windowing::sample_offset(args.win_size, rng);
    }
    const windowing::OffsetMask mask = windowing::build_mask(d.height, d.width, off);
    if (args.out.empty()) {
        windowing::write_mask_text(std::cout, mask);
    } else {
        auto out = open_out(args.out, std::ios::out);
        windowing::write_mask_text(out, mask);
    }
    return 0;
}

// ------------------------------------------------------------ scanblock ----

struct ScanBlockArgs {
    std::string input;
    int win_size = 1;
    int samples = 8;
    std::uint64_t seed = 0;
    bool enumerate = false;
    int state_dim = 4;
    double delta = 0.1;
    std::string out;
};

int run_scanblock(const ScanBlockArgs& args) {
    const FeatureVolume vol = read_evxgrid_file(args.input);

    pipeline::ScanBlockConfig cfg;
    cfg.dims = curves::GridDims{vol.width, vol.height, vol.channels};
    cfg.win_size = args.win_size;
    cfg.mc_samples = args.samples;
    cfg.seed = args.seed;
    cfg.ssm.delta = args.delta;
    cfg.ssm.a.resize(args.state_dim);
    cfg.ssm.b.assign(args.state_dim, 1.0);
    cfg.ssm.c.assign(args.state_dim, 1.0 / args.state_dim);
    for (int i = 0; i < args.state_dim; ++i) cfg.ssm.a[i] = -(1.0 + i);

    const FeatureVolume out = pipeline::run_rwo_hsfc_block(cfg, vol, args.enumerate);
    const std::string path =
        args.out.empty() ? replace_extension(args.input, ".scan.evx") : args.out;
    write_evxgrid_file(path, out.channels, out.height, out.width, out.values);
    std::cout << path << '\n';
    return 0;
}

// ---------------------------------------------------------------- bench ----

struct BenchArgs {
    int state_dim = 8;
    std::string lengths = "256,1024,4096";
    std::string curve_sizes = "64,256,1024";
};

int run_bench(const BenchArgs& args) {
    using clock = std::chrono::steady_clock;

    std::printf("SSM scan throughput (state dim %d)\n", args.state_dim);
    std::printf("%10s %16s %16s\n", "M", "recurrent Mel/s", "conv Mel/s");
    ssm::SsmParams params;
    params.delta = 0.05;
    params.a.resize(args.state_dim);
    params.b.assign(args.state_dim, 1.0);
    params.c.assign(args.state_dim, 1.0 / args.state_dim);
    for (int i = 0; i < args.state_dim; ++i) params.a[i] = -(1.0 + i);
    const ssm::DiscreteSsm d = ssm::discretize(params);

    for (const std::string& len_str : split_csv(args.lengths)) {
        const std::size_t m = static_cast<std::size_t>(std::stoll(len_str));
        std::vector<double> x(m);
        for (std::size_t i = 0; i < m; ++i) x[i] = std::sin(0.01 * i);
        const int reps = std::max<int>(1, static_cast<int>(1'000'000 / m));

        auto t0 = clock::now();
        double sink = 0.0;
        for (int r = 0; r < reps; ++r) sink += ssm::scan_recurrent(d, x).back();
        const double rec_s = std::chrono::duration<double>(clock::now() - t0).count();

        const ssm::ScanKernel kernel = ssm::build_kernel(d, m);
        const int conv_reps = std::max(1, reps / 8);
        t0 = clock::now();
        for (int r = 0; r < conv_reps; ++r)
            sink += ssm::scan_convolutional(kernel, x).back();
        const double conv_s = std::chrono::duration<double>(clock::now() - t0).count();

        std::printf("%10zu %16.1f %16.1f\n", m, reps * m / rec_s / 1e6,
                    conv_reps * m / conv_s / 1e6);
        if (sink == 42.0) std::printf("#\n");  // keep the loops from being elided
    }

    std::printf("\ncurve generation throughput (NxN grids)\n");
    std::printf("%10s %14s %14s %14s %14s %14s\n", "N", "hilbert", "trans",
                "zorder", "peano", "reshape");
    for (const std::string& size_str : split_csv(args.curve_sizes)) {
        const int n = std::stoi(size_str);
        std::printf("%10d", n);
        for (const auto kind :
             {curves::CurveKind::Hilbert, curves::CurveKind::TransHilbert,
              curves::CurveKind::ZOrder, curves::CurveKind::Peano,
              curves::CurveKind::Reshape}) {
            try {
                const auto t0 = clock::now();
                const curves::CurvePath p = curves::generate(kind, {n, n, 1});
                const double s = std::chrono::duration<double>(clock::now() - t0).count();
                std::printf(" %10.1f Mc/s", p.size() / s / 1e6);
            } catch (const std::invalid_argument&) {
                std::printf(" %14s", "n/a");
            }
        }
        std::printf("\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"space-filling-curve serialization, event voxelization, "
                 "window-offset and SSM-scan toolkit"};
    app.require_subcommand(1);

    CurveArgs curve_args;
    CLI::App* curve = app.add_subcommand("curve", "generate a curve and export it");
    curve->add_option("--kind", curve_args.kind,
                      "hilbert|trans-hilbert|zorder|peano|reshape");
    curve->add_option("--dims", curve_args.dims, "WxH[xD] grid size");
    curve->add_option("--out", curve_args.out, "output file (default stdout)");
    curve->add_option("--format", curve_args.format, "text|bin");

    LocalityArgs locality_args;
    CLI::App* locality = app.add_subcommand("locality", "jump/still/SLR CSV report");
    locality->add_option("--kinds", locality_args.kinds, "comma-separated curve kinds");
    locality->add_option("--sizes", locality_args.sizes, "comma-separated side lengths");
    locality->add_option("--dims", locality_args.d, "dimensionality, 2 or 3");
    locality->add_option("--slr-budget", locality_args.slr_budget,
                         "pair budget for the SLR search");
    locality->add_option("--out", locality_args.out, "output CSV (default stdout)");

    VoxelizeArgs voxelize_args;
    CLI::App* voxelize = app.add_subcommand("voxelize", "events file -> EVXGRID1 voxels");
    voxelize->add_option("input", voxelize_args.input, "text event file")->required();
    voxelize->add_option("--bins", voxelize_args.bins, "temporal bins B");
    voxelize->add_option("--dims", voxelize_args.dims, "WxH sensor size override");
    voxelize->add_option("--frames", voxelize_args.frames, "number of frame windows");
    voxelize->add_option("--t0", voxelize_args.t0, "window start (default: first event)");
    voxelize->add_option("--t1", voxelize_args.t1, "window end (default: past last event)");
    voxelize->add_option("--out", voxelize_args.out, "output file");
    voxelize->add_option("--format", voxelize_args.format, "bin|csv");

    MaskArgs mask_args;
    CLI::App* mask = app.add_subcommand("mask", "window-offset region label grid");
    mask->add_option("--dims", mask_args.dims, "WxH grid size");
    mask->add_option("--win-size", mask_args.win_size, "window size s");
    mask->add_option("--seed", mask_args.seed, "offset sampling seed");
    mask->add_option("--offsets", mask_args.offsets, "fixed dh,dw (skip sampling)");
    mask->add_option("--out", mask_args.out, "output file (default stdout)");

    ScanBlockArgs scanblock_args;
    CLI::App* scanblock =
        app.add_subcommand("scanblock", "dual Hilbert/trans-Hilbert SSM scan of a volume");
    scanblock->add_option("input", scanblock_args.input, "EVXGRID1 volume")->required();
    scanblock->add_option("--win-size", scanblock_args.win_size, "RWO window size s");
    scanblock->add_option("--samples", scanblock_args.samples, "MC samples M");
    scanblock->add_option("--seed", scanblock_args.seed, "offset sampling seed");
    scanblock->add_flag("--enumerate", scanblock_args.enumerate,
                        "exact expectation over all offsets");
    scanblock->add_option("--state-dim", scanblock_args.state_dim, "SSM state dimension");
    scanblock->add_option("--delta", scanblock_args.delta, "SSM time scale");
    scanblock->add_option("--out", scanblock_args.out, "output file");

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "microbenchmarks (informational)");
    bench->add_option("--state-dim", bench_args.state_dim, "SSM state dimension");
    bench->add_option("--lengths", bench_args.lengths, "sequence lengths");
    bench->add_option("--curve-sizes", bench_args.curve_sizes, "curve side lengths");

    try {
        app.parse(argc, argv);
        if (curve->parsed()) return run_curve(curve_args);
        if (locality->parsed()) return run_locality(locality_args);
        if (voxelize->parsed()) return run_voxelize(voxelize_args);
        if (mask->parsed()) return run_mask(mask_args);
        if (scanblock->parsed()) return run_scanblock(scanblock_args);
        if (bench->parsed()) return run_bench(bench_args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
