#include "evscan/scan_block.hpp"

#include <stdexcept>

#include "evscan/windowing.hpp"

namespace evscan::pipeline {

using curves::CurvePath;
using curves::GridDims;

FeatureVolume run_hsfc_block_discrete(const GridDims& dims,
                                      const ssm::DiscreteSsm& d,
                                      const FeatureVolume& vol) {
    if (vol.width != dims.width || vol.height != dims.height ||
        vol.channels != dims.depth)
        throw std::invalid_argument("scan block: volume dims do not match config");

    const CurvePath hilbert = curves::generate_hilbert(dims);
    const CurvePath trans = curves::generate_trans_hilbert(dims);

    FeatureVolume out(vol.channels, vol.height, vol.width);
    for (const CurvePath* path : {&hilbert, &trans}) {
        const std::vector<double> seq = curves::serialize(*path, vol);
        const std::vector<double> scanned = ssm::scan_recurrent(d, seq);
        const FeatureVolume branch = curves::deserialize(*path, scanned);
        for (std::size_t i = 0; i < out.values.size(); ++i)
            out.values[i] += branch.values[i];
    }
    // stand-in for the learned projection of the concatenated branches
    for (double& v : out.values) v *= 0.5;
    return out;
}

FeatureVolume run_hsfc_block(const ScanBlockConfig& cfg, const FeatureVolume& vol) {
    return run_hsfc_block_discrete(cfg.dims, ssm::discretize(cfg.ssm), vol);
}

FeatureVolume run_rwo_hsfc_block(const ScanBlockConfig& cfg,
                                 const FeatureVolume& vol, bool enumerate) {
    if (cfg.win_size < 1) throw std::invalid_argument("win_size must be >= 1");
    if (cfg.mc_samples < 1) throw std::invalid_argument("mc_samples must be >= 1");
    const ssm::DiscreteSsm d = ssm::discretize(cfg.ssm);
    if (cfg.win_size == 1)
        return run_hsfc_block_discrete(cfg.dims, d, vol);

    // shift -> block -> unshift under each sampled offset
    windowing::OffsetPipeline shifted_block =
        [&](const FeatureVolume& v, const windowing::WindowOffset& off) {
            FeatureVolume shifted(v.channels, v.height, v.width);
            for (int c = 0; c < v.channels; ++c)
                for (int y = 0; y < v.height; ++y)
                    for (int x = 0; x < v.width; ++x)
                        shifted.at(c, y, x) =
                            v.at(c, (y + off.dh) % v.height, (x + off.dw) % v.width);
            const FeatureVolume scanned = run_hsfc_block_discrete(cfg.dims, d, shifted);
            FeatureVolume out(v.channels, v.height, v.width);
            for (int c = 0; c < v.channels; ++c)
                for (int y = 0; y < v.height; ++y)
                    for (int x = 0; x < v.width; ++x)
                        out.at(c, (y + off.dh) % v.height, (x + off.dw) % v.width) =
                            scanned.at(c, y, x);
            return out;
        };
    if (enumerate)
        return windowing::full_enumeration(shifted_block, vol, cfg.win_size);
    return windowing::mc_average(shifted_block, vol, cfg.win_size, cfg.mc_samples,
                                 cfg.seed);
}

}  // namespace evscan::pipeline
