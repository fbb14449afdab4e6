#pragma once

#include <cstdint>

#include "evscan/curves.hpp"
#include "evscan/ssm.hpp"
#include "evscan/volume.hpp"

namespace evscan::pipeline {

/// Configuration of the dual-curve scan block: the volume is serialized along
/// the Hilbert and trans-Hilbert curves (channels act as the third grid
/// dimension), each sequence is scanned by the SSM, and the de-serialized
/// branch outputs are averaged in place of a learned projection. win_size /
/// mc_samples / seed drive the optional random-window-offset wrapper around
/// the block (see the CLI).
struct ScanBlockConfig {
    curves::GridDims dims;
    ssm::SsmParams ssm;
    int win_size = 1;
    int mc_samples = 1;
    std::uint64_t seed = 0;
};

FeatureVolume run_hsfc_block(const ScanBlockConfig& cfg, const FeatureVolume& vol);

/// Same block with an already-discretized SSM (used where a_bar must be set
/// directly, e.g. the identity passthrough a_bar = 0, c.b_bar = 1).
FeatureVolume run_hsfc_block_discrete(const curves::GridDims& dims,
                                      const ssm::DiscreteSsm& d,
                                      const FeatureVolume& vol);

/// RWO-wrapped block: Monte-Carlo average over window offsets of
/// shift -> block -> unshift. With win_size == 1 this is the plain block;
/// with enumerate set, the exact expectation over all win_size^2 offsets is
/// computed instead of sampling.
FeatureVolume run_rwo_hsfc_block(const ScanBlockConfig& cfg,
                                 const FeatureVolume& vol,
                                 bool enumerate = false);

}  // namespace evscan::pipeline
