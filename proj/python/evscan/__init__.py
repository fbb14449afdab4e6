"""Space-filling-curve serialization, event voxelization, random-window-offset
partitioning and SSM scan kernels, backed by the C++ core."""

from evscan._core import (  # noqa: F401
    build_kernel,
    build_mask,
    closed_form_stats,
    curve_linear_indices,
    deserialize,
    empirical_slr,
    full_enumeration,
    generate_curve,
    group_events,
    mc_average,
    partition_windows,
    reassemble_windows,
    run_hsfc_block,
    sample_offset,
    scan_convolutional,
    scan_recurrent,
    segment_stats,
    selective_scan,
    serialize,
    voxelize,
    zoh_discretize,
)

__all__ = [
    "build_kernel",
    "build_mask",
    "closed_form_stats",
    "curve_linear_indices",
    "deserialize",
    "empirical_slr",
    "full_enumeration",
    "generate_curve",
    "group_events",
    "mc_average",
    "partition_windows",
    "reassemble_windows",
    "run_hsfc_block",
    "sample_offset",
    "scan_convolutional",
    "scan_recurrent",
    "segment_stats",
    "selective_scan",
    "serialize",
    "voxelize",
    "zoh_discretize",
]
