"""Counting semi-integral points of bounded height on split toric varieties.

Thin Python surface over the C++ core: fan validation, point location and
classification, heights, local densities, the predicted leading constant,
and point counting.
"""

try:
    from ._toricount import (  # installed wheel layout
        classify,
        count,
        enumerate_points,
        height,
        local_density,
        locate,
        mfull,
        picard_rank,
        predict,
        q_polynomial,
        validate,
    )
except ImportError:
    from _toricount import (  # in-tree build directory on PYTHONPATH
        classify,
        count,
        enumerate_points,
        height,
        local_density,
        locate,
        mfull,
        picard_rank,
        predict,
        q_polynomial,
        validate,
    )

__all__ = [
    "classify",
    "count",
    "enumerate_points",
    "height",
    "local_density",
    "locate",
    "mfull",
    "picard_rank",
    "predict",
    "q_polynomial",
    "validate",
]
