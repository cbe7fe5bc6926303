"""Rank-metric packing and covering toolkit.

Exact q-combinatorics of GF(q^m)^n under the rank metric, the catalogue
of analytic covering bounds, code constructions (Gabidulin/MRD, field
embeddings, greedy covers), and exhaustive verifiers, with bit-packed
GF(2) kernels for the full-space scans.
"""

from .bounds import (
    BoundOptions,
    BoundReport,
    best_bounds,
    packing_max_cardinality,
)
from .codes import (
    Code,
    covering_radius,
    field_embed,
    gabidulin_generator,
    min_rank_distance,
    mrd_construct,
    skip_vector_decode,
    skip_vector_encode,
    transpose_code,
)
from .fields import Field, FieldElement, parse_field_spec
from .qcombinatorics import (
    alpha,
    ball_volume,
    gaussian,
    intersection_bruteforce,
    kq_constant,
    num_rank_u,
    volume_bounds,
)
from .rankspace import (
    Els,
    RankVector,
    els_complements,
    els_enumerate,
    project,
    rank_distance,
    rank_weight,
    support_space,
    unique_els_of,
)
from .search import exhaustive_lower_bound, jsl_construct, linear_exhaustive, local_search

__all__ = [
    "Field",
    "FieldElement",
    "parse_field_spec",
    "RankVector",
    "Els",
    "rank_weight",
    "rank_distance",
    "support_space",
    "unique_els_of",
    "els_enumerate",
    "els_complements",
    "project",
    "alpha",
    "gaussian",
    "num_rank_u",
    "ball_volume",
    "volume_bounds",
    "kq_constant",
    "intersection_bruteforce",
    "packing_max_cardinality",
    "BoundOptions",
    "BoundReport",
    "best_bounds",
    "Code",
    "gabidulin_generator",
    "mrd_construct",
    "transpose_code",
    "field_embed",
    "covering_radius",
    "min_rank_distance",
    "skip_vector_encode",
    "skip_vector_decode",
    "jsl_construct",
    "local_search",
    "exhaustive_lower_bound",
    "linear_exhaustive",
]

__version__ = "0.1.0"
