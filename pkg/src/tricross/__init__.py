"""Multi-crossing knot diagrams: bracket state sums, triple-crossing
constructions, and bounds on crossing numbers."""

from .analyzer import BoundsReport, c3_bounds, cn_bounds, knot_table_check, volume_bounds
from .bigons import bigon_chains, cor36_construction, even_bigon_condition, twist_bigon_chains, twist_number
from .braids import BraidWord, braid_closure, fold_braid, full_twist_generator, parse_braid
from .covering import CoveringCollection, Pass, check_collection, find_covering_collections, fold_along, fold_multi
from .diagram import (
    Crossing,
    Diagram,
    OrientedDiagram,
    classify_triple,
    components,
    faces,
    is_alternating,
    is_reduced,
    mirror,
    orient,
    validate,
)
from .errors import TricrossError
from .ncross import collapse_even_n, double_to_even_n
from .polynomial import LaurentPolynomial, delta_power, span
from .resolve import resolve_multi, resolve_triple
from .skein import (
    bracket,
    bracket_double,
    bracket_triple,
    c3_lower_from_span,
    normalized_polynomial,
    state_extremes,
    writhe,
)
from .textio import parse_diagram, parse_multi, parse_oriented, parse_pd, serialize, serialize_multi, serialize_pd

__all__ = [
    "BoundsReport",
    "c3_bounds",
    "cn_bounds",
    "knot_table_check",
    "volume_bounds",
    "bigon_chains",
    "cor36_construction",
    "even_bigon_condition",
    "twist_bigon_chains",
    "twist_number",
    "BraidWord",
    "braid_closure",
    "fold_braid",
    "full_twist_generator",
    "parse_braid",
    "CoveringCollection",
    "Pass",
    "check_collection",
    "find_covering_collections",
    "fold_along",
    "fold_multi",
    "Crossing",
    "Diagram",
    "OrientedDiagram",
    "classify_triple",
    "components",
    "faces",
    "is_alternating",
    "is_reduced",
    "mirror",
    "orient",
    "validate",
    "TricrossError",
    "collapse_even_n",
    "double_to_even_n",
    "LaurentPolynomial",
    "delta_power",
    "span",
    "resolve_multi",
    "resolve_triple",
    "bracket",
    "bracket_double",
    "bracket_triple",
    "c3_lower_from_span",
    "normalized_polynomial",
    "state_extremes",
    "writhe",
    "parse_diagram",
    "parse_multi",
    "parse_oriented",
    "parse_pd",
    "serialize",
    "serialize_multi",
    "serialize_pd",
]
