"""Multicomposition representations, bijections, enumeration and text grammar"""

from .bijections import from_markers, to_colored_form, to_markers, to_zero_form, zero_count
from .compositions import (
    JOIN,
    ColoredComposition,
    MarkerSequence,
    Part,
    ZeroComposition,
    colored,
    concatenate,
    marker_label,
    zeros,
)
from .enumeration import (
    count_compositions_parallel,
    enumerate_compositions,
    enumerate_markers,
    partitioned_streams,
)
from .grammar import CompositionForm, from_json_dict, parse, render, to_json_dict

__all__ = [
    "JOIN",
    "ColoredComposition",
    "CompositionForm",
    "MarkerSequence",
    "Part",
    "ZeroComposition",
    "colored",
    "concatenate",
    "count_compositions_parallel",
    "enumerate_compositions",
    "enumerate_markers",
    "from_json_dict",
    "from_markers",
    "marker_label",
    "parse",
    "partitioned_streams",
    "render",
    "to_colored_form",
    "to_json_dict",
    "to_markers",
    "to_zero_form",
    "zero_count",
    "zeros",
]
