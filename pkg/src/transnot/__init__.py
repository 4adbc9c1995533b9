"""Compact notation for finite transformations.

Parse, interpret, canonicalize and convert notations for total maps of
``{1..n}``, plus a small transformation algebra.
"""

from .canonical import canonical_ast, canonical_form, canonicalize, is_canonical, structural_idempotent
from .errors import (
    BoundExceededError,
    CycleTooShortError,
    DegreeMismatchError,
    DuplicatePointError,
    EmptyBracketsError,
    NotAPermutationError,
    NotCanonicalError,
    ParseError,
    PointOutOfRangeError,
    SourceSpan,
    SplatTooShortError,
    TransformationError,
    UnsupportedDialectError,
)
from .legacy import (
    Dialect,
    Factor,
    convert,
    emit_factorization,
    emit_image_list,
    emit_linear,
    emit_path,
    parse_factorization,
    parse_image_list,
    parse_linear,
    render_factorization,
)
from .nodes import format_ast, max_point, mentioned_points, relabel, root
from .parser import parse_compact
from .lexer import tokenize
from .semantics import evaluate, interpret, interpret_component, interpret_tree
from .transformation import (
    Decomposition,
    OrbitIndices,
    Transformation,
    apply,
    are_conjugate,
    compose,
    conjugacy_class_representatives,
    conjugate,
    decompose,
    identity,
    inverse,
    is_idempotent,
    is_permutation,
    orbit_indices,
    power,
    preimages,
)

__version__ = "0.1.0"
