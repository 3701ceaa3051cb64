"""loopsmith: a computational toolkit for finite loops.

Validate and classify Cayley tables against the Bol-Moufang variety catalog,
compute structural invariants (nuclei, center, quotients, associators,
torsion decompositions), build loops from Steiner triple systems and
factor-set extensions, and exhaustively enumerate small loops under identity
constraints.
"""

from .core import (
    LoopTable,
    element_order,
    exponent,
    inverse,
    left_divide,
    loop_from_rows,
    parse_cayley,
    power,
    product,
    right_divide,
    serialize,
    translation,
)
from .fixtures import FIXTURE_NAMES, load_fixture
from .identities import (
    CATALOG,
    Identity,
    Verdict,
    check_property,
    classify_bol_moufang,
    parse_identity,
    satisfies,
)
from .search import SearchOutcome, SearchSpec, enumerate_loops, enumerate_sts
from .structure import (
    associator,
    associator_subloop,
    center,
    check_assoc_family,
    decompose_torsion,
    generate_subloop,
    internal_direct_product,
    is_normal,
    is_subloop,
    isomorphic,
    lagrange_report,
    nucleus,
    quotient,
    squaring_kernel,
    subloop_table,
)

__version__ = "0.1.0"

__all__ = [
    "CATALOG",
    "FIXTURE_NAMES",
    "Identity",
    "LoopTable",
    "SearchOutcome",
    "SearchSpec",
    "Verdict",
    "associator",
    "associator_subloop",
    "center",
    "check_assoc_family",
    "check_property",
    "classify_bol_moufang",
    "decompose_torsion",
    "element_order",
    "enumerate_loops",
    "enumerate_sts",
    "exponent",
    "generate_subloop",
    "internal_direct_product",
    "inverse",
    "is_normal",
    "is_subloop",
    "isomorphic",
    "lagrange_report",
    "left_divide",
    "load_fixture",
    "loop_from_rows",
    "nucleus",
    "parse_cayley",
    "parse_identity",
    "power",
    "product",
    "quotient",
    "right_divide",
    "satisfies",
    "serialize",
    "squaring_kernel",
    "subloop_table",
    "translation",
]
