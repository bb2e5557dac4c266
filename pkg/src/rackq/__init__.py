"""Finite racks and quandles: constructors, profiles, obstructions, census."""

from .constructors import (
    AffineSpec,
    ClassTooLarge,
    NonInvertibleAlpha,
    affine,
    conjugation_class_quandle,
    cyclic_rack,
    dihedral,
    trivial,
)
from .core import (
    ClassFlags,
    OutOfRangeEntry,
    R1Violation,
    R2Violation,
    RackTable,
    TableValidationError,
    fixed_set,
    inner_map,
    is_braided,
    is_crossed_set,
    is_quandle,
    is_subrack,
    subrack_closure,
    validate,
)
from .enumeration import (
    CensusReport,
    EnumerationFilter,
    OrderTooLarge,
    are_isomorphic,
    canonical_form,
    census,
    enumerate_racks,
    relabel,
)
from .errors import RackError
from .inner import (
    EXCEEDED,
    NotIndecomposable,
    OrbitPartition,
    ProfileConstancyError,
    classify,
    degree,
    hayashi_holds_for,
    inner_group_order,
    is_indecomposable,
    orbit_partition,
    per_point_patterns,
    rack_profile,
)
from .obstructions import (
    DuplicateLength,
    LengthDecomposition,
    NonPositive,
    ObstructionVerdict,
    ProfileQuery,
    ProfileSyntaxError,
    TooManyLengths,
    cor34_verdict,
    decompose_lengths,
    full_verdict,
    hayashi_check,
    parse_profile,
    prop35_verdict,
    prop315_verdict,
)
from .perm import (
    CycleProfile,
    Perm,
    compose,
    cycle_decomposition,
    from_cycles,
    identity,
    inverse,
    is_permutation,
    order,
    pattern,
    power,
    support,
)
from .tableio import (
    BadDimensions,
    EntryOutOfRange,
    TableDocument,
    TableParseError,
    TableSyntaxError,
    emit_report,
    emit_table,
    load_table,
    parse_table,
)

__version__ = "0.1.0"

__all__ = [
    "AffineSpec",
    "BadDimensions",
    "CensusReport",
    "ClassFlags",
    "ClassTooLarge",
    "CycleProfile",
    "DuplicateLength",
    "EXCEEDED",
    "EntryOutOfRange",
    "EnumerationFilter",
    "LengthDecomposition",
    "NonInvertibleAlpha",
    "NonPositive",
    "NotIndecomposable",
    "ObstructionVerdict",
    "OrbitPartition",
    "OrderTooLarge",
    "OutOfRangeEntry",
    "Perm",
    "ProfileConstancyError",
    "ProfileQuery",
    "ProfileSyntaxError",
    "R1Violation",
    "R2Violation",
    "RackError",
    "RackTable",
    "TableDocument",
    "TableParseError",
    "TableSyntaxError",
    "TableValidationError",
    "TooManyLengths",
    "affine",
    "are_isomorphic",
    "canonical_form",
    "census",
    "classify",
    "compose",
    "conjugation_class_quandle",
    "cor34_verdict",
    "cycle_decomposition",
    "cyclic_rack",
    "decompose_lengths",
    "degree",
    "dihedral",
    "emit_report",
    "emit_table",
    "enumerate_racks",
    "fixed_set",
    "from_cycles",
    "full_verdict",
    "hayashi_check",
    "hayashi_holds_for",
    "identity",
    "inner_group_order",
    "inner_map",
    "inverse",
    "is_braided",
    "is_crossed_set",
    "is_indecomposable",
    "is_permutation",
    "is_quandle",
    "is_subrack",
    "load_table",
    "orbit_partition",
    "order",
    "parse_profile",
    "parse_table",
    "pattern",
    "per_point_patterns",
    "power",
    "prop315_verdict",
    "prop35_verdict",
    "rack_profile",
    "relabel",
    "subrack_closure",
    "support",
    "trivial",
    "validate",
]
