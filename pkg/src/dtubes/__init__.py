"""Arcs in the twice-punctured disk and the non-homogeneous tubes they model."""

from .errors import (
    ArcSyntaxError,
    ContractibleArcError,
    DomainError,
    InvalidLoopTagsError,
    NonCanonicalArcError,
    NotationError,
    TriangulationError,
)
from .interior import (
    CylEnd,
    InteriorArc,
    RawInteriorArc,
    arcs_at_level,
    component,
    endpoint_punctures,
    equivalent,
    level,
    mouth_arcs,
    normalize,
    predecessors,
    successors,
    tau,
    winding,
)
from .quiver import (
    ArcSide,
    angle_arrows,
    BoundarySide,
    Quiver,
    TranslationQuiver,
    Triangulation,
    connected_components,
    is_stable_translation_quiver,
    quiver_from_triangulation,
    remove_two_cycles,
    tau_period,
    tube_report,
)
from .surface import (
    ArcType,
    Boundary,
    ClassicalTaggedArc,
    PeripheralArc,
    Puncture,
    Surface,
    Tag,
    classify_arc,
    clockwise_next,
    from_gamma_notation,
    tagged_compatible,
    tau_peripheral,
    to_gamma_notation,
    untagged_crossing_simple_peripheral,
    validate_tagged_arc,
)
from .tubes import TubeWindow, build_gamma, build_t1, find_isomorphism, quasi_simples_t1, verify_t1, verify_theorem

__version__ = "0.1.0"
