"""Sub-representability of posets: classification, witnessing maps, an
exhaustive oracle, and the symbolic ordinal/pinboard machinery."""

from .classify import (
    ChainDescriptor,
    INTEGERS,
    IRRATIONALS,
    PatternMatch,
    PosetDescriptor,
    RATIONALS,
    REALS,
    Verdict,
    VerdictKind,
    Witness,
    classify_chain,
    classify_descriptor,
    classify_finite,
    is_coflower,
    is_flower,
    is_union_of_chains,
    recheck_witness,
)
from .construct import SubRepMap, Violation, build_g, verify_subrep
from .embed import (
    PatternKind,
    all_embeddings,
    contains_pattern,
    embeds,
    find_embedding,
    obstruction_patterns,
    pattern_poset,
)
from .errors import (
    BetaExceedsAlpha,
    CycleDetected,
    DoesNotFit,
    EmptyPoset,
    HostMismatch,
    InfinitePinboard,
    InvalidDescriptor,
    InvalidPinboard,
    NotSubRepresentable,
    ParseError,
    PartialMap,
    SubrepError,
    TooLarge,
    UnknownElement,
)
from .oracle import SurveyRow, enumerate_posets, oracle_subrep, survey
from .ordinal import (
    Card,
    OrdinalExpr,
    Segment,
    ZERO,
    card_cmp,
    card_sum,
    fin,
    initial_ordinal,
    omega,
    ord_cmp,
    ord_sum,
    subrep_ordinal,
)
from .pinboard import (
    Pinboard,
    PinSubset,
    SimplePinboard,
    ThetaSegments,
    co_dual,
    normalize_subset,
    pin_embeds,
    pinboard,
    pinboard_poset,
    run_positions,
    theta,
    theta_subset,
)
from .poset import (
    Poset,
    antichain,
    canonical_code,
    canonical_form,
    chain,
    components,
    disjoint_union,
    dual,
    height_width,
    is_antichain_poset,
    is_chain_poset,
    mask_of,
    names_of,
    poset_from_cover,
    strict_cone,
    subposet,
)

__all__ = [
    "BetaExceedsAlpha",
    "Card",
    "ChainDescriptor",
    "CycleDetected",
    "DoesNotFit",
    "EmptyPoset",
    "HostMismatch",
    "INTEGERS",
    "IRRATIONALS",
    "InfinitePinboard",
    "InvalidDescriptor",
    "InvalidPinboard",
    "NotSubRepresentable",
    "OrdinalExpr",
    "ParseError",
    "PartialMap",
    "PatternKind",
    "PatternMatch",
    "PinSubset",
    "Pinboard",
    "Poset",
    "PosetDescriptor",
    "RATIONALS",
    "REALS",
    "Segment",
    "SimplePinboard",
    "SubRepMap",
    "SubrepError",
    "SurveyRow",
    "ThetaSegments",
    "TooLarge",
    "UnknownElement",
    "Verdict",
    "VerdictKind",
    "Violation",
    "Witness",
    "ZERO",
    "all_embeddings",
    "antichain",
    "build_g",
    "canonical_code",
    "canonical_form",
    "card_cmp",
    "card_sum",
    "chain",
    "classify_chain",
    "classify_descriptor",
    "classify_finite",
    "co_dual",
    "components",
    "contains_pattern",
    "disjoint_union",
    "dual",
    "embeds",
    "enumerate_posets",
    "fin",
    "find_embedding",
    "height_width",
    "initial_ordinal",
    "is_antichain_poset",
    "is_chain_poset",
    "is_coflower",
    "is_flower",
    "is_union_of_chains",
    "mask_of",
    "names_of",
    "obstruction_patterns",
    "omega",
    "oracle_subrep",
    "ord_cmp",
    "ord_sum",
    "pattern_poset",
    "pin_embeds",
    "pinboard",
    "pinboard_poset",
    "poset_from_cover",
    "recheck_witness",
    "run_positions",
    "strict_cone",
    "subposet",
    "subrep_ordinal",
    "survey",
    "theta",
    "theta_subset",
    "verify_subrep",
]
