from .base import CocycleInverse, CocycleTable, CrossedProduct, Measuring, Variant
from .comparison import (
    ISO_IDS,
    STANDING_IDS,
    ComparisonOutcome,
    compare_constructions,
    comparison_iso,
    verify_comparison,
)
from .conditions import (
    AG_COCYCLE_IDS,
    AG_HYPOTHESES,
    AG_INVERSE_IDS,
    AUX_IDS,
    BB_COCYCLE_IDS,
    BB_HYPOTHESES,
    BB_INVERSE_IDS,
    EQUIV_IDS,
    EQUIV_PRECONDITIONS,
    MEASURING_IDS,
    check_ag_cocycle,
    check_ag_inverse,
    check_aux_lemmas,
    check_balance,
    check_bb_cocycle,
    check_bb_inverse,
    check_condition_11,
    check_equiv_10_12,
    check_measuring,
)
from .inverses import (
    descend,
    induce,
    invert_ag,
    invert_bb,
    missing_inverse_report,
    tilde_from_bar,
    transfer_inverse,
)
from .products import (
    AG_PRODUCT_IDS,
    BB_PRODUCT_IDS,
    ambient_product,
    ambient_space,
    build_ag,
    build_bb,
    check_nabla,
    nabla,
    preunit,
)

__ALL__ = [
    AG_COCYCLE_IDS,
    AG_HYPOTHESES,
    AG_INVERSE_IDS,
    AG_PRODUCT_IDS,
    AUX_IDS,
    BB_COCYCLE_IDS,
    BB_HYPOTHESES,
    BB_INVERSE_IDS,
    BB_PRODUCT_IDS,
    EQUIV_IDS,
    EQUIV_PRECONDITIONS,
    ISO_IDS,
    MEASURING_IDS,
    STANDING_IDS,
    CocycleInverse,
    CocycleTable,
    ComparisonOutcome,
    CrossedProduct,
    Measuring,
    Variant,
    ambient_product,
    ambient_space,
    build_ag,
    build_bb,
    check_ag_cocycle,
    check_ag_inverse,
    check_aux_lemmas,
    check_balance,
    check_bb_cocycle,
    check_bb_inverse,
    check_condition_11,
    check_equiv_10_12,
    check_measuring,
    check_nabla,
    compare_constructions,
    comparison_iso,
    descend,
    induce,
    invert_ag,
    invert_bb,
    missing_inverse_report,
    nabla,
    preunit,
    tilde_from_bar,
    transfer_inverse,
    verify_comparison,
]
