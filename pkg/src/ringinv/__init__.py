"""Inverses along an element in concrete unital rings.

Rings are built from a short spec string (``zmod:12``, ``mat:2:z2``,
``mat:3:q``) and elements from literals (``5``, ``[[1,0],[1/2,0]]``).
"""

from .along import (
    ROUTES,
    AlongDecomposition,
    AlongResult,
    along_set_decomposition,
    check_equivalences,
    classical_from_inner,
    decompose_along,
    inner_inverse_criteria,
    inverse_along,
    inverse_along_corner,
    inverse_along_definitional,
    inverse_along_inner,
    inverse_along_unit_formula,
    invertibles_along,
    is_commuting_along,
    is_inverse_along,
    reverse_order_law_counterexample,
    reverse_order_law_holds,
    translate_by_unit,
)
from .errors import (
    ConsistencyError,
    NoInvolutionError,
    NotEnumerableError,
    NotRegularError,
    PreconditionError,
    RingInvError,
    RingSpecError,
    UnknownTheoremError,
)
from .geninv import (
    drazin_inverse,
    generalized_drazin_inverse,
    group_inverse,
    inner_inverse,
    inner_inverses,
    is_ep,
    is_quasinilpotent,
    is_regular,
    mp_inverse,
)
from .ideals import (
    CornerRing,
    IdealHandle,
    corner_invert,
    direct_sum,
    ideal,
    is_idempotent,
    is_unit,
    left_annihilator,
    left_ideal,
    right_annihilator,
    right_ideal,
    unit_inverse,
)
from .kernels import BACKEND
from .rings import ENUMERATION_CAP, Element, MatrixRing, ModularRing, Ring, make_ring
from .verify import CATALOG, CensusReport, TheoremReport, census, verify_theorem

__version__ = "0.1.0"
