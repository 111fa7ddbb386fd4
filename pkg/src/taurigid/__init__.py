"""Workbench for type-A higher cluster combinatorics and its module side.

The cyclic module builds the combinatorial category model, the algebra
module does exact module calculus over kA_N/rad^2, and the bridge module
ties the two together through a tilting context, the object-to-pair map,
and a suite of instance verifiers.
"""

from .algebra import (
    Algebra,
    AlgebraError,
    Representation,
    build_linear_radsq,
    decompose,
    hom_dim,
    min_proj_resolution,
    standard_module,
    tau_d,
)
from .bridge import (
    BridgeError,
    FormalModule,
    RigidPair,
    TiltingContext,
    build_context,
    canonical_T,
    delta,
    delta_inverse,
    image_module,
    pair_classify,
    verify,
)
from .cyclic import (
    Flags,
    Model,
    ModelError,
    UnsupportedRankError,
    build_model,
    classify,
    enumerate_maximal_rigid,
    ext_dim,
    hom_dim_cycle,
    quotient_hom_dim_cycle,
    suspend,
)

__version__ = "0.1.0"
