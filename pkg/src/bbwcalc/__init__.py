"""Exact cohomology and Chern-class computations for homogeneous bundles on Grassmannians.

The pipeline: a bundle expression over U, Q and O(t) is decomposed into
irreducible Schur summands, Borel-Bott-Weil gives their cohomology on
Gr(k, n), a Koszul resolution transports it to the zero locus X of a
section, and Schubert calculus supplies Chern characters, discriminants and
Riemann-Roch cross-checks.  All arithmetic is over the integers or Q.
"""
from .bbw import BBWResult, CohomologyTable, bbw, cohomology_table, euler_char_ambient
from .bundles import (
    O,
    Q,
    U,
    DirectSum,
    Dual,
    End0,
    GrassmannianContext,
    IrrSummand,
    Schur,
    Sym,
    Tensor,
    Wedge,
    dual,
    normalize,
    rank,
)
from .chow import (
    chern_character,
    discriminant,
    hrr_euler,
    integrate,
    modularity_check,
    sigma,
    to_h_basis,
    to_intrinsic_basis,
    total_chern,
)
from .dsl import ParseError, parse
from .errors import (
    BBWCalcError,
    DegenerateInput,
    InconsistentCharacter,
    InternalInconsistency,
    InvalidInput,
    NotExpressible,
    StructuralError,
)
from .kernels import BACKEND
from .koszul import ZeroLocusSetup, e1_page, euler_char_X, koszul_factors, restrict_cohomology
from .symcore import Partition, lr_coefficients, schur_expand, weyl_dim

__version__ = "0.1.0"
