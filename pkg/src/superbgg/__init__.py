"""superbgg: exact Kostant cohomology and BGG resolutions for gl(m|n), osp(m|2n).

Everything runs over exact rationals: matrix realizations of the basic
classical Lie superalgebras, parabolic decompositions with dual bases,
highest-weight and Kac modules with contravariant forms, super chain
complexes with the boundary/coboundary pairs on both sides of the pairing,
the quabla operator, and the decidable criteria for the existence of
resolutions by generalised Verma modules.
"""

from .algebra import (
    AdjointOperation,
    LieSuperalgebra,
    ParabolicDecomposition,
    build_adjoint_operation,
    build_algebra,
    build_parabolic,
    casimir_eigenvalue,
    check_star_condition,
)
from .bgg import (
    BGGVerdict,
    ResolutionShape,
    WeylCoset,
    bgg_verdict,
    natural_resolution_shape,
    kac_resolution,
    reproduce,
    weyl_coset,
)
from .chains import (
    ChainBasisElement,
    ChainComplex,
    ChainForm,
    ChainMap,
    ChainPairing,
    ChainSpace,
    boundary,
    chain_space,
    coboundary,
    delta_pair,
    get_complex,
    pairing_matrix,
    quabla,
)
from .homology import (
    HomologyReport,
    KostantAnalysis,
    LDecomposition,
    PredicateReport,
    SubspaceBasis,
    disjointness_predicates,
    casimir_match,
    decompose_levi,
    euler_check,
    generalized_zero,
    get_analysis,
    homology_group,
    ker_quabla,
    multiplicity_criterion,
)
from .modules import (
    HWModule,
    KacModule,
    build_irrep,
    build_kac_module,
    dual_module,
    natural_module,
)

__version__ = "0.1.0"

__all__ = [
    "AdjointOperation", "BGGVerdict", "ChainBasisElement", "ChainComplex",
    "ChainForm", "ChainMap", "ChainPairing", "ChainSpace", "HWModule",
    "HomologyReport", "KacModule", "KostantAnalysis", "LDecomposition",
    "LieSuperalgebra", "ParabolicDecomposition", "PredicateReport",
    "ResolutionShape", "SubspaceBasis", "WeylCoset", "bgg_verdict",
    "boundary", "disjointness_predicates",
    "build_adjoint_operation", "build_algebra", "build_irrep",
    "build_kac_module", "build_parabolic", "casimir_eigenvalue",
    "natural_resolution_shape",
    "casimir_match", "chain_space", "check_star_condition", "coboundary",
    "decompose_levi", "delta_pair", "dual_module", "euler_check",
    "generalized_zero", "get_analysis", "get_complex", "homology_group",
    "kac_resolution", "ker_quabla", "multiplicity_criterion",
    "natural_module", "pairing_matrix", "quabla", "reproduce", "weyl_coset",
]
