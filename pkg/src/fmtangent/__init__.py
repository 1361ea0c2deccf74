"""Exact Lie-theory engine for tangent spaces of FM Schubert schemes.

Three independent routes compute the tangent data at the base point and
must agree: the closed formula (:mod:`fmtangent.tangent`), a dual-number
lattice oracle on explicit representations
(:mod:`fmtangent.lattice_oracle`), and the truncated Demazure module with
Polo membership (:mod:`fmtangent.demazure`).
"""

__version__ = "0.1.0"

from .chevalley import ChevalleyAlgebra, adjoint_rep, build_chevalley  # noqa: F401
from .demazure import TruncatedBasicRep, build_truncated_rep  # noqa: F401
from .lattice_oracle import (  # noqa: F401
    EpsilonLattice,
    FiniteRep,
    LoopElement,
    UnsupportedRepresentationError,
    build_rep,
    epsilon_membership,
    fm_membership,
    wedge_top_check,
    weight_sum_zero,
)
from .rootsys import (  # noqa: F401
    CartanType,
    Coweight,
    DomainError,
    NotDominantError,
    NotInLatticeError,
    RootSystem,
    Weight,
    build_root_system,
)
from .tangent import (  # noqa: F401
    GradedTangentReport,
    fm_tangent,
    m_lambda,
    quasi_minuscule,
    quasi_minuscule_survey,
)
