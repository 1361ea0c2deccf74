"""Graded tangent spaces of FM Schubert schemes at the base point.

For a nonzero dominant coweight lam in the coroot lattice the tangent
space of the FM Schubert scheme at the base point is the direct sum of the
full algebra in loop degrees -1 .. -m(lam), where m(lam) is the minimum
pairing of lam against nonzero dominant weights.  Because fundamental
weights are enough to realize that minimum, m(lam) is simply the smallest
simple-coroot coordinate of lam.

At lam = theta^vee (the quasi-minuscule coweight) the Schubert variety
itself has tangent dimension dim(g) at the base point, so a report with
total dimension m * dim(g) > dim(g) certifies that the two schemes differ;
this happens exactly for E8, where m = 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .rootsys import (
    CartanType,
    Coweight,
    DomainError,
    NotDominantError,
    RootSystem,
    build_root_system,
)

NONREDUCED_CERTIFIED = "NONREDUCED_CERTIFIED"
TANGENT_CONSISTENT = "TANGENT_CONSISTENT"
NOT_APPLICABLE = "NOT_APPLICABLE"

#: Default survey window: every simple type of rank <= 8.
DEFAULT_MAX_RANK = 8


@dataclass(frozen=True)
class GradedTangentReport:
    """Per-degree tangent dimensions plus the reducedness verdict.

    ``verdict`` is NONREDUCED_CERTIFIED exactly when both tangent
    dimensions at the base point were computed and differ.  The verdict
    certifies the dimension mismatch only; TANGENT_CONSISTENT makes no
    reducedness claim (agreement at one point is necessary, not
    sufficient).
    """

    cartan_type: CartanType
    lam: Coweight
    m_lambda: int
    graded_dims: tuple  # ((k, dim) for k = 1..m_lambda)
    total_fm_dim: int
    schubert_dim_at_e: Optional[int]
    verdict: str

    def to_dict(self) -> dict:
        return {
            "type": str(self.cartan_type),
            "rank": self.cartan_type.rank,
            "lambda_coroot_coords": list(self.lam.coords),
            "m_lambda": self.m_lambda,
            "graded": [{"k": k, "dim": d} for k, d in self.graded_dims],
            "total": self.total_fm_dim,
            "schubert_at_e": self.schubert_dim_at_e,
            "verdict": self.verdict,
        }


def _validated(rs: RootSystem, lam: Coweight) -> Coweight:
    lam = rs.to_simple_coroot(lam)
    if all(c == 0 for c in lam.coords):
        raise DomainError("m_lambda is defined for nonzero dominant coweights only")
    if not rs.is_dominant_coweight(lam):
        raise NotDominantError(f"coweight {lam.coords} is not dominant")
    return lam


def m_lambda(rs: RootSystem, lam: Coweight) -> int:
    """min over fundamental weights omega_i of <lam, omega_i>.

    Equals the minimum simple-coroot coordinate of lam; always >= 1 for
    nonzero dominant lam in the coroot lattice.
    """
    lam = _validated(rs, lam)
    return min(lam.coords)


def quasi_minuscule(rs: RootSystem) -> Coweight:
    """theta^vee, the coroot of the highest root, in simple-coroot coordinates."""
    return rs.coroot(rs.highest_root().coords)


def fm_tangent(rs: RootSystem, lam: Coweight) -> GradedTangentReport:
    """Graded dimensions of the FM tangent space at the base point.

    The Schubert-side dimension is populated only at lam = theta^vee,
    where it equals dim(g); no extrapolation is made for other coweights.
    """
    lam = _validated(rs, lam)
    m = min(lam.coords)
    d = rs.dim_g()
    graded = tuple((k, d) for k in range(1, m + 1))
    total = m * d
    if lam == quasi_minuscule(rs):
        schubert = d
        verdict = NONREDUCED_CERTIFIED if total != schubert else TANGENT_CONSISTENT
    else:
        schubert = None
        verdict = NOT_APPLICABLE
    return GradedTangentReport(
        cartan_type=rs.cartan_type,
        lam=lam,
        m_lambda=m,
        graded_dims=graded,
        total_fm_dim=total,
        schubert_dim_at_e=schubert,
        verdict=verdict,
    )


def survey_types(max_rank: int = DEFAULT_MAX_RANK) -> list:
    """Every simple type with rank <= max_rank, ordered by (series, rank)."""
    out = []
    for series, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 4), ("E", 6), ("F", 4), ("G", 2)):
        hi = {"E": 8, "F": 4, "G": 2}.get(series, max_rank)
        for n in range(lo, min(hi, max_rank) + 1):
            out.append(CartanType(series, n))
    return out


def quasi_minuscule_survey(max_rank: int = DEFAULT_MAX_RANK) -> list:
    """One GradedTangentReport per type at lam = theta^vee.

    Rows are independent pure computations; the output order is fixed as
    (series, rank).
    """
    reports = []
    for ct in survey_types(max_rank):
        rs = build_root_system(ct)
        reports.append(fm_tangent(rs, quasi_minuscule(rs)))
    return reports
