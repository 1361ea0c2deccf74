"""Brute-force verification of the FM tangent criterion on explicit
finite-dimensional representations, via dual-number lattice arithmetic.

A tangent vector X in t^{-1}g[t^{-1}] belongs to the FM tangent space at
the base point when, for every dominant weight eta of the test family,

    (1 - X eps) . L0  is contained in  t^{-<lam,eta>} L0,

where L0 = V_eta (x) C[eps][[t]] and eps^2 = 0.  This module checks that
containment by explicit matrix application, independently of the closed
formula in :mod:`fmtangent.tangent`.

The test family is finite and explicit; the oracle is a necessary
condition (it never quantifies over all dominant weights) and reports
which family it used.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .chevalley import ChevalleyAlgebra, build_chevalley
from .linalg import SparseMat
from .rootsys import (
    Coweight,
    DomainError,
    RootSystem,
    Weight,
)


class UnsupportedRepresentationError(ValueError):
    """Requested (type, highest weight) pair has no explicit construction."""


@dataclass(frozen=True)
class Dual:
    """Dual number a + b*eps with eps^2 = 0, exact rational parts."""

    a: Fraction
    b: Fraction

    def __add__(self, other):
        return Dual(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return Dual(self.a - other.a, self.b - other.b)

    def __mul__(self, other):
        return Dual(self.a * other.a, self.a * other.b + self.b * other.a)

    def __truediv__(self, other):
        if other.a == 0:
            raise ZeroDivisionError("dual number with zero real part is not a unit")
        inv_a = Fraction(1) / other.a
        return Dual(self.a * inv_a, (self.b * other.a - self.a * other.b) * inv_a * inv_a)

    def __repr__(self):
        return f"{self.a} + {self.b}e"


DUAL_ONE = Dual(Fraction(1), Fraction(0))


class FiniteRep:
    """An irreducible highest-weight representation with explicit integer
    matrices for every Chevalley basis element."""

    def __init__(self, algebra: ChevalleyAlgebra, highest_weight: Weight,
                 action: Mapping[int, SparseMat], weights, highest_index: int,
                 name: str):
        self.algebra = algebra
        self.root_system = algebra.root_system
        self.highest_weight = highest_weight
        self.action = dict(action)
        self.weights = tuple(weights)
        self.dim = len(self.weights)
        self.highest_index = highest_index
        self.name = name

    def rho(self, elem: Mapping[int, int]) -> SparseMat:
        """Matrix of a Chevalley-algebra element (sparse dict) on V."""
        out = SparseMat(self.dim, self.dim)
        for idx, c in elem.items():
            if not c:
                continue
            for rc, v in self.action[idx].entries.items():
                out.add_to(*rc, c * v)
        return out

    def __repr__(self):
        return f"FiniteRep({self.name}, dim={self.dim})"


@dataclass(frozen=True)
class LoopElement:
    """Finite sum of terms x * t^degree with degree <= -1.

    ``terms`` maps each degree to a Chevalley-algebra element (sparse dict
    over basis indices).  The zero loop element has no terms.
    """

    terms: tuple  # ((degree, ((basis_idx, coeff), ...)), ...)

    def __post_init__(self):
        for degree, elem in self.terms:
            if degree > -1:
                raise ValueError(f"loop element degrees must be <= -1, got {degree}")
            if not elem:
                raise ValueError("empty term in loop element")

    @classmethod
    def from_dict(cls, terms: Mapping[int, Mapping[int, int]]) -> "LoopElement":
        packed = tuple(
            (degree, tuple(sorted((i, c) for i, c in elem.items() if c)))
            for degree, elem in sorted(terms.items())
            if any(elem.values())
        )
        return cls(packed)

    @classmethod
    def single(cls, degree: int, elem: Mapping[int, int]) -> "LoopElement":
        return cls.from_dict({degree: dict(elem)})

    @classmethod
    def zero(cls) -> "LoopElement":
        return cls(())

    def items(self):
        for degree, elem in self.terms:
            yield degree, dict(elem)

    def max_pole(self) -> int:
        """Largest j with a t^{-j} term; 0 for the zero element."""
        return max((-d for d, _ in self.terms), default=0)

    def scaled(self, c: int) -> "LoopElement":
        if c == 0:
            return LoopElement.zero()
        return LoopElement.from_dict(
            {d: {i: c * v for i, v in elem} for d, elem in self.terms}
        )


@dataclass(frozen=True)
class EpsilonLattice:
    """The lattice (1 + X eps) . L0 inside V (x) C[eps]((t)), described
    intensionally by X and the representation.

    Reduction mod eps recovers L0 by construction.  Membership questions
    are answered on the generator images (1 + X eps)(v_i (x) 1): both
    lattices are modules over C[[t]][eps] and L0 is generated by the
    v_i (x) 1, so containment of the generator images is containment of
    the lattices.
    """

    rep: FiniteRep
    X: LoopElement

    def generator_image(self, i: int) -> dict:
        """Image of v_i (x) 1, as {t-degree: vector}, vector = {row: Dual}."""
        out = {0: {i: DUAL_ONE}}
        for degree, elem in self.X.items():
            col = self.rep.rho(elem).column(i)
            if col:
                out[degree] = {
                    r: Dual(Fraction(0), Fraction(v)) for r, v in col.items()
                }
        return out


def _validate_coweight(rs: RootSystem, lam: Coweight) -> Coweight:
    if len(lam.coords) != rs.rank:
        raise DomainError("rank mismatch")
    lam = rs.to_simple_coroot(lam)
    if all(c == 0 for c in lam.coords):
        raise DomainError("coweight must be nonzero")
    if not rs.is_dominant_coweight(lam):
        raise DomainError(f"coweight {lam.coords} is not dominant")
    return lam


# -- representation constructions ---------------------------------------


def make_adjoint_rep(ca: ChevalleyAlgebra) -> FiniteRep:
    """The adjoint representation, acting on the algebra's own basis."""
    rs = ca.root_system
    action = {}
    for m in range(ca.dim):
        mat = SparseMat(ca.dim, ca.dim)
        for j in range(ca.dim):
            for k, c in ca.bracket_basis(m, j):
                mat.add_to(k, j, c)
        action[m] = mat
    weights = [rs.weight_in_fundamental(ca.weight_of_basis(i)) for i in range(ca.dim)]
    return FiniteRep(
        algebra=ca,
        highest_weight=rs.weight_in_fundamental(ca.theta),
        action=action,
        weights=weights,
        highest_index=ca.theta_index,
        name=f"adjoint({rs.cartan_type})",
    )


def _exact_div(mat: SparseMat, n: int) -> SparseMat:
    out = SparseMat(mat.nrows, mat.ncols)
    for rc, v in mat.entries.items():
        q, r = divmod(v, n)
        if r:
            raise AssertionError("non-integral matrix division while extending generators")
        out.entries[rc] = q
    return out


def _extend_from_generators(ca: ChevalleyAlgebra, gens: dict, dim: int) -> dict:
    """Extend matrices given on simple root vectors and the Cartan to the
    whole basis, using the algebra's own extraspecial decompositions."""
    action = dict(gens)
    for gamma in sorted(ca.root_system.positive_roots, key=lambda r: (sum(r), r)):
        gi = ca.root_index[gamma]
        if gi in action:
            continue
        alpha, beta = ca.extraspecial[gamma]
        for a, b, g in (
            (alpha, beta, gamma),
            (_neg(alpha), _neg(beta), _neg(gamma)),
        ):
            n = ca.nconst(a, b)
            mat = action[ca.root_index[a]].commutator(action[ca.root_index[b]])
            action[ca.root_index[g]] = _exact_div(mat, n)
    return action


def _neg(root):
    return tuple(-c for c in root)


def _a1_rep(ca: ChevalleyAlgebra, n: int) -> FiniteRep:
    """Standard (n+1)-dimensional sl2 module with integer matrices."""
    rs = ca.root_system
    e = SparseMat(n + 1, n + 1, {(i - 1, i): n - i + 1 for i in range(1, n + 1)})
    f = SparseMat(n + 1, n + 1, {(i + 1, i): i + 1 for i in range(n)})
    h = SparseMat(n + 1, n + 1, {(i, i): n - 2 * i for i in range(n + 1) if n != 2 * i})
    action = {ca.root_index[(1,)]: e, ca.root_index[(-1,)]: f, ca.h_index(0): h}
    weights = [Weight.fundamental((n - 2 * i,)) for i in range(n + 1)]
    return FiniteRep(ca, Weight.fundamental((n,)), action, weights, 0,
                     name=f"A1-V{n}")


def _a2_standard(ca: ChevalleyAlgebra) -> FiniteRep:
    def E(r, c):
        return SparseMat(3, 3, {(r, c): 1})

    gens = {
        ca.root_index[(1, 0)]: E(0, 1),
        ca.root_index[(0, 1)]: E(1, 2),
        ca.root_index[(-1, 0)]: E(1, 0),
        ca.root_index[(0, -1)]: E(2, 1),
        ca.h_index(0): SparseMat(3, 3, {(0, 0): 1, (1, 1): -1}),
        ca.h_index(1): SparseMat(3, 3, {(1, 1): 1, (2, 2): -1}),
    }
    action = _extend_from_generators(ca, gens, 3)
    weights = [Weight.fundamental((1, 0)), Weight.fundamental((-1, 1)),
               Weight.fundamental((0, -1))]
    return FiniteRep(ca, Weight.fundamental((1, 0)), action, weights, 0,
                     name="A2-V(1,0)")


def _a2_dual(ca: ChevalleyAlgebra) -> FiniteRep:
    std = _a2_standard(ca)
    action = {i: m.transpose().scaled(-1) for i, m in std.action.items()}
    weights = [Weight.fundamental(tuple(-c for c in w.coords)) for w in std.weights]
    return FiniteRep(ca, Weight.fundamental((0, 1)), action, weights, 2,
                     name="A2-V(0,1)")


@lru_cache(maxsize=None)
def _build_rep_cached(rs_id, rs: RootSystem, eta_coords: tuple) -> FiniteRep:
    ca = build_chevalley(rs)
    ct = rs.cartan_type
    if ct.series == "A" and ct.rank == 1:
        n = eta_coords[0]
        if n >= 1:
            return _a1_rep(ca, n)
    if ct.series == "A" and ct.rank == 2:
        if eta_coords == (1, 0):
            return _a2_standard(ca)
        if eta_coords == (0, 1):
            return _a2_dual(ca)
    theta_fund = rs.weight_in_fundamental(ca.theta)
    if eta_coords == theta_fund.coords:
        return make_adjoint_rep(ca)
    raise UnsupportedRepresentationError(
        f"unsupported representation for {ct}: highest weight {eta_coords} "
        "(fundamental-weight coordinates); supported: A1 any n*omega_1, "
        "A2 omega_1 or omega_2, and the adjoint (highest root) for any type"
    )


def build_rep(rs: RootSystem, eta: Weight) -> FiniteRep:
    """Explicit V_eta for the supported (type, eta) catalog.

    Supported: A1 with eta = n*omega_1, A2 with eta a fundamental weight,
    and eta = theta (the adjoint representation) for every type.  Anything
    else raises UnsupportedRepresentationError; there is no fallback.
    """
    eta_f = rs.convert(eta, "fundamental-weight")
    if len(eta_f.coords) != rs.rank:
        raise DomainError("rank mismatch")
    return _build_rep_cached(id(rs), rs, eta_f.coords)


# -- the oracle itself ---------------------------------------------------


def epsilon_membership(rep: FiniteRep, lam: Coweight, X: LoopElement) -> bool:
    """Whether (1 - X eps) . L0 lands in t^{-<lam,eta>} L0 for eta the
    highest weight of rep.

    Checked on the generator images of the epsilon lattice: for every
    basis vector v and every term x*t^{-j} of X with rho(x)v != 0 we need
    j <= <lam, eta>.  X = 0 is vacuously a member.
    """
    rs = rep.root_system
    lam = _validate_coweight(rs, lam)
    cutoff = rs.pairing(lam, rep.highest_weight)
    lattice = EpsilonLattice(rep, X)
    for i in range(rep.dim):
        for degree, vec in lattice.generator_image(i).items():
            if degree < -cutoff and any(d.b for d in vec.values()):
                return False
    return True


def fm_membership(rs: RootSystem, lam: Coweight, X: LoopElement, reps) -> bool:
    """Conjunction of epsilon_membership over a nonempty finite family.

    A necessary condition for FM tangent membership; it is exact for the
    homogeneous lowest-root vectors x_{-theta} t^{-k} whenever the family
    realizes the minimum pairing, since rho(x_{-theta}) never kills the
    highest weight vector (<eta, theta^vee> > 0 for nonzero dominant eta).
    """
    reps = list(reps)
    if not reps:
        raise ValueError("fm_membership needs a nonempty representation family")
    return all(epsilon_membership(rep, lam, X) for rep in reps)


def weight_sum_zero(rep: FiniteRep) -> bool:
    """True iff the multiset of weights of rep sums to zero."""
    total = [0] * rep.root_system.rank
    for w in rep.weights:
        for i, c in enumerate(w.coords):
            total[i] += c
    return all(c == 0 for c in total)


def default_truncation(rep: FiniteRep, lam: Coweight, X: LoopElement) -> int:
    """Smallest window exposing both lattice inclusions: max pole order of
    X plus <lam, eta> plus one."""
    lam = _validate_coweight(rep.root_system, lam)
    return X.max_pole() + rep.root_system.pairing(lam, rep.highest_weight) + 1


def epsilon_window_matrix(rep: FiniteRep, X: LoopElement, N: int) -> SparseMat:
    """The eps-part B of the matrix of (1 + X eps) on the finite free
    dual-number module t^{-N} L0 / t^N L0.

    Window basis: v_r (x) t^m for -N <= m < N, flattened as
    (m + N) * dim + r.  Image components below t^{-N} fall outside the
    window and are truncated (the finite-quotient strategy).
    """
    d = rep.dim
    B = SparseMat(2 * N * d, 2 * N * d)
    for degree, elem in X.items():
        mat = rep.rho(elem)
        for (r, c), v in mat.entries.items():
            for msrc in range(-N, N):
                mdst = msrc + degree
                if mdst >= -N:
                    B.add_to((mdst + N) * d + r, (msrc + N) * d + c, v)
    return B


def wedge_top_check(rep: FiniteRep, lam: Coweight, X: LoopElement, N: int) -> bool:
    """Top-exterior-power agreement of (1 + X eps) L0 and L0 on the
    truncation window mod t^N.

    The matrix on the window is I + eps*B with B integral, so its exact
    dual-number determinant is 1 + tr(B) eps (eps^2 = 0 kills everything
    else).  The check passes iff that determinant is exactly 1.  B has
    empty diagonal whenever X strictly lowers t-degree, which is the
    content of the wedge-top condition being automatic.
    """
    if N < 1 or N <= X.max_pole():
        raise DomainError(
            f"truncation window N={N} must exceed every pole order of X "
            f"(max pole {X.max_pole()})"
        )
    _validate_coweight(rep.root_system, lam)
    B = epsilon_window_matrix(rep, X, N)
    trace = sum(v for (r, c), v in B.entries.items() if r == c)
    det = Dual(Fraction(1), Fraction(trace))
    return det == DUAL_ONE
