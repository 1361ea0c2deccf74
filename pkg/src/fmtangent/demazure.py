"""Level-one basic representation truncated to rotation degrees 0, -1, -2,
and the Demazure/Polo route to the Schubert tangent space at theta^vee.

The degree pieces, built on the presentation of the basic module by the
single relation (x_theta t^{-1})^2 applied to the highest weight vector v:

* degree  0: the line spanned by v;
* degree -1: g t^{-1} . v, one basis vector (y_i t^{-1}) v per Chevalley
  basis element, no relations;
* degree -2: (y_i t^{-2}) v together with the symmetric products
  (y_a t^{-1})(y_b t^{-1}) v for a <= b, modulo the one-dimensional
  relation line (x_theta t^{-1})^2 v.

The vector v is killed by all of g t^0 (level-one highest weight line) and
the central element acts as 1, so

    (x t^1) (y t^{-1}) v = (x | y) v

with the invariant form normalized by (x_theta | x_{-theta}) = 1.

The truncated space is a module over the lowering operators and carries
the degree-preserving/raising actions where they are well defined; the
raising action x t^1 descends to degree -2 classes because it annihilates
the relation vector (asserted by the test suite for every built type).
The degree-preserving action x t^0 is exposed on degrees 0 and -1 only,
which is all the Demazure closure needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .chevalley import ChevalleyAlgebra
from .lattice_oracle import LoopElement
from .linalg import RowEchelon
from .rootsys import DomainError


@dataclass(frozen=True)
class DemazureClosure:
    """Smallest subspace of degrees {0, -1} containing the extremal vector
    and closed under all x t^0 and x t^1 actions."""

    graded_dims: dict
    echelons: dict  # degree -> RowEchelon


class TruncatedBasicRep:
    """Exact arithmetic model of the degree >= -2 part of the level-one
    basic module.  Immutable after construction."""

    def __init__(self, ca: ChevalleyAlgebra):
        self.algebra = ca
        n = ca.dim
        self.theta_index = ca.theta_index
        self._relation_key = ("s", ca.theta_index, ca.theta_index)
        self.graded_dims = {0: 1, -1: n, -2: n + n * (n + 1) // 2 - 1}
        self._closure = None

    # -- degree -2 class arithmetic ------------------------------------

    def reduce2(self, vec: dict) -> dict:
        """Normal form of a degree -2 vector modulo the relation line.

        The relation vector is the single coordinate ("s", th, th), so the
        class representative just drops that key.
        """
        if self._relation_key in vec:
            vec = dict(vec)
            del vec[self._relation_key]
        return vec

    def relation_vector(self) -> dict:
        """(x_theta t^{-1})^2 v in raw PBW coordinates: pure symmetric
        square, zero g t^{-2} component."""
        return {self._relation_key: 1}

    # -- lowering operators (the n^- module structure) ------------------

    def lower(self, elem: dict, pole: int, gvec_deg: int, vec: dict) -> tuple:
        """Apply (y t^{-pole}) to a homogeneous vector of degree gvec_deg.

        Supported: pole 1 on degrees 0 and -1, pole 2 on degree 0; the
        output degree is gvec_deg - pole.  Degree -2 output is returned in
        reduced class coordinates.
        """
        ca = self.algebra
        if pole == 1 and gvec_deg == 0:
            c = vec.get(0, 0)
            return -1, {i: c * y for i, y in elem.items() if c * y}
        if pole == 2 and gvec_deg == 0:
            c = vec.get(0, 0)
            return -2, self.reduce2({("t2", i): c * y for i, y in elem.items() if c * y})
        if pole == 1 and gvec_deg == -1:
            out = {}
            for a, ya in elem.items():
                if not ya:
                    continue
                for b, cb in vec.items():
                    coeff = ya * cb
                    if not coeff:
                        continue
                    if a <= b:
                        key = ("s", a, b)
                        out[key] = out.get(key, 0) + coeff
                    else:
                        # (y_a t^{-1})(y_b t^{-1}) = (y_b t^{-1})(y_a t^{-1})
                        #                            + ([y_a, y_b] t^{-2})
                        key = ("s", b, a)
                        out[key] = out.get(key, 0) + coeff
                        for k, nconst in ca.bracket_basis(a, b):
                            k2 = ("t2", k)
                            w = out.get(k2, 0) + coeff * nconst
                            if w:
                                out[k2] = w
                            else:
                                del out[k2]
            return -2, self.reduce2({k: v for k, v in out.items() if v})
        raise DomainError(
            f"lowering by t^-{pole} from degree {gvec_deg} leaves the truncation"
        )

    def loop_vector(self, X: LoopElement) -> dict:
        """X . v as {degree: vector} for X with poles of order at most 2."""
        if X.max_pole() > 2:
            raise DomainError("loop element has poles outside the degree >= -2 truncation")
        out = {-1: {}, -2: {}}
        for degree, elem in X.items():
            d, vec = self.lower(elem, -degree, 0, {0: 1})
            for k, v in vec.items():
                w = out[d].get(k, 0) + v
                if w:
                    out[d][k] = w
                else:
                    del out[d][k]
        return out

    # -- degree-preserving and raising actions --------------------------

    def act_t0(self, elem: dict, gvec_deg: int, vec: dict) -> dict:
        """x t^0 on degree 0 (zero: v is a highest weight line for all of
        g) or on degree -1 (the adjoint action)."""
        if gvec_deg == 0:
            return {}
        if gvec_deg != -1:
            raise DomainError("x t^0 is exposed on degrees 0 and -1 only")
        ca = self.algebra
        out = {}
        for zi, cz in elem.items():
            if not cz:
                continue
            for b, cb in vec.items():
                for k, n in ca.bracket_basis(zi, b):
                    w = out.get(k, 0) + cz * cb * n
                    if w:
                        out[k] = w
                    else:
                        del out[k]
        return out

    def act_t1(self, elem: dict, gvec_deg: int, vec: dict) -> tuple:
        """x t^1, raising the degree by one.

        On degree -1: (x t)(y t^{-1}) v = (x|y) v.  On degree -2 classes:
        (x t)(y t^{-2}) v = ([x,y] t^{-1}) v and
        (x t)(y_a t^{-1})(y_b t^{-1}) v = ([[x,y_a],y_b] t^{-1}) v
          + (x|y_a)(y_b t^{-1}) v + (x|y_b)(y_a t^{-1}) v.
        """
        ca = self.algebra
        if gvec_deg == 0:
            return 1, {}
        if gvec_deg == -1:
            c = sum(
                (cz * cb * ca.form_basis(zi, b)
                 for zi, cz in elem.items() for b, cb in vec.items()),
                Fraction(0),
            )
            return 0, ({0: c} if c else {})
        if gvec_deg != -2:
            raise DomainError("x t^1 is exposed on degrees 0, -1, -2 only")

        out = {}

        def bump(k, v):
            if not v:
                return
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                del out[k]

        for zi, cz in elem.items():
            if not cz:
                continue
            for key, c in vec.items():
                coeff = cz * c
                if key[0] == "t2":
                    for k, n in ca.bracket_basis(zi, key[1]):
                        bump(k, coeff * n)
                else:
                    _, a, b = key
                    inner = ca.bracket({zi: 1}, {a: 1})
                    for k, n in ca.bracket(inner, {b: 1}).items():
                        bump(k, coeff * n)
                    fa = ca.form_basis(zi, a)
                    if fa:
                        bump(b, coeff * fa)
                    fb = ca.form_basis(zi, b)
                    if fb:
                        bump(a, coeff * fb)
        return -1, out

    # -- extremal vector and Demazure closure ---------------------------

    def extremal_vector(self) -> dict:
        """(x_{-theta} t^{-1}) v: t-weight -theta, rotation degree -1,
        lowest weight vector for the degree -1 copy of the algebra."""
        neg_theta = tuple(-c for c in self.algebra.theta)
        return {self.algebra.root_index[neg_theta]: 1}

    def demazure_closure(self) -> DemazureClosure:
        ca = self.algebra
        gens = []
        for i in range(ca.rank):
            simple = ca.root_system.simple_roots[i]
            gens.append(ca.root_index[simple])
            gens.append(ca.root_index[tuple(-c for c in simple)])
            gens.append(ca.h_index(i))

        ech = {0: RowEchelon(), -1: RowEchelon()}
        queue = [(-1, self.extremal_vector())]
        sweep = gens
        while queue:
            deg, vec = queue.pop()
            if not vec or not ech[deg].add(vec):
                continue
            for z in sweep:
                img = self.act_t0({z: 1}, deg, vec)
                if img and not ech[deg].contains(img):
                    queue.append((deg, img))
                d1, img1 = self.act_t1({z: 1}, deg, vec)
                if img1 and not ech[d1].contains(img1):
                    queue.append((d1, img1))
            if not queue and sweep is gens and ech[-1].dim < ca.dim:
                # Generator closure implies closure under all of g[t] by
                # bracket generation; re-sweep with the full basis anyway
                # if the generated space is proper, as a hard guarantee.
                sweep = list(range(ca.dim))
                queue = [
                    (d, dict(row)) for d in (-1, 0) for row in ech[d].rows.values()
                ]
                ech = {0: RowEchelon(), -1: RowEchelon()}
        dims = {0: ech[0].dim, -1: ech[-1].dim, -2: 0}
        return DemazureClosure(graded_dims=dims, echelons=ech)

    def polo_membership(self, X: LoopElement) -> bool:
        """Whether X . v lies in the Demazure closure.

        X may have t^{-1} and t^{-2} terms only; deeper poles are outside
        the truncation and rejected.
        """
        xv = self.loop_vector(X)
        closure = self._closure_cached()
        if xv[-2]:
            # closure has no degree -2 part
            return False
        return closure.echelons[-1].contains(xv[-1])

    def _closure_cached(self) -> DemazureClosure:
        if self._closure is None:
            self._closure = self.demazure_closure()
        return self._closure

    def __repr__(self):
        return (f"TruncatedBasicRep({self.algebra.root_system.cartan_type}, "
                f"dims={self.graded_dims})")


@lru_cache(maxsize=None)
def _build_cached(ca_id: int, ca: ChevalleyAlgebra) -> TruncatedBasicRep:
    return TruncatedBasicRep(ca)


def build_truncated_rep(ca: ChevalleyAlgebra) -> TruncatedBasicRep:
    return _build_cached(id(ca), ca)


def schubert_tangent_dim(ca: ChevalleyAlgebra) -> int:
    """Tangent dimension of the Schubert variety at the base point for
    lam = theta^vee, read off from Polo membership degree by degree."""
    tr = build_truncated_rep(ca)
    closure = tr._closure_cached()
    return closure.graded_dims[-1]
