"""Integral Chevalley bases with signed structure constants.

The basis is {x_alpha : alpha a root} plus {h_i = alpha_i^vee}.  Signs are
fixed by the extraspecial-pair convention under the total order
(height, then lexicographic coordinates) on positive roots:

* for the extraspecial pair (alpha, beta) of each non-simple positive root
  gamma = alpha + beta, the constant N_{alpha,beta} is +(p+1), where p is
  the length of the descending alpha-string through beta;
* every other constant follows from the Jacobi identity and the relations
  N_{beta,alpha} = -N_{alpha,beta}, N_{-alpha,-beta} = -N_{alpha,beta},
  and, for alpha + beta + gamma = 0,
  N_{alpha,beta}/(gamma,gamma) = N_{beta,gamma}/(alpha,alpha).

The resulting table is integral with |N_{alpha,beta}| = p+1 throughout
(verified exhaustively by the test suite, which also sweeps the Jacobi
identity and checks the adjoint action is a Lie algebra homomorphism).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .rootsys import RootSystem


def _okey(root):
    return (sum(root), root)


class ChevalleyAlgebra:
    """Immutable Chevalley-basis data for one simple type.

    Basis order: positive roots by (height, lex), then their negatives in
    the same order, then h_1..h_rank.  Elements of the algebra are sparse
    dicts {basis index: coefficient}.
    """

    def __init__(self, rs: RootSystem):
        self.root_system = rs
        self.rank = rs.rank
        pos = rs.positive_roots
        self.n_pos = len(pos)
        self.dim = 2 * self.n_pos + self.rank
        self.basis_roots = pos + tuple(tuple(-c for c in r) for r in pos)
        self.root_index = {r: i for i, r in enumerate(self.basis_roots)}
        self._pos_set = frozenset(pos)
        self._root_set = frozenset(self.basis_roots)
        self._norm = {r: rs.root_inner(r, r) for r in self.basis_roots}
        self._npos = {}
        self._nc_cache = {}
        self.extraspecial = {}  # non-simple positive root -> its extraspecial pair
        self._build_positive_constants()
        self.theta = max(pos, key=_okey)
        self.theta_index = self.root_index[self.theta]
        self.bracket_table = self._build_bracket_table()

    # -- indices and labels --------------------------------------------

    def h_index(self, i: int) -> int:
        return 2 * self.n_pos + i

    def x(self, root) -> dict:
        """The basis vector x_root as an element."""
        return {self.root_index[tuple(root)]: 1}

    def h(self, i: int) -> dict:
        return {self.h_index(i): 1}

    def label(self, idx: int) -> str:
        if idx >= 2 * self.n_pos:
            return f"h{idx - 2 * self.n_pos + 1}"
        return "x(" + ",".join(map(str, self.basis_roots[idx])) + ")"

    def weight_of_basis(self, idx: int):
        """Root of x_alpha, or the zero vector for Cartan elements."""
        if idx >= 2 * self.n_pos:
            return (0,) * self.rank
        return self.basis_roots[idx]

    # -- structure constants --------------------------------------------

    def p_string(self, alpha, beta) -> int:
        """Largest p with beta - p*alpha a root."""
        p = 0
        cur = tuple(b - a for a, b in zip(alpha, beta))
        while cur in self._root_set:
            p += 1
            cur = tuple(c - a for a, c in zip(alpha, cur))
        return p

    def _build_positive_constants(self):
        by_height = {}
        for r in self._pos_set:
            by_height.setdefault(sum(r), []).append(r)
        for h in sorted(by_height):
            if h == 1:
                continue
            for gamma in sorted(by_height[h], key=_okey):
                pairs = []
                for xi in self.root_system.positive_roots:
                    eta = tuple(g - x for x, g in zip(xi, gamma))
                    if eta in self._pos_set and _okey(xi) < _okey(eta):
                        pairs.append((xi, eta))
                pairs.sort(key=lambda p: _okey(p[0]))
                alpha, beta = pairs[0]
                self.extraspecial[gamma] = (alpha, beta)
                n_ex = self.p_string(alpha, beta) + 1
                self._npos[(alpha, beta)] = n_ex
                for xi, eta in pairs[1:]:
                    # Jacobi identity on (x_alpha, x_beta, x_{-xi}), projected
                    # onto the eta root space, solved for N_{xi,eta}.
                    t2 = 0
                    bmx = tuple(b - x for x, b in zip(xi, beta))
                    if bmx in self._root_set:
                        t2 = self.nconst(beta, _neg(xi)) * self.nconst(bmx, alpha)
                    t3 = 0
                    amx = tuple(a - x for x, a in zip(xi, alpha))
                    if amx in self._root_set:
                        t3 = self.nconst(_neg(xi), alpha) * self.nconst(amx, beta)
                    val = self._norm[gamma] * (t2 + t3) / (self._norm[eta] * n_ex)
                    if val.denominator != 1 or val == 0:
                        raise AssertionError(
                            f"structure constant for {xi}+{eta} not a nonzero integer: {val}"
                        )
                    self._npos[(xi, eta)] = int(val)

    def nconst(self, a, b) -> int:
        """N_{a,b} for roots a, b with a+b a root."""
        key = (a, b)
        cached = self._nc_cache.get(key)
        if cached is not None:
            return cached
        apos = a in self._pos_set
        bpos = b in self._pos_set
        if apos and bpos:
            val = self._npos[(a, b)] if _okey(a) < _okey(b) else -self._npos[(b, a)]
        elif not apos and not bpos:
            val = -self.nconst(_neg(a), _neg(b))
        elif not apos:
            val = -self.nconst(b, a)
        else:
            mu, nu = a, _neg(b)
            s = tuple(m - n for m, n in zip(nu, mu))  # nu - mu
            if s in self._pos_set:
                f = Fraction(self._norm[s], self._norm[nu]) * self.nconst(s, mu)
            else:
                s = _neg(s)  # mu - nu, a positive root
                f = -Fraction(self._norm[s], self._norm[mu]) * self.nconst(nu, s)
            if f.denominator != 1:
                raise AssertionError(f"non-integral constant for {a}, {b}")
            val = int(f)
        self._nc_cache[key] = val
        return val

    def _build_bracket_table(self) -> dict:
        rs = self.root_system
        table = {}
        nb = 2 * self.n_pos
        for i, a in enumerate(self.basis_roots):
            for j, b in enumerate(self.basis_roots):
                if i == j:
                    continue
                s = tuple(x + y for x, y in zip(a, b))
                if s in self._root_set:
                    table[(i, j)] = ((self.root_index[s], self.nconst(a, b)),)
                elif all(c == 0 for c in s):
                    # [x_a, x_{-a}] = h_a, the coroot expanded over the h_i
                    cor = rs.coroot(a).coords
                    table[(i, j)] = tuple(
                        (nb + k, c) for k, c in enumerate(cor) if c
                    )
        for k in range(self.rank):
            hk = nb + k
            for i, a in enumerate(self.basis_roots):
                c = rs._pairing_with_simple_coroot(a, k)
                if c:
                    table[(hk, i)] = ((i, c),)
                    table[(i, hk)] = ((i, -c),)
        return table

    # -- algebra operations ----------------------------------------------

    def bracket_basis(self, i: int, j: int) -> tuple:
        return self.bracket_table.get((i, j), ())

    def bracket(self, a: dict, b: dict) -> dict:
        out = {}
        for i, ca in a.items():
            if not ca:
                continue
            for j, cb in b.items():
                if not cb:
                    continue
                for k, n in self.bracket_table.get((i, j), ()):
                    w = out.get(k, 0) + ca * cb * n
                    if w:
                        out[k] = w
                    else:
                        del out[k]
        return out

    def form_basis(self, i: int, j: int) -> Fraction:
        """Invariant form, normalized so (x_theta, x_{-theta}) = 1."""
        nb = 2 * self.n_pos
        if i < nb and j < nb:
            a, b = self.basis_roots[i], self.basis_roots[j]
            if all(x + y == 0 for x, y in zip(a, b)):
                return Fraction(2) / self._norm[a]
            return Fraction(0)
        if i >= nb and j >= nb:
            k, m = i - nb, j - nb
            rs = self.root_system
            return Fraction(rs.cartan_matrix[k][m]) / rs.symmetrizer[k]
        return Fraction(0)

    def form(self, a: dict, b: dict) -> Fraction:
        return sum(
            (ca * cb * self.form_basis(i, j)
             for i, ca in a.items() for j, cb in b.items()),
            Fraction(0),
        )

    def __repr__(self):
        return f"ChevalleyAlgebra({self.root_system.cartan_type}, dim={self.dim})"


def _neg(root):
    return tuple(-c for c in root)


@lru_cache(maxsize=None)
def _build_cached(rs_id: int, rs_ref) -> ChevalleyAlgebra:
    return ChevalleyAlgebra(rs_ref)


def build_chevalley(rs: RootSystem) -> ChevalleyAlgebra:
    """Build (and cache per root-system instance) the Chevalley algebra."""
    return _build_cached(id(rs), rs)


def adjoint_rep(ca: ChevalleyAlgebra):
    """The adjoint representation as an explicit FiniteRep.

    Highest weight vector x_theta; each basis vector carries its root (or
    zero) as weight.
    """
    from .lattice_oracle import make_adjoint_rep

    return make_adjoint_rep(ca)


def jacobi_defect(ca: ChevalleyAlgebra, i: int, j: int, k: int) -> dict:
    """[[i,j],k] + [[j,k],i] + [[k,i],j]; zero dict iff Jacobi holds."""
    ei, ej, ek = {i: 1}, {j: 1}, {k: 1}
    out = {}
    for term in (
        ca.bracket(ca.bracket(ei, ej), ek),
        ca.bracket(ca.bracket(ej, ek), ei),
        ca.bracket(ca.bracket(ek, ei), ej),
    ):
        for idx, c in term.items():
            w = out.get(idx, 0) + c
            if w:
                out[idx] = w
            else:
                del out[idx]
    return out


def dump_bracket_table(ca: ChevalleyAlgebra) -> str:
    """Canonical text dump, one line per nonzero bracket [b_i, b_j], i < j.

    Suitable for diffing against independent computer-algebra output.
    """
    lines = []
    for i in range(ca.dim):
        for j in range(i + 1, ca.dim):
            terms = ca.bracket_basis(i, j)
            if not terms:
                continue
            rhs = " + ".join(
                f"{c}*{ca.label(k)}" for k, c in sorted(terms)
            ).replace("+ -", "- ")
            lines.append(f"[{ca.label(i)}, {ca.label(j)}] = {rhs}")
    return "\n".join(lines) + "\n"
