"""Exact root-system data for the simple types A-G.

Everything here is integer or Fraction arithmetic; there is no floating
point.  Conventions, fixed once and imported by every other module:

* Simple roots carry Bourbaki numbering.
* The Cartan matrix is ``A[i][j] = <alpha_j^vee, alpha_i> =
  2(alpha_i, alpha_j)/(alpha_j, alpha_j)``.
* Roots are integer coordinate vectors in the simple-root basis; coweights
  are canonically stored in the simple-coroot basis (simply-connected
  convention: integral coordinates only).
* The invariant bilinear form is normalized so long roots have squared
  length 2, hence ``(theta, theta) = 2`` for the highest root theta.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

SERIES = ("A", "B", "C", "D", "E", "F", "G")

# (min rank, max rank or None for unbounded)
_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

WEIGHT_BASES = ("simple-root", "fundamental-weight")
COWEIGHT_BASES = ("simple-coroot", "fundamental-coweight")


def _int_coords(coords) -> tuple:
    out = []
    for c in coords:
        if c != int(c):
            raise ValueError(f"coordinates must be integers, got {c!r}")
        out.append(int(c))
    return tuple(out)


class DomainError(ValueError):
    """A value is outside the mathematical domain of an operation."""


class NotDominantError(DomainError):
    pass


class NotInLatticeError(DomainError):
    """Conversion target requires lattice membership and the input fails it."""


@dataclass(frozen=True)
class CartanType:
    """A simple series label plus rank, e.g. CartanType('E', 8)."""

    series: str
    rank: int

    def __post_init__(self):
        if self.series not in SERIES:
            raise ValueError(f"unknown series {self.series!r}, expected one of {SERIES}")
        lo, hi = _RANK_BOUNDS[self.series]
        if self.rank < lo:
            raise ValueError(f"rank must be >= {lo} for series {self.series}, got {self.rank}")
        if hi is not None and self.rank > hi:
            raise ValueError(f"rank must be <= {hi} for series {self.series}, got {self.rank}")

    @classmethod
    def parse(cls, label: str) -> "CartanType":
        label = label.strip()
        if len(label) < 2 or not label[1:].isdigit():
            raise ValueError(f"cannot parse Cartan type {label!r} (expected e.g. 'E8')")
        return cls(label[0].upper(), int(label[1:]))

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"


@dataclass(frozen=True)
class Weight:
    """Integer coordinate vector in a declared weight basis."""

    coords: tuple
    basis: str

    def __post_init__(self):
        if self.basis not in WEIGHT_BASES:
            raise ValueError(f"weight basis must be one of {WEIGHT_BASES}")
        object.__setattr__(self, "coords", _int_coords(self.coords))

    @classmethod
    def simple_root(cls, coords) -> "Weight":
        return cls(tuple(coords), "simple-root")

    @classmethod
    def fundamental(cls, coords) -> "Weight":
        return cls(tuple(coords), "fundamental-weight")


@dataclass(frozen=True)
class Coweight:
    """Integer coordinate vector in a declared coweight basis."""

    coords: tuple
    basis: str

    def __post_init__(self):
        if self.basis not in COWEIGHT_BASES:
            raise ValueError(f"coweight basis must be one of {COWEIGHT_BASES}")
        object.__setattr__(self, "coords", _int_coords(self.coords))

    @classmethod
    def simple_coroot(cls, coords) -> "Coweight":
        return cls(tuple(coords), "simple-coroot")

    @classmethod
    def fundamental(cls, coords) -> "Coweight":
        return cls(tuple(coords), "fundamental-coweight")


def _cartan_matrix(ct: CartanType) -> tuple:
    """Cartan matrix with A[i][j] = 2(alpha_i,alpha_j)/(alpha_j,alpha_j)."""
    n = ct.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if ct.series in ("A", "B", "C", "F", "G"):
        for i in range(n - 1):
            bond(i, i + 1)
    if ct.series == "B" and n >= 2:
        bond(n - 2, n - 1, aij=-2, aji=-1)  # alpha_n short
    if ct.series == "C" and n >= 2:
        bond(n - 2, n - 1, aij=-1, aji=-2)
    if ct.series == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    if ct.series == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for i, j in zip(chain, chain[1:]):
            bond(i, j)
        bond(1, 3)  # node 2 attaches to node 4
    if ct.series == "F":
        bond(1, 2, aij=-2, aji=-1)  # alpha_1, alpha_2 long; alpha_3, alpha_4 short
    if ct.series == "G":
        bond(0, 1, aij=-1, aji=-3)  # alpha_1 short, alpha_2 long
    return tuple(tuple(row) for row in a)


def _symmetrizer(cartan: Sequence[Sequence[int]]) -> tuple:
    """Diagonal d with A[i][j]*d[j] symmetric, normalized so max(d) = 1.

    d[i] = (alpha_i, alpha_i)/2, so long simple roots get d = 1 and the
    form satisfies (theta, theta) = 2.
    """
    n = len(cartan)
    d = [None] * n
    d[0] = Fraction(1)
    # Dynkin diagrams are connected, so ratios propagate from node 0.
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(n):
            if i != j and cartan[i][j] != 0 and d[j] is None:
                # A[i][j] d[j] = A[j][i] d[i]
                d[j] = d[i] * Fraction(cartan[j][i], cartan[i][j])
                todo.append(j)
    top = max(d)
    return tuple(di / top for di in d)


def _invert(matrix: Sequence[Sequence[int]]) -> tuple:
    """Exact inverse via Gauss-Jordan over Fraction."""
    n = len(matrix)
    aug = [[Fraction(matrix[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


class RootSystem:
    """Immutable root-system data for one simple type.

    Attributes are never mutated after construction; instances are safe to
    share across threads.  Use :func:`build_root_system` (which caches) to
    obtain instances.
    """

    def __init__(self, cartan_type: CartanType):
        self.cartan_type = cartan_type
        self.rank = cartan_type.rank
        self.cartan_matrix = _cartan_matrix(cartan_type)
        self.symmetrizer = _symmetrizer(self.cartan_matrix)
        self.inverse_cartan = _invert(self.cartan_matrix)
        self.simple_roots = tuple(
            tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)
        )
        self.positive_roots = self._generate_positive_roots()
        self.roots = self.positive_roots + tuple(
            tuple(-c for c in r) for r in self.positive_roots
        )
        self._root_set = frozenset(self.roots)

    # -- construction ------------------------------------------------

    def _pairing_with_simple_coroot(self, root, i: int) -> int:
        """<alpha_i^vee, beta> for beta in simple-root coordinates."""
        return sum(c * self.cartan_matrix[j][i] for j, c in enumerate(root))

    def _generate_positive_roots(self) -> tuple:
        """Root-string closure upward from the simple roots.

        Every positive root of height h+1 is beta + alpha_i for some
        positive root beta of height h, so a height-by-height sweep using
        the string condition q = p - <alpha_i^vee, beta> is complete.
        """
        known = set(self.simple_roots)
        frontier = list(self.simple_roots)
        while frontier:
            nxt = []
            for beta in frontier:
                for i in range(self.rank):
                    p = 0
                    down = tuple(c - int(j == i) for j, c in enumerate(beta))
                    while down in known:
                        p += 1
                        down = tuple(c - int(j == i) for j, c in enumerate(down))
                    if p - self._pairing_with_simple_coroot(beta, i) >= 1:
                        up = tuple(c + int(j == i) for j, c in enumerate(beta))
                        if up not in known:
                            known.add(up)
                            nxt.append(up)
            frontier = nxt
        return tuple(sorted(known, key=lambda r: (sum(r), r)))

    # -- basic queries -----------------------------------------------

    def is_root(self, v) -> bool:
        return tuple(v) in self._root_set

    def dim_g(self) -> int:
        """dim of the simple Lie algebra: |roots| + rank."""
        return len(self.roots) + self.rank

    def root_inner(self, a, b) -> Fraction:
        """(a, b) for roots/root-lattice vectors in simple-root coordinates."""
        if len(a) != self.rank or len(b) != self.rank:
            raise DomainError("rank mismatch")
        return sum(
            Fraction(a[i]) * self.cartan_matrix[i][j] * self.symmetrizer[j] * b[j]
            for i in range(self.rank)
            for j in range(self.rank)
        )

    def highest_root(self) -> Weight:
        """The unique dominance-maximal root, as a weight in simple-root coordinates."""
        theta = max(self.positive_roots, key=lambda r: (sum(r), r))
        return Weight.simple_root(theta)

    def coroot(self, alpha) -> Coweight:
        """alpha^vee = 2 alpha/(alpha, alpha) in simple-coroot coordinates."""
        alpha = tuple(alpha)
        if alpha not in self._root_set:
            raise DomainError(f"{alpha} is not a root of {self.cartan_type}")
        half_norm = self.root_inner(alpha, alpha) / 2
        coords = []
        for i, c in enumerate(alpha):
            x = Fraction(c) * self.symmetrizer[i] / half_norm
            if x.denominator != 1:
                raise AssertionError("coroot coordinates must be integral")
            coords.append(int(x))
        return Coweight.simple_coroot(coords)

    def pairing(self, lam: Coweight, eta: Weight) -> int:
        """Exact integer <lam, eta>, bilinear, with <alpha_j^vee, omega_i> = delta_ij."""
        if len(lam.coords) != self.rank or len(eta.coords) != self.rank:
            raise DomainError("rank mismatch")
        lam = self.to_simple_coroot(lam)
        if eta.basis == "fundamental-weight":
            return sum(d * g for d, g in zip(lam.coords, eta.coords))
        # <alpha_j^vee, eta> = sum_i c_i A[i][j]
        return sum(
            d * self._pairing_with_simple_coroot(eta.coords, j)
            for j, d in enumerate(lam.coords)
        )

    def dominance_leq(self, mu: Coweight, lam: Coweight) -> bool:
        """mu <= lam iff lam - mu is a nonnegative sum of positive coroots."""
        mu = self.to_simple_coroot(mu)
        lam = self.to_simple_coroot(lam)
        return all(l - m >= 0 for m, l in zip(mu.coords, lam.coords))

    def is_dominant_coweight(self, lam: Coweight) -> bool:
        lam = self.to_simple_coroot(lam)
        return all(
            sum(self.cartan_matrix[i][j] * d for j, d in enumerate(lam.coords)) >= 0
            for i in range(self.rank)
        )

    def normalized_form(self, lam: Coweight, mu: Coweight) -> Fraction:
        """The invariant form on coweights, with (theta^vee, theta^vee) = 2.

        (alpha_i^vee, alpha_j^vee) = A[i][j]/d_i under the long-root
        normalization.
        """
        if len(lam.coords) != self.rank or len(mu.coords) != self.rank:
            raise DomainError("rank mismatch")
        lam = self.to_simple_coroot(lam)
        mu = self.to_simple_coroot(mu)
        return sum(
            Fraction(lam.coords[i]) * self.cartan_matrix[i][j] / self.symmetrizer[i] * mu.coords[j]
            for i in range(self.rank)
            for j in range(self.rank)
        )

    # -- basis conversion --------------------------------------------

    def to_simple_coroot(self, lam: Coweight) -> Coweight:
        if lam.basis == "simple-coroot":
            return lam
        return self.convert(lam, "simple-coroot")

    def convert(self, v, target: str):
        """Exact basis conversion; raises NotInLatticeError when the target
        basis demands integrality the input does not have."""
        if isinstance(v, Coweight):
            if target not in COWEIGHT_BASES:
                raise ValueError(f"bad target basis {target!r} for a coweight")
            if v.basis == target:
                return v
            if target == "simple-coroot":
                # lam = sum f_i omega_i^vee  ->  d = A^{-1} f
                coords = [
                    sum(self.inverse_cartan[i][j] * v.coords[j] for j in range(self.rank))
                    for i in range(self.rank)
                ]
                if any(c.denominator != 1 for c in coords):
                    raise NotInLatticeError(
                        f"{v.coords} (fundamental-coweight basis) is not in the coroot lattice"
                    )
                return Coweight.simple_coroot(int(c) for c in coords)
            # d -> f = A d, always integral
            coords = [
                sum(self.cartan_matrix[i][j] * v.coords[j] for j in range(self.rank))
                for i in range(self.rank)
            ]
            return Coweight.fundamental(coords)
        if isinstance(v, Weight):
            if target not in WEIGHT_BASES:
                raise ValueError(f"bad target basis {target!r} for a weight")
            if v.basis == target:
                return v
            if target == "simple-root":
                # eta = sum g_i omega_i  ->  c with A^T c = g
                coords = [
                    sum(self.inverse_cartan[j][i] * v.coords[j] for j in range(self.rank))
                    for i in range(self.rank)
                ]
                if any(c.denominator != 1 for c in coords):
                    raise NotInLatticeError(
                        f"{v.coords} (fundamental-weight basis) is not in the root lattice"
                    )
                return Weight.simple_root(int(c) for c in coords)
            coords = [
                self._pairing_with_simple_coroot(v.coords, i) for i in range(self.rank)
            ]
            return Weight.fundamental(coords)
        raise TypeError(f"expected Weight or Coweight, got {type(v).__name__}")

    def weight_in_fundamental(self, root) -> Weight:
        """The weight of a root vector, in fundamental-weight coordinates."""
        return Weight.fundamental(
            self._pairing_with_simple_coroot(root, i) for i in range(self.rank)
        )

    # -- serialization -----------------------------------------------

    def to_json_dict(self) -> dict:
        """Canonical JSON shape: explicit Cartan matrix, lexicographically
        sorted roots.  Stable across runs for golden-file testing."""
        return {
            "type": str(self.cartan_type),
            "rank": self.rank,
            "cartan_matrix": [list(row) for row in self.cartan_matrix],
            "symmetrizer": [str(d) for d in self.symmetrizer],
            "roots": sorted([list(r) for r in self.roots]),
            "positive_roots": sorted([list(r) for r in self.positive_roots]),
        }

    def __repr__(self) -> str:
        return f"RootSystem({self.cartan_type})"


@lru_cache(maxsize=None)
def build_root_system(ct: CartanType) -> RootSystem:
    """Build (and cache) the root system for a valid Cartan type."""
    return RootSystem(ct)


def dim_g(rs: RootSystem) -> int:
    return rs.dim_g()


def highest_root(rs: RootSystem) -> Weight:
    return rs.highest_root()


def coroot(rs: RootSystem, alpha) -> Coweight:
    return rs.coroot(alpha)


def pairing(rs: RootSystem, lam: Coweight, eta: Weight) -> int:
    return rs.pairing(lam, eta)


def dominance_leq(rs: RootSystem, mu: Coweight, lam: Coweight) -> bool:
    return rs.dominance_leq(mu, lam)


def normalized_form(rs: RootSystem, lam: Coweight, mu: Coweight) -> Fraction:
    return rs.normalized_form(lam, mu)


def convert_basis(rs: RootSystem, v, target: str):
    return rs.convert(v, target)
