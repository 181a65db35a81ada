"""Finite crystallographic root systems in Bourbaki numbering.

All arithmetic is exact: integer coordinates for roots and integral
weights, ``fractions.Fraction`` wherever a rational value can occur.
Every identity checked downstream is an exact equality, so nothing in
this package ever touches floating point.

Conventions
-----------
* Simple roots, fundamental weights and Weyl-group letters are indexed
  1..rank externally (Bourbaki numbering); internal arrays are 0-based.
* A ``Weight`` is a coordinate vector in the fundamental-weight basis,
  entry ``j`` being the coroot pairing with the j-th simple coroot.
* A ``Root`` is an integer coordinate vector in the simple-root basis.
* The Cartan matrix is stored as ``A[i][j] = <alpha_j, alpha_i^vee>``,
  so a fundamental-coordinate vector of a root ``beta = sum c_j alpha_j``
  is ``A @ c``.
* Symmetrizers ``d_i`` make ``diag(d) @ A`` symmetric and are normalized
  so short roots have ``(beta, beta)/2 = 1``; pairings of integral
  weights with coroots are then plain integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

Weight = tuple  # fundamental-weight coordinates, ints or Fractions
Root = tuple    # simple-root coordinates, ints

FAMILIES = "ABCDEFG"

# rank constraints per family: (min, max); None means unbounded above
_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

# classical |R+| counts, used as a build-time self check
_POSITIVE_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


class RootSystemError(ValueError):
    """Invalid root-system data: bad (family, rank), non-root input, ..."""


@dataclass(frozen=True, order=True)
class RootSystemType:
    """A finite type label such as E6 or D7."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_BOUNDS:
            raise RootSystemError(f"unknown family {self.family!r}")
        lo, hi = _RANK_BOUNDS[self.family]
        if not isinstance(self.rank, int) or self.rank < lo or (hi is not None and self.rank > hi):
            raise RootSystemError(
                f"rank {self.rank} out of range for family {self.family} "
                f"(allowed: {lo}..{hi if hi is not None else 'inf'})"
            )

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "RootSystemType":
        text = text.strip()
        if len(text) < 2 or text[0].upper() not in FAMILIES or not text[1:].isdigit():
            raise RootSystemError(f"cannot parse root-system label {text!r}")
        return cls(text[0].upper(), int(text[1:]))

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class Parabolic:
    """Standard parabolic: simple indices split into omitted and retained.

    ``omitted`` holds the simple indices NOT in the Levi; a maximal
    parabolic omits exactly one index.
    """

    rank: int
    omitted: frozenset

    def __post_init__(self):
        om = frozenset(int(j) for j in self.omitted)
        object.__setattr__(self, "omitted", om)
        if not om <= set(range(1, self.rank + 1)):
            raise RootSystemError(f"omitted indices {sorted(om)} out of range 1..{self.rank}")

    @classmethod
    def maximal(cls, rank: int, d: int) -> "Parabolic":
        return cls(rank, frozenset({d}))

    @property
    def retained(self) -> frozenset:
        return frozenset(range(1, self.rank + 1)) - self.omitted

    @property
    def omitted_index(self) -> int:
        """The unique omitted index; raises if not maximal."""
        if len(self.omitted) != 1:
            raise RootSystemError("parabolic is not maximal")
        return next(iter(self.omitted))


def _cartan_and_symmetrizers(rst: RootSystemType):
    """Cartan matrix and symmetrizers per Bourbaki diagram shapes."""
    n = rst.rank
    A = [[0] * n for _ in range(n)]
    for i in range(n):
        A[i][i] = 2

    def bond(i, j, aij=-1, aji=-1):
        # 1-based node labels
        A[i - 1][j - 1] = aij
        A[j - 1][i - 1] = aji

    fam = rst.family
    d = [1] * n
    if fam == "A":
        for i in range(1, n):
            bond(i, i + 1)
    elif fam == "B":
        for i in range(1, n - 1):
            bond(i, i + 1)
        # alpha_n short: <alpha_n, alpha_{n-1}^vee> = -1, <alpha_{n-1}, alpha_n^vee> = -2
        bond(n - 1, n, -1, -2)
        d = [2] * (n - 1) + [1]
    elif fam == "C":
        for i in range(1, n - 1):
            bond(i, i + 1)
        # alpha_n long
        bond(n - 1, n, -2, -1)
        d = [1] * (n - 1) + [2]
    elif fam == "D":
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(n - 2, n)
    elif fam == "E":
        chain = [1, 3, 4, 5, 6, 7, 8][: n - 1]
        for a, b in zip(chain, chain[1:]):
            bond(a, b)
        bond(2, 4)
    elif fam == "F":
        bond(1, 2)
        # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        bond(2, 3, -1, -2)
        bond(3, 4)
        d = [2, 2, 1, 1]
    elif fam == "G":
        # alpha_1 short, alpha_2 long
        bond(1, 2, -3, -1)
        d = [1, 3]
    return tuple(tuple(row) for row in A), tuple(d)


def _invert_integer_matrix(M) -> tuple:
    """Exact inverse of a small integer matrix, rows of Fractions."""
    n = len(M)
    aug = [
        [Fraction(M[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


class RootSystem:
    """One immutable root system: Cartan data plus the positive roots.

    Positive roots are enumerated by reflection closure of the simple
    roots (keep images with all coordinates >= 0) and frozen in
    (height, lexicographic) order.  All derived pairing data is
    precomputed once; instances are safe to share between threads.
    """

    __slots__ = (
        "rst", "rank", "cartan", "sym", "positive_roots",
        "_pos_set", "_halfnorm", "_coroots", "_fund_coords",
        "_cartan_inv", "_root_index",
    )

    def __init__(self, rst: RootSystemType):
        self.rst = rst
        self.rank = rst.rank
        self.cartan, self.sym = _cartan_and_symmetrizers(rst)
        self._cartan_inv = _invert_integer_matrix(self.cartan)
        self.positive_roots = self._close_positive_roots()
        self._pos_set = frozenset(self.positive_roots)
        self._root_index = {c: k for k, c in enumerate(self.positive_roots)}

        want = _POSITIVE_COUNTS[rst.family](self.rank)
        if len(self.positive_roots) != want:
            raise RootSystemError(
                f"{rst}: enumerated {len(self.positive_roots)} positive roots, expected {want}"
            )

        halfnorm, coroots, fund = [], [], []
        A, dvec = self.cartan, self.sym
        for c in self.positive_roots:
            nn = sum(
                c[i] * c[j] * dvec[i] * A[i][j]
                for i in range(self.rank) for j in range(self.rank)
            )
            if nn <= 0 or nn % 2:
                raise RootSystemError(f"{rst}: bad norm {nn} for root {c}")
            hn = nn // 2
            cv = []
            for j in range(self.rank):
                num = c[j] * dvec[j]
                if num % hn:
                    raise RootSystemError(f"{rst}: non-integral coroot for {c}")
                cv.append(num // hn)
            halfnorm.append(hn)
            coroots.append(tuple(cv))
            fund.append(tuple(sum(A[i][j] * c[j] for j in range(self.rank)) for i in range(self.rank)))
        self._halfnorm = tuple(halfnorm)
        self._coroots = tuple(coroots)
        self._fund_coords = tuple(fund)

    # -- enumeration ---------------------------------------------------

    def _close_positive_roots(self):
        n = self.rank
        A = self.cartan
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for c in frontier:
                pair = [sum(A[i][j] * c[j] for j in range(n)) for i in range(n)]
                for i in range(n):
                    if pair[i] == 0:
                        continue
                    img = list(c)
                    img[i] -= pair[i]
                    img = tuple(img)
                    if img not in seen and all(x >= 0 for x in img):
                        seen.add(img)
                        nxt.append(img)
            frontier = nxt
        return tuple(sorted(seen, key=lambda c: (sum(c), c)))

    # -- basic accessors -----------------------------------------------

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    def simple_root(self, i: int) -> Root:
        self._check_index(i)
        return tuple(int(j == i - 1) for j in range(self.rank))

    def fundamental_weight(self, d: int) -> Weight:
        self._check_index(d)
        return tuple(int(j == d - 1) for j in range(self.rank))

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    def is_positive_root(self, coords) -> bool:
        return tuple(coords) in self._pos_set

    def is_root(self, coords) -> bool:
        c = tuple(coords)
        return c in self._pos_set or tuple(-x for x in c) in self._pos_set

    def root_index(self, coords) -> int:
        """Index of a positive root in the canonical enumeration."""
        try:
            return self._root_index[tuple(coords)]
        except KeyError:
            raise RootSystemError(f"{tuple(coords)} is not a positive root of {self.rst}") from None

    def height(self, coords) -> int:
        return sum(coords)

    # -- exact linear algebra -------------------------------------------

    def pairing(self, weight: Sequence, root: Sequence):
        """Coroot pairing <weight, root^vee>, exact.

        ``weight`` is in fundamental coordinates, ``root`` in simple-root
        coordinates; ``root`` must be a root of this system.  The result
        is an ``int`` whenever it is integral (always, for integral
        weights), otherwise a ``Fraction``.
        """
        c = tuple(root)
        neg = False
        if c not in self._pos_set:
            c = tuple(-x for x in c)
            neg = True
            if c not in self._pos_set:
                raise RootSystemError(f"{tuple(root)} is not a root of {self.rst}")
        k = self._root_index[c]
        val = sum(w * cv for w, cv in zip(weight, self._coroots[k]))
        if neg:
            val = -val
        if isinstance(val, Fraction):
            return int(val) if val.denominator == 1 else val
        return val

    def to_root_basis(self, weight: Sequence) -> tuple:
        """Simple-root coordinates of a weight, as exact Fractions."""
        inv = self._cartan_inv
        out = []
        for i in range(self.rank):
            v = sum(inv[i][j] * Fraction(weight[j]) for j in range(self.rank))
            out.append(v)
        return tuple(out)

    def from_root_basis(self, coords: Sequence) -> Weight:
        """Fundamental coordinates of ``sum coords_j alpha_j``."""
        A = self.cartan
        out = []
        for i in range(self.rank):
            v = sum(A[i][j] * coords[j] for j in range(self.rank))
            if isinstance(v, Fraction) and v.denominator == 1:
                v = int(v)
            out.append(v)
        return tuple(out)

    def simple_reflection(self, i: int, weight: Sequence) -> Weight:
        """Apply s_i to a weight in fundamental coordinates."""
        self._check_index(i)
        wi = weight[i - 1]
        A = self.cartan
        return tuple(weight[j] - wi * A[j][i - 1] for j in range(self.rank))

    def reflect_root(self, i: int, root: Sequence) -> Root:
        """Apply s_i to a root in simple-root coordinates."""
        self._check_index(i)
        A = self.cartan
        pair = sum(A[i - 1][j] * root[j] for j in range(self.rank))
        out = list(root)
        out[i - 1] -= pair
        return tuple(out)

    def reflect_by_root(self, beta: Sequence, weight: Sequence) -> Weight:
        """Apply the reflection s_beta to a weight, beta any root."""
        r = self.pairing(weight, beta)
        fund = self.from_root_basis(beta)
        return tuple(w - r * f for w, f in zip(weight, fund))

    def _check_index(self, i: int):
        if not 1 <= i <= self.rank:
            raise RootSystemError(f"simple index {i} out of range 1..{self.rank}")

    def __repr__(self) -> str:
        return f"RootSystem({self.rst.label})"


# ---------------------------------------------------------------------------
# classical epsilon coordinates (Bourbaki realizations of A, B, C, D)
# ---------------------------------------------------------------------------

def eps_dimension(rst: RootSystemType) -> int:
    """Length of the epsilon-coordinate vector for a classical family."""
    if rst.family == "A":
        return rst.rank + 1
    if rst.family in ("B", "C", "D"):
        return rst.rank
    raise RootSystemError(f"{rst} has no epsilon realization here")


def eps_from_root_coords(rst: RootSystemType, coords: Sequence) -> tuple:
    """Epsilon coordinates of an element of the root lattice.

    Uses the standard realizations: alpha_i = e_i - e_{i+1} in every
    classical family, with alpha_n = e_n (B), 2e_n (C), e_{n-1} + e_n (D).
    """
    n = rst.rank
    c = list(coords)
    fam = rst.family
    if fam == "A":
        full = [0] + c + [0]
        return tuple(full[i] - full[i - 1] for i in range(1, n + 2))
    if fam == "B":
        prev = [0] + c
        return tuple(prev[i + 1] - prev[i] for i in range(n))
    if fam == "C":
        out = [c[0]] + [c[i] - c[i - 1] for i in range(1, n - 1)]
        out.append(2 * c[n - 1] - (c[n - 2] if n >= 2 else 0))
        return tuple(out)
    if fam == "D":
        out = [c[0]] + [c[i] - c[i - 1] for i in range(1, n - 2)]
        base = c[n - 3] if n >= 3 else 0
        out.append(c[n - 2] + c[n - 1] - base)
        out.append(c[n - 1] - c[n - 2])
        return tuple(out)
    raise RootSystemError(f"{rst} has no epsilon realization here")


def root_coords_from_eps(rst: RootSystemType, eps: Sequence) -> tuple:
    """Simple-root coordinates of an epsilon vector; exact, may be Fractions."""
    n = rst.rank
    v = [Fraction(x) for x in eps]
    fam = rst.family
    if fam == "A":
        if len(v) != n + 1 or sum(v) != 0:
            raise RootSystemError(f"type A epsilon vector must have length {n + 1} and sum 0")
        out, run = [], Fraction(0)
        for i in range(n):
            run += v[i]
            out.append(run)
    elif fam == "B":
        if len(v) != n:
            raise RootSystemError(f"epsilon vector must have length {n}")
        out, run = [], Fraction(0)
        for i in range(n):
            run += v[i]
            out.append(run)
    elif fam == "C":
        if len(v) != n:
            raise RootSystemError(f"epsilon vector must have length {n}")
        out, run = [], Fraction(0)
        for i in range(n - 1):
            run += v[i]
            out.append(run)
        out.append((v[n - 1] + (out[n - 2] if n >= 2 else 0)) / 2)
    elif fam == "D":
        if len(v) != n:
            raise RootSystemError(f"epsilon vector must have length {n}")
        out, run = [], Fraction(0)
        for i in range(n - 2):
            run += v[i]
            out.append(run)
        base = out[n - 3] if n >= 3 else Fraction(0)
        s = v[n - 2] + base
        t = v[n - 1]
        out.append((s - t) / 2)
        out.append((s + t) / 2)
    else:
        raise RootSystemError(f"{rst} has no epsilon realization here")
    return tuple(int(x) if x.denominator == 1 else x for x in out)


@lru_cache(maxsize=None)
def _build_cached(rst: RootSystemType) -> RootSystem:
    return RootSystem(rst)


def build(family, rank: int | None = None) -> RootSystem:
    """Build (or fetch the cached copy of) a root system.

    Accepts ``build("E6")``, ``build("E", 6)`` or ``build(RootSystemType(...))``.
    """
    if isinstance(family, RootSystem):
        return family
    if isinstance(family, RootSystemType):
        return _build_cached(family)
    text = str(family).strip().upper()
    if rank is None:
        return _build_cached(RootSystemType.parse(text))
    if len(text) > 1:
        rst = RootSystemType.parse(text)
        if rst.rank != int(rank):
            raise RootSystemError(f"label {text} disagrees with rank {rank}")
        return _build_cached(rst)
    return _build_cached(RootSystemType(text, int(rank)))
