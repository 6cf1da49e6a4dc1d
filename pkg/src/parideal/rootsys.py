"""Finite reduced root systems built from Cartan data.

Roots are integer coefficient tuples over the simple roots, with nodes numbered
as in Bourbaki.  Node indices in the public API are 1-based.  The invariant form
is normalized so that long roots have squared length 2, and every pairing is an
exact :class:`fractions.Fraction`.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

Root = tuple[int, ...]
Weight = tuple[Fraction, ...]

FAMILIES = "ABCDEFG"
CLASSICAL = "ABCD"


class ConfigurationError(ValueError):
    """A root system was requested outside the supported (family, rank) range."""


class UnsupportedError(ValueError):
    """The operation has no meaning (or no implementation) for this input."""


@dataclass(frozen=True, order=True)
class RootSystemSpec:
    family: str
    rank: int

    def __post_init__(self):
        fam = str(self.family).upper()
        object.__setattr__(self, "family", fam)
        n = self.rank
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 3,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }.get(fam)
        if ok is None:
            raise ConfigurationError(f"unknown family {self.family!r}")
        if not isinstance(n, int) or not ok:
            raise ConfigurationError(f"rank {n!r} out of bounds for type {fam}")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "RootSystemSpec":
        """``"B3"`` -> ``RootSystemSpec("B", 3)``."""
        text = text.strip()
        try:
            return cls(text[0], int(text[1:]))
        except (IndexError, ValueError) as exc:
            raise ConfigurationError(f"cannot parse root system {text!r}") from exc


def _dynkin_edges(spec: RootSystemSpec) -> list[tuple[int, int]]:
    # 0-based Bourbaki edges
    f, n = spec.family, spec.rank
    if f in "ABC":
        return [(i, i + 1) for i in range(n - 1)]
    if f == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if f == "E":
        return [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, n - 1)]
    if f == "F":
        return [(0, 1), (1, 2), (2, 3)]
    return [(0, 1)]


def cartan_matrix(spec: RootSystemSpec) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with ``a[i][j] = <alpha_i^vee, alpha_j>``."""
    n = spec.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in _dynkin_edges(spec):
        a[i][j] = a[j][i] = -1
    f = spec.family
    if f == "B":
        a[n - 1][n - 2] = -2
    elif f == "C":
        a[n - 2][n - 1] = -2
    elif f == "F":
        a[2][1] = -2
    elif f == "G":
        a[1][0] = -3
    return tuple(tuple(row) for row in a)


def _symmetrizer(cartan: Sequence[Sequence[int]]) -> tuple[Fraction, ...]:
    """Half squared lengths of the simple roots, longest normalized to 1."""
    n = len(cartan)
    sym: list[Fraction | None] = [None] * n
    sym[0] = Fraction(1)
    todo = deque([0])
    while todo:
        i = todo.popleft()
        for j in range(n):
            if j != i and cartan[i][j] and sym[j] is None:
                sym[j] = sym[i] * cartan[i][j] / cartan[j][i]
                todo.append(j)
    top = max(sym)
    return tuple(s / top for s in sym)


def height(alpha: Sequence[int]) -> int:
    return sum(alpha)


def d_coeff(alpha: Sequence[int], i: int) -> int:
    """Coefficient of the simple root ``alpha_i`` (1-based) in ``alpha``."""
    if not 1 <= i <= len(alpha):
        raise IndexError(f"node {i} outside 1..{len(alpha)}")
    return alpha[i - 1]


def root_sort_key(alpha: Sequence) -> tuple:
    """Canonical order: by height, then by coefficients with alpha_1 first."""
    return (sum(alpha), tuple(-c for c in alpha))


def _vadd(x: Sequence, y: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(x, y))


def _vsub(x: Sequence, y: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(x, y))


def _vscale(c, x: Sequence) -> tuple:
    return tuple(c * a for a in x)


def _generate_positive_roots(cartan) -> list[Root]:
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # alpha_i-string through beta: beta - p alpha_i, ..., beta + q alpha_i
                p = 0
                probe = list(beta)
                while True:
                    probe[i] -= 1
                    if tuple(probe) in found:
                        p += 1
                    else:
                        break
                q = p - sum(beta[j] * cartan[i][j] for j in range(n))
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(found, key=root_sort_key)


@dataclass(frozen=True)
class RootSystem:
    spec: RootSystemSpec
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[Fraction, ...]
    positive_roots: tuple[Root, ...]
    theta: Root
    roots: tuple[Root, ...] = field(repr=False)
    root_index: dict = field(repr=False, compare=False, hash=False)

    @property
    def rank(self) -> int:
        return self.spec.rank

    @property
    def family(self) -> str:
        return self.spec.family

    @cached_property
    def gram(self) -> tuple[tuple[Fraction, ...], ...]:
        n = self.rank
        return tuple(
            tuple(self.symmetrizer[i] * self.cartan[i][j] for j in range(n))
            for i in range(n)
        )

    @cached_property
    def positive_set(self) -> frozenset:
        return frozenset(self.positive_roots)

    # -- basic vectors -------------------------------------------------
    def simple_root(self, i: int) -> Root:
        return tuple(int(j == i - 1) for j in range(self.rank))

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        return tuple(self.simple_root(i) for i in range(1, self.rank + 1))

    @property
    def zero(self) -> Root:
        return (0,) * self.rank

    @cached_property
    def _fundamental_weights(self) -> tuple[Weight, ...]:
        import sympy

        # omega_i = sum_k c_k alpha_k with <omega_i, alpha_j^vee> = delta_ij, i.e. c = e_i (A^T)^{-1}
        inv = sympy.Matrix(self.cartan).T.inv()
        n = self.rank
        return tuple(
            tuple(Fraction(int(inv[i, k].p), int(inv[i, k].q)) for k in range(n))
            for i in range(n)
        )

    def fundamental_weight(self, i: int) -> Weight:
        """omega_i in simple-root coordinates (1-based node)."""
        return self._fundamental_weights[i - 1]

    # -- form ----------------------------------------------------------
    def pairing(self, x: Sequence, y: Sequence) -> Fraction:
        n = self.rank
        if len(x) != n or len(y) != n:
            raise ValueError(f"expected vectors of length {n}, got {len(x)} and {len(y)}")
        g = self.gram
        total = Fraction(0)
        for i in range(n):
            if x[i]:
                row = g[i]
                total += x[i] * sum(row[j] * y[j] for j in range(n) if y[j])
        return total

    def coroot_pairing(self, x: Sequence, i: int) -> Fraction:
        """<x, alpha_i^vee> for 1-based node i."""
        i -= 1
        return Fraction(sum(x[j] * self.cartan[i][j] for j in range(self.rank)))

    def norm2(self, alpha: Sequence) -> Fraction:
        return self.pairing(alpha, alpha)

    def is_long(self, alpha: Sequence) -> bool:
        return self.norm2(alpha) == 2

    # -- membership and addition ---------------------------------------
    def is_root(self, v: Iterable[int]) -> bool:
        return tuple(v) in self.root_index

    def add_roots(self, alpha: Sequence[int], beta: Sequence[int]) -> Root | None:
        s = _vadd(alpha, beta)
        return s if s in self.root_index else None

    def negate(self, alpha: Sequence[int]) -> Root:
        return tuple(-c for c in alpha)

    # -- Weyl group ----------------------------------------------------
    def reflect(self, i: int, v: Sequence) -> tuple:
        """Simple reflection s_i applied to v (1-based node)."""
        c = sum(v[j] * self.cartan[i - 1][j] for j in range(self.rank))
        out = list(v)
        out[i - 1] -= c
        return tuple(out)

    def apply_word(self, word: Sequence[int], v: Sequence) -> tuple:
        """Apply simple reflections in the order listed (first entry acts first)."""
        out = tuple(v)
        for i in word:
            out = self.reflect(i, out)
        return out

    def apply_inverse_word(self, word: Sequence[int], v: Sequence) -> tuple:
        return self.apply_word(tuple(reversed(word)), v)

    def is_dominant(self, lam: Sequence) -> bool:
        return all(self.coroot_pairing(lam, i) >= 0 for i in range(1, self.rank + 1))

    def dominant_representative(self, lam: Sequence) -> tuple[tuple, tuple[int, ...]]:
        """Move ``lam`` into the dominant chamber by simple reflections.

        Returns ``(lam', word)`` with ``lam' == apply_word(word, lam)``.
        """
        cur = tuple(Fraction(c) for c in lam)
        word = []
        while True:
            for i in range(1, self.rank + 1):
                if self.coroot_pairing(cur, i) < 0:
                    cur = self.reflect(i, cur)
                    word.append(i)
                    break
            else:
                return cur, tuple(word)

    @cached_property
    def simple_reflection_perms(self) -> tuple[tuple[int, ...], ...]:
        """s_i as a permutation of indices into :attr:`roots`."""
        return tuple(
            tuple(self.root_index[self.reflect(i, a)] for a in self.roots)
            for i in range(1, self.rank + 1)
        )

    def weyl_group_perms(self, limit: int = 5000) -> list[tuple[int, ...]]:
        """All Weyl group elements as permutations of :attr:`roots`.

        Raises :class:`UnsupportedError` if the group has more than ``limit`` elements.
        """
        gens = self.simple_reflection_perms
        ident = tuple(range(len(self.roots)))
        seen = {ident}
        order = [ident]
        todo = deque([ident])
        while todo:
            w = todo.popleft()
            for s in gens:
                sw = tuple(s[k] for k in w)
                if sw not in seen:
                    if len(seen) >= limit:
                        raise UnsupportedError(f"Weyl group of {self.spec} exceeds {limit} elements")
                    seen.add(sw)
                    order.append(sw)
                    todo.append(sw)
        return order

    # -- epsilon coordinates (classical types) -------------------------
    def _require_classical(self):
        if self.family not in CLASSICAL:
            raise UnsupportedError(f"epsilon coordinates are only defined for types A-D, not {self.family}")

    @property
    def epsilon_dim(self) -> int:
        self._require_classical()
        return self.rank + 1 if self.family == "A" else self.rank

    def to_epsilon(self, v: Sequence) -> tuple:
        """Simple-root coordinates -> orthonormal epsilon coordinates."""
        self._require_classical()
        n, f = self.rank, self.family
        out = [Fraction(0)] * self.epsilon_dim
        for k in range(n):
            c = v[k]
            if not c:
                continue
            if k < n - 1 or f == "A":
                out[k] += c
                out[k + 1] -= c
            elif f == "B":
                out[n - 1] += c
            elif f == "C":
                out[n - 1] += 2 * c
            else:
                out[n - 2] += c
                out[n - 1] += c
        return tuple(_simplify(x) for x in out)

    def weight_from_epsilon(self, v: Sequence) -> tuple:
        """Inverse of :meth:`to_epsilon` on the span of the roots."""
        self._require_classical()
        n, f = self.rank, self.family
        if len(v) != self.epsilon_dim:
            raise ValueError(f"expected {self.epsilon_dim} epsilon coordinates, got {len(v)}")
        partial = []
        s = Fraction(0)
        for x in v:
            s += Fraction(x)
            partial.append(s)
        if f == "A":
            if partial[-1] != 0:
                raise ValueError("vector is not in the span of the A_n roots")
            coeffs = partial[:n]
        elif f == "B":
            coeffs = partial
        elif f == "C":
            coeffs = partial[: n - 1] + [partial[n - 1] / 2]
        else:
            coeffs = partial[: n - 2] + [
                (partial[n - 2] - Fraction(v[n - 1])) / 2,
                partial[n - 1] / 2,
            ]
        return tuple(_simplify(c) for c in coeffs)

    def from_epsilon(self, v: Sequence) -> Root:
        coeffs = self.weight_from_epsilon(v)
        if not all(isinstance(c, int) for c in coeffs) or coeffs not in self.root_index:
            raise ValueError(f"{tuple(v)} is not a root of {self.spec}")
        return coeffs


def _simplify(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else x


_CACHE: dict[RootSystemSpec, RootSystem] = {}


def build_root_system(spec: RootSystemSpec | str | tuple) -> RootSystem:
    """Generate the root system for ``spec`` (``RootSystemSpec``, ``"B3"`` or ``("B", 3)``)."""
    if isinstance(spec, str):
        spec = RootSystemSpec.parse(spec)
    elif isinstance(spec, tuple):
        spec = RootSystemSpec(*spec)
    if spec in _CACHE:
        return _CACHE[spec]
    cartan = cartan_matrix(spec)
    positive = tuple(_generate_positive_roots(cartan))
    negative = [tuple(-c for c in a) for a in positive]
    roots = tuple(sorted(negative + list(positive), key=root_sort_key))
    # theta: the unique positive root dominating all others
    theta = max(positive, key=sum)
    rs = RootSystem(
        spec=spec,
        cartan=cartan,
        symmetrizer=_symmetrizer(cartan),
        positive_roots=positive,
        theta=theta,
        roots=roots,
        root_index={a: k for k, a in enumerate(roots)},
    )
    _CACHE[spec] = rs
    return rs


def canonical(roots: Iterable[Sequence[int]]) -> tuple[Root, ...]:
    """Duplicate-free tuple of roots in canonical order."""
    return tuple(sorted({tuple(a) for a in roots}, key=root_sort_key))
