"""Exact-integer foundation: toric instances, fibers, Betti data, Markov bases.

A toric instance is a nonnegative integer matrix whose columns are the
semigroup generators; all arithmetic is arbitrary-precision Python int.
The universal Markov basis is computed from fiber connectivity graphs
(minimal binomials = pairs of fiber points in distinct components), with
candidate degrees read off a generating set, which is sound by the graded
Nakayama lemma.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionError, InstanceError, ResourceLimitError
from .intlinalg import integer_rank, kernel_basis

DEFAULT_FIBER_CAP = 10**6

BASIS_KINDS = ("circuits", "graver", "ugb", "markov_universal", "generators")


def positive_part(z: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x if x > 0 else 0 for x in z)


def negative_part(z: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-x if x < 0 else 0 for x in z)


def support(v: tuple[int, ...]) -> frozenset[int]:
    return frozenset(i for i, x in enumerate(v) if x != 0)


def canonical_sign(z: tuple[int, ...]) -> tuple[int, ...]:
    """Flip z so its first nonzero entry is positive; zero stays zero."""
    for x in z:
        if x > 0:
            return z
        if x < 0:
            return tuple(-y for y in z)
    return z


@dataclass(frozen=True, order=True)
class Binomial:
    """x^plus - x^minus with disjoint supports, in canonical orientation."""

    plus: tuple[int, ...]
    minus: tuple[int, ...]

    def __post_init__(self):
        if len(self.plus) != len(self.minus):
            raise DimensionError("binomial sides have different lengths")
        if any(x < 0 for x in self.plus) or any(x < 0 for x in self.minus):
            raise InstanceError("negative exponent in binomial")
        if not any(self.plus) and not any(self.minus):
            raise InstanceError("zero binomial")
        if any(p and q for p, q in zip(self.plus, self.minus)):
            raise InstanceError("binomial sides share support")
        z = tuple(p - q for p, q in zip(self.plus, self.minus))
        if canonical_sign(z) != z:
            raise InstanceError("binomial not in canonical orientation")

    @property
    def vector(self) -> tuple[int, ...]:
        return tuple(p - q for p, q in zip(self.plus, self.minus))

    def degrees(self) -> tuple[int, int]:
        """Total degrees of the two monomials."""
        return sum(self.plus), sum(self.minus)


def binomial_from_vector(z: tuple[int, ...]) -> Binomial:
    """Canonical binomial x^{z+} - x^{z-} of a nonzero kernel vector."""
    z = canonical_sign(tuple(z))
    if not any(z):
        raise InstanceError("zero vector has no binomial")
    return Binomial(positive_part(z), negative_part(z))


def binomial_from_pair(p, q, strip_common: bool = False) -> Binomial:
    """Canonical binomial from a monomial pair, optionally cancelling gcd."""
    p, q = tuple(p), tuple(q)
    if strip_common:
        g = tuple(min(a, b) for a, b in zip(p, q))
        p = tuple(a - c for a, c in zip(p, g))
        q = tuple(b - c for b, c in zip(q, g))
    z = tuple(a - b for a, b in zip(p, q))
    if not any(z):
        raise InstanceError("zero binomial")
    if canonical_sign(z) != z:
        p, q = q, p
    return Binomial(p, q)


class ToricInstance:
    """Integer matrix with columns as generators; immutable by convention."""

    def __init__(self, matrix, label: str | None = None):
        rows = tuple(tuple(int(x) for x in row) for row in matrix)
        if not rows or not rows[0]:
            raise InstanceError("empty matrix")
        n, m = len(rows), len(rows[0])
        if any(len(r) != m for r in rows):
            raise InstanceError("ragged matrix")
        if any(x < 0 for r in rows for x in r):
            raise InstanceError("matrix entries must be nonnegative")
        cols = tuple(tuple(rows[i][j] for i in range(n)) for j in range(m))
        for j, c in enumerate(cols):
            if not any(c):
                raise InstanceError(f"column {j} is zero")
        if len(set(cols)) != m:
            raise InstanceError("duplicate columns (generators must be distinct)")
        self.matrix = rows
        self.columns = cols
        self.n = n
        self.m = m
        self.label = label
        self.rank = integer_rank([list(r) for r in rows])
        self._kernel: tuple[tuple[int, ...], ...] | None = None

    def __eq__(self, other):
        return isinstance(other, ToricInstance) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"ToricInstance({self.n}x{self.m}, rank={self.rank}, label={self.label})"

    def a_degree(self, w) -> tuple[int, ...]:
        """deg_A of the monomial with exponent vector w."""
        w = tuple(w)
        if len(w) != self.m:
            raise DimensionError(f"expected {self.m} exponents, got {len(w)}")
        deg = [0] * self.n
        for j, e in enumerate(w):
            if e:
                col = self.columns[j]
                for i in range(self.n):
                    deg[i] += e * col[i]
        return tuple(deg)

    def degree_of(self, b: Binomial) -> tuple[int, ...]:
        return self.a_degree(b.plus)

    def is_homogeneous(self, b: Binomial) -> bool:
        return self.a_degree(b.plus) == self.a_degree(b.minus)

    def kernel_lattice(self) -> tuple[tuple[int, ...], ...]:
        """Basis of the saturated kernel lattice, sign-canonical vectors."""
        if self._kernel is None:
            basis = kernel_basis([list(r) for r in self.matrix])
            self._kernel = tuple(canonical_sign(tuple(v)) for v in basis)
        return self._kernel


def ideal_height(inst: ToricInstance) -> int:
    """Height of the toric ideal: number of columns minus matrix rank."""
    return inst.m - inst.rank


def restrict(inst: ToricInstance, subset) -> ToricInstance:
    """Instance on the selected columns (0-based index set)."""
    idx = sorted(set(subset))
    if not idx:
        raise ValueError("empty column subset")
    if idx[0] < 0 or idx[-1] >= inst.m:
        raise ValueError("column index out of range")
    rows = [[inst.matrix[i][j] for j in idx] for i in range(inst.n)]
    return ToricInstance(rows, label=inst.label)


@dataclass(frozen=True)
class BasisSet:
    kind: str
    elements: tuple[Binomial, ...]

    def __post_init__(self):
        if self.kind not in BASIS_KINDS:
            raise InstanceError(f"unknown basis kind {self.kind!r}")

    def as_set(self) -> frozenset[Binomial]:
        return frozenset(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, b: Binomial):
        return b in self.as_set()

    def __iter__(self):
        return iter(self.elements)


def sort_key(inst: ToricInstance):
    def key(b: Binomial):
        return (inst.degree_of(b), b.plus, b.minus)
    return key


def make_basis(inst: ToricInstance, kind: str, binomials) -> BasisSet:
    """Deduplicated, homogeneity-checked, canonically sorted basis set."""
    elems = sorted(set(binomials), key=sort_key(inst))
    for b in elems:
        if len(b.plus) != inst.m:
            raise DimensionError("binomial length does not match instance")
        if not inst.is_homogeneous(b):
            raise InstanceError(f"binomial {b} is not A-homogeneous")
    return BasisSet(kind, tuple(elems))


def restrict_basis(basis: BasisSet, subset, m: int) -> BasisSet:
    """Filter a basis to binomials supported on `subset`, renumbering."""
    idx = sorted(set(subset))
    if not idx:
        raise ValueError("empty column subset")
    keep = frozenset(idx)
    out = []
    for b in basis.elements:
        if support(b.plus) | support(b.minus) <= keep:
            out.append(Binomial(tuple(b.plus[j] for j in idx),
                                tuple(b.minus[j] for j in idx)))
    return BasisSet(basis.kind, tuple(sorted(set(out))))


@dataclass(frozen=True)
class Fiber:
    degree: tuple[int, ...]
    points: tuple[tuple[int, ...], ...]


def enumerate_fiber(inst: ToricInstance, degree, cap: int = DEFAULT_FIBER_CAP) -> Fiber:
    """Complete fiber {w in N^m : A w = degree} by exhaustive backtracking.

    Exceeding `cap` points raises ResourceLimitError; the fiber is never
    silently truncated.
    """
    b = tuple(int(x) for x in degree)
    if len(b) != inst.n:
        raise DimensionError(f"degree has length {len(b)}, expected {inst.n}")
    if any(x < 0 for x in b):
        raise ValueError("degree must be componentwise nonnegative")
    m, n = inst.m, inst.n
    cols = inst.columns
    # row support of the column suffix starting at j, used to prune branches
    # where a remaining row demand can never be met
    suffix_support = [[False] * n for _ in range(m + 1)]
    for j in range(m - 1, -1, -1):
        for r in range(n):
            suffix_support[j][r] = suffix_support[j + 1][r] or cols[j][r] > 0
    points: list[tuple[int, ...]] = []
    current = [0] * m
    remaining = list(b)

    def bound(j: int) -> int:
        hi = None
        col = cols[j]
        for r in range(n):
            if col[r] > 0:
                q = remaining[r] // col[r]
                hi = q if hi is None else min(hi, q)
        return hi if hi is not None else 0

    def dfs(j: int):
        if j == m:
            if not any(remaining):
                points.append(tuple(current))
                if len(points) > cap:
                    raise ResourceLimitError(
                        f"fiber of degree {b} exceeds cap {cap}")
            return
        sup = suffix_support[j + 1]
        col = cols[j]
        for v in range(bound(j), -1, -1):
            if v:
                for r in range(n):
                    remaining[r] -= v * col[r]
            current[j] = v
            if all(sup[r] or remaining[r] == 0 for r in range(n)):
                dfs(j + 1)
            if v:
                for r in range(n):
                    remaining[r] += v * col[r]
        current[j] = 0

    dfs(0)
    return Fiber(b, tuple(sorted(points)))


def fiber_graph_components(fiber: Fiber) -> list[list[tuple[int, ...]]]:
    """Connected components of the fiber graph.

    Two fiber points are adjacent iff their monomials share a variable
    (gcd != 1); components are returned sorted, each sorted internally.
    """
    pts = list(fiber.points)
    k = len(pts)
    masks = []
    for p in pts:
        mask = 0
        for i, x in enumerate(p):
            if x:
                mask |= 1 << i
        masks.append(mask)
    parent = list(range(k))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(k):
        for j in range(i + 1, k):
            if masks[i] & masks[j]:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    groups: dict[int, list[tuple[int, ...]]] = {}
    for i, p in enumerate(pts):
        groups.setdefault(find(i), []).append(p)
    return sorted(sorted(g) for g in groups.values())


@dataclass(frozen=True)
class BettiData:
    """Per-degree component counts of disconnected fibers; mu = sum(c_b - 1)."""

    entries: tuple[tuple[tuple[int, ...], int, int], ...]
    mu: int

    def degrees(self) -> tuple[tuple[int, ...], ...]:
        return tuple(e[0] for e in self.entries)


class FiberCache:
    """Memoizes fibers and their components per instance."""

    def __init__(self, inst: ToricInstance, cap: int = DEFAULT_FIBER_CAP):
        self.inst = inst
        self.cap = cap
        self._fibers: dict[tuple[int, ...], Fiber] = {}
        self._components: dict[tuple[int, ...], list[list[tuple[int, ...]]]] = {}

    def fiber(self, degree) -> Fiber:
        b = tuple(degree)
        if b not in self._fibers:
            self._fibers[b] = enumerate_fiber(self.inst, b, self.cap)
        return self._fibers[b]

    def components(self, degree) -> list[list[tuple[int, ...]]]:
        b = tuple(degree)
        if b not in self._components:
            self._components[b] = fiber_graph_components(self.fiber(b))
        return self._components[b]


def universal_markov(inst: ToricInstance, fiber_cap: int = DEFAULT_FIBER_CAP,
                     cache: FiberCache | None = None) -> tuple[BasisSet, BettiData]:
    """Universal Markov basis (all minimal binomials) plus Betti data.

    Candidate Betti degrees are the A-degrees of a computed generating set;
    each disconnected fiber of a candidate degree contributes every binomial
    joining two distinct components.
    """
    from .groebner import toric_generators

    gens = toric_generators(inst)
    degrees = sorted({inst.degree_of(g) for g in gens}, key=lambda d: (sum(d), d))
    if cache is None:
        cache = FiberCache(inst, fiber_cap)
    elems: list[Binomial] = []
    betti: list[tuple[tuple[int, ...], int, int]] = []
    for b in degrees:
        comps = cache.components(b)
        c = len(comps)
        if c < 2:
            continue
        betti.append((b, c, c - 1))
        for i in range(c):
            for j in range(i + 1, c):
                for u in comps[i]:
                    for v in comps[j]:
                        elems.append(binomial_from_pair(u, v))
    mu = sum(e[2] for e in betti)
    return make_basis(inst, "markov_universal", elems), BettiData(tuple(betti), mu)
