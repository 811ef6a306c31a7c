"""Finite semigroups as multiplication tables, and transformation monoids.

Elements are dense indices ``0..order-1``; ``table[a, b]`` is the index of
``a*b``. Transformations compose left to right, ``x(ab) = (xa)b``, so the
constant maps of a full transformation monoid form a right zero semigroup.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import AssociativityError, CapExceeded, DegreeMismatch, RangeError, UnknownElement

DEFAULT_ORDER_CAP = 500

# Number of (a, b, c) triples compared per vectorised associativity chunk.
_ASSOC_CHUNK = 4_000_000


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr, dtype=np.intp)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class FiniteSemigroup:
    """A semigroup given by its Cayley table.

    Instances are immutable. Construct through :func:`validate` unless the
    table is associative by construction.
    """

    table: np.ndarray
    identity: Optional[int] = None
    labels: Optional[tuple] = None
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "table", _freeze(self.table))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))

    @property
    def order(self) -> int:
        return self.table.shape[0]

    @property
    def is_monoid(self) -> bool:
        return self.identity is not None

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def product(self, elements: Iterable[int]) -> int:
        it = iter(elements)
        acc = next(it)
        for x in it:
            acc = self.table[acc, x]
        return int(acc)

    def label(self, a) -> str:
        if a is None:
            return "1"
        if self.labels is not None:
            return self.labels[a]
        return str(a)

    def index_of(self, name) -> int:
        """Resolve a label (or a decimal index) to an element index."""
        if isinstance(name, (int, np.integer)):
            idx = int(name)
        else:
            name = str(name).strip()
            if self.labels is not None and name in self.labels:
                return self.labels.index(name)
            try:
                idx = int(name)
            except ValueError:
                raise UnknownElement(f"no element named {name!r}") from None
        if not 0 <= idx < self.order:
            raise UnknownElement(f"element index {idx} out of range for order {self.order}")
        return idx

    def idempotents(self) -> np.ndarray:
        n = self.order
        return np.flatnonzero(self.table[np.arange(n), np.arange(n)] == np.arange(n))

    def __eq__(self, other):
        if not isinstance(other, FiniteSemigroup):
            return NotImplemented
        return self.identity == other.identity and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((self.order, self.table.tobytes(), self.identity))

    def __repr__(self):
        return f"FiniteSemigroup(order={self.order}, identity={self.identity})"


@dataclass(frozen=True)
class Transformation:
    images: tuple

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        d = len(images)
        if d == 0:
            raise RangeError("a transformation needs degree >= 1")
        if any(not 0 <= x < d for x in images):
            raise RangeError(f"images {images} not a self-map of {d} points")
        object.__setattr__(self, "images", images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Transformation") -> "Transformation":
        if other.degree != self.degree:
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree}")
        return Transformation(tuple(other.images[x] for x in self.images))

    @classmethod
    def identity(cls, degree: int) -> "Transformation":
        return cls(tuple(range(degree)))

    @classmethod
    def constant(cls, degree: int, value: int) -> "Transformation":
        return cls((value,) * degree)


def find_identity(table: np.ndarray) -> Optional[int]:
    n = table.shape[0]
    ar = np.arange(n)
    for e in range(n):
        if np.array_equal(table[e], ar) and np.array_equal(table[:, e], ar):
            return e
    return None


def first_associativity_violation(table: np.ndarray):
    """Return the least (a, b, c) with (ab)c != a(bc), or None."""
    t = np.asarray(table, dtype=np.intp)
    n = t.shape[0]
    chunk = max(1, _ASSOC_CHUNK // max(1, n * n))
    for lo in range(0, n, chunk):
        rows = np.arange(lo, min(n, lo + chunk))
        left = t[t[rows], :]  # left[a, b, c] = (a b) c
        right = t[rows[:, None, None], t[None, :, :]]  # right[a, b, c] = a (b c)
        bad = np.argwhere(left != right)
        if bad.size:
            a, b, c = bad[0]
            return (int(rows[a]), int(b), int(c))
    return None


def validate(table, identity: Optional[int] = None, labels=None) -> FiniteSemigroup:
    """Check a square table for range and associativity and wrap it.

    The identity element is detected when not given.
    """
    try:
        arr = np.asarray(table, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise RangeError(f"table is not a rectangular integer matrix: {exc}") from None
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise RangeError(f"table must be a non-empty square matrix, got shape {arr.shape}")
    n = arr.shape[0]
    bad = np.argwhere((arr < 0) | (arr >= n))
    if bad.size:
        a, b = bad[0]
        raise RangeError(f"entry table[{a}][{b}] = {arr[a, b]} outside [0, {n})")
    if labels is not None and len(labels) != n:
        raise RangeError(f"{len(labels)} labels for {n} elements")
    witness = first_associativity_violation(arr)
    if witness is not None:
        raise AssociativityError(witness)
    found = find_identity(arr)
    if identity is not None and identity != found:
        raise RangeError(f"element {identity} is not an identity")
    return FiniteSemigroup(arr, found, labels)


def adjoin_identity(S: FiniteSemigroup) -> FiniteSemigroup:
    """S with a new identity appended as the last element, even if S is a monoid."""
    n = S.order
    t = np.empty((n + 1, n + 1), dtype=np.intp)
    t[:n, :n] = S.table
    t[n, :] = np.arange(n + 1)
    t[:, n] = np.arange(n + 1)
    labels = None
    if S.labels is not None:
        one = "1"
        while one in S.labels:
            one += "'"
        labels = S.labels + (one,)
    return FiniteSemigroup(t, n, labels)


def opposite(S: FiniteSemigroup) -> FiniteSemigroup:
    return FiniteSemigroup(S.table.T.copy(), S.identity, S.labels)


def subsemigroup(S: FiniteSemigroup, elements: Sequence[int]) -> tuple[FiniteSemigroup, np.ndarray]:
    """Restrict S to a closed subset; returns the subsemigroup and its element map."""
    elems = np.asarray(sorted(set(int(x) for x in elements)), dtype=np.intp)
    pos = np.full(S.order, -1, dtype=np.intp)
    pos[elems] = np.arange(len(elems))
    sub = pos[S.table[np.ix_(elems, elems)]]
    if (sub < 0).any():
        raise RangeError("subset is not closed under multiplication")
    labels = None if S.labels is None else [S.labels[x] for x in elems]
    return FiniteSemigroup(sub, find_identity(sub), labels), elems


def closure_from_transformations(gens: Sequence, cap: Optional[int] = None):
    """Enumerate the semigroup generated by transformations.

    Element order: generators as given (duplicates dropped), then
    breadth-first levels of right multiples by generators, each level sorted
    by image tuple. Returns ``(S, elements)`` with ``elements[i]`` the
    transformation for index ``i``.
    """
    gens = [g if isinstance(g, Transformation) else Transformation(tuple(g)) for g in gens]
    if not gens:
        raise DegreeMismatch("no generators")
    degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise DegreeMismatch(f"generator degrees {degree} and {g.degree}")

    index: dict = {}
    elements: list = []
    for g in gens:
        if g.images not in index:
            index[g.images] = len(elements)
            elements.append(g.images)
    frontier = list(elements)
    gen_images = [g.images for g in gens]
    while frontier:
        fresh = set()
        for a in frontier:
            for b in gen_images:
                c = tuple(b[x] for x in a)
                if c not in index and c not in fresh:
                    fresh.add(c)
        frontier = sorted(fresh)
        for c in frontier:
            index[c] = len(elements)
            elements.append(c)
        if cap is not None and len(elements) > cap:
            raise CapExceeded(f"closure exceeds order cap {cap}")

    images = np.asarray(elements, dtype=np.intp)
    n = len(elements)
    composed = images[np.arange(n)[None, :, None], images[:, None, :]]  # [a, b, x] = b[a[x]]
    stacked = np.vstack([images, composed.reshape(n * n, degree)])
    _, inverse = np.unique(stacked, axis=0, return_inverse=True)
    inverse = inverse.reshape(-1)
    slot_to_elem = np.empty(inverse[:n].max() + 1, dtype=np.intp)
    slot_to_elem[inverse[:n]] = np.arange(n)
    table = slot_to_elem[inverse[n:]].reshape(n, n)
    labels = ["".join(map(str, e)) if degree <= 10 else ",".join(map(str, e)) for e in elements]
    S = FiniteSemigroup(table, find_identity(table), labels)
    return S, [Transformation(e) for e in elements]


def idempotent_power(S: FiniteSemigroup, a: int) -> tuple[int, int, int]:
    """Index q, period r (both minimal, a^(q+r) = a^q) and the idempotent power of a."""
    seen = {}
    power = int(a)
    k = 1
    while power not in seen:
        seen[power] = k
        power = int(S.table[power, a])
        k += 1
    q = seen[power]
    r = k - q
    # a^m is idempotent for the unique m in [q, q+r) divisible by r
    m = q + (-q) % r
    e = int(a)
    for _ in range(m - 1):
        e = int(S.table[e, a])
    return q, r, e


def random_transformation_monoid(
    degree: int,
    n_gens: int,
    seed: int,
    cap: int = DEFAULT_ORDER_CAP,
    max_redraws: int = 50,
) -> FiniteSemigroup:
    """Monoid generated by the identity and ``n_gens`` uniform random maps."""
    if degree < 1 or n_gens < 1:
        raise RangeError("degree and n_gens must be positive")
    rng = np.random.default_rng(seed)
    ident = Transformation.identity(degree)
    for _ in range(max_redraws + 1):
        gens = [ident] + [Transformation(tuple(rng.integers(0, degree, size=degree))) for _ in range(n_gens)]
        try:
            S, _ = closure_from_transformations(gens, cap=cap)
        except CapExceeded:
            continue
        return S
    raise CapExceeded(f"no draw of order <= {cap} after {max_redraws} re-draws")
