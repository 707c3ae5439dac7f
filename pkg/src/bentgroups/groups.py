"""Small finite groups stored as explicit Cayley tables.

Every group in this package is a table: element ``i`` times element ``j``
is ``cayley[i, j]``.  Constructors validate the full set of group axioms
(closure, identity, two-sided inverses, associativity) and precompute the
conjugacy-class partition, so downstream modules can index into arrays
without re-deriving structure.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

import numpy as np

from .errors import CapabilityError

__all__ = [
    "CATALOG",
    "Group",
    "MAX_ORDER",
    "conjugacy_classes",
    "element_order",
    "group_from_json",
    "group_from_label",
    "group_to_json",
    "inverse",
    "load_group",
    "make_abelian",
    "make_cyclic",
    "make_named",
    "multiply",
    "save_group",
]

MAX_ORDER = 512

#: Orders up to this bound get an exhaustive associativity check; beyond it a
#: fixed-seed sample of triples is checked instead.
_EXHAUSTIVE_ASSOCIATIVITY_LIMIT = 32
_SAMPLED_TRIPLES = 10_000
_ASSOCIATIVITY_SEED = 20351

CATALOG = ("S3", "Q8", "V4", "D4")


@dataclass(frozen=True, eq=False)
class Group:
    """A finite group of order ``order`` with elements ``0 .. order-1``.

    Attributes
    ----------
    name : str
        Display label, e.g. ``"Z6"``, ``"Z2xZ3"``, ``"S3"``.
    order : int
        Number of elements.
    cayley : np.ndarray
        ``(order, order)`` int array; ``cayley[i, j]`` is the product ``g_i g_j``.
    identity : int
        Index of the identity element.
    inverses : np.ndarray
        ``inverses[i]`` is the index of ``g_i^{-1}``.
    class_of : np.ndarray
        ``class_of[i]`` is the conjugacy-class index of ``g_i``.  Class 0 is
        the class of the identity; the rest are ordered by smallest member.
    class_reps : tuple[int, ...]
        Smallest member of each class.
    class_sizes : tuple[int, ...]
        Size of each class.
    element_names : tuple[str, ...]
        Human-readable element labels used by exports and the CLI.
    abelian_factors : tuple[int, ...] | None
        For groups built as products of cyclic factors, the factor sizes in
        row-major order; ``None`` when no such structure is known.
    """

    name: str
    order: int
    cayley: np.ndarray
    identity: int
    inverses: np.ndarray
    class_of: np.ndarray
    class_reps: tuple[int, ...]
    class_sizes: tuple[int, ...]
    element_names: tuple[str, ...]
    abelian_factors: tuple[int, ...] | None = None

    @property
    def n_classes(self) -> int:
        return len(self.class_reps)

    @property
    def is_abelian(self) -> bool:
        return all(size == 1 for size in self.class_sizes)

    @property
    def exponent(self) -> int:
        """Least common multiple of the element orders."""
        out = 1
        for x in range(self.order):
            out = math.lcm(out, element_order(self, x))
        return out

    def __repr__(self) -> str:  # keep array dumps out of test output
        return f"Group(name={self.name!r}, order={self.order})"


# ---------------------------------------------------------------------------
# validation helpers


def _check_cayley(cayley: np.ndarray) -> None:
    n = cayley.shape[0]
    if cayley.ndim != 2 or cayley.shape != (n, n):
        raise ValueError(f"Cayley table must be square, got shape {cayley.shape}")
    if n < 1:
        raise ValueError("group order must be at least 1")
    if n > MAX_ORDER:
        raise CapabilityError(f"group order {n} exceeds supported maximum {MAX_ORDER}")
    if cayley.min() < 0 or cayley.max() >= n:
        raise ValueError("Cayley table entries must be element indices in range")


def _find_identity(cayley: np.ndarray) -> int:
    n = cayley.shape[0]
    idx = np.arange(n)
    hits = [e for e in range(n) if np.array_equal(cayley[e], idx) and np.array_equal(cayley[:, e], idx)]
    if len(hits) != 1:
        raise ValueError(f"expected exactly one two-sided identity, found {len(hits)}")
    return hits[0]


def _find_inverses(cayley: np.ndarray, identity: int) -> np.ndarray:
    n = cayley.shape[0]
    inv = np.empty(n, dtype=np.int64)
    for i in range(n):
        right = np.flatnonzero(cayley[i] == identity)
        if len(right) != 1 or cayley[right[0], i] != identity:
            raise ValueError(f"element {i} has no unique two-sided inverse")
        inv[i] = right[0]
    return inv


def _check_associativity(cayley: np.ndarray) -> None:
    n = cayley.shape[0]
    if n <= _EXHAUSTIVE_ASSOCIATIVITY_LIMIT:
        left = cayley[cayley, :]  # (i, j, k) -> (g_i g_j) g_k
        right = cayley[:, cayley]  # (i, j, k) -> g_i (g_j g_k)
        bad = np.argwhere(left != right)
        if len(bad):
            i, j, k = bad[0]
            raise ValueError(f"associativity fails at triple ({i}, {j}, {k})")
    else:
        rng = np.random.default_rng(_ASSOCIATIVITY_SEED)
        triples = rng.integers(0, n, size=(_SAMPLED_TRIPLES, 3))
        i, j, k = triples.T
        if not np.array_equal(cayley[cayley[i, j], k], cayley[i, cayley[j, k]]):
            raise ValueError("associativity fails on sampled triples")


def _conjugacy_partition(
    cayley: np.ndarray, inverses: np.ndarray, identity: int
) -> tuple[np.ndarray, tuple[int, ...], tuple[int, ...]]:
    n = cayley.shape[0]
    class_of = np.full(n, -1, dtype=np.int64)
    orbits: list[np.ndarray] = []
    for x in range(n):
        if class_of[x] >= 0:
            continue
        orbit = np.unique(cayley[cayley[:, x], inverses])
        orbits.append(orbit)
        class_of[orbit] = len(orbits) - 1
    # identity class first, the rest already appear by smallest member
    order = sorted(range(len(orbits)), key=lambda c: (orbits[c][0] != identity, orbits[c][0]))
    relabel = np.empty(len(orbits), dtype=np.int64)
    relabel[order] = np.arange(len(orbits))
    class_of = relabel[class_of]
    orbits = [orbits[c] for c in order]
    reps = tuple(int(orbit[0]) for orbit in orbits)
    sizes = tuple(int(len(orbit)) for orbit in orbits)
    return class_of, reps, sizes


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def _build_group(
    name: str,
    cayley: np.ndarray,
    element_names: Sequence[str] | None = None,
    abelian_factors: tuple[int, ...] | None = None,
) -> Group:
    cayley = np.asarray(cayley, dtype=np.int64)
    _check_cayley(cayley)
    _check_associativity(cayley)
    identity = _find_identity(cayley)
    inverses = _find_inverses(cayley, identity)
    class_of, reps, sizes = _conjugacy_partition(cayley, inverses, identity)
    if element_names is None:
        element_names = tuple(str(i) for i in range(cayley.shape[0]))
    names = tuple(element_names)
    if len(names) != cayley.shape[0]:
        raise ValueError("element_names length must match group order")
    return Group(
        name=name,
        order=int(cayley.shape[0]),
        cayley=_freeze(cayley),
        identity=int(identity),
        inverses=_freeze(inverses),
        class_of=_freeze(class_of),
        class_reps=reps,
        class_sizes=sizes,
        element_names=names,
        abelian_factors=abelian_factors,
    )


# ---------------------------------------------------------------------------
# constructors


def make_cyclic(n: int) -> Group:
    """Cyclic group Z_n with elements 0..n-1 under addition mod n."""
    if n < 1:
        raise ValueError(f"cyclic group order must be positive, got {n}")
    if n > MAX_ORDER:
        raise CapabilityError(f"group order {n} exceeds supported maximum {MAX_ORDER}")
    idx = np.arange(n)
    cayley = (idx[:, None] + idx[None, :]) % n
    return _build_group(f"Z{n}", cayley, abelian_factors=(n,))


def make_abelian(factors: Iterable[int]) -> Group:
    """Direct product of cyclic groups, elements in row-major tuple order.

    The element with mixed-radix digits ``(t_1, .., t_k)`` over the factor
    sizes gets index ``sum(t_f * stride_f)`` where the last factor varies
    fastest.
    """
    factors = tuple(int(m) for m in factors)
    if not factors:
        raise ValueError("at least one cyclic factor is required")
    if any(m < 1 for m in factors):
        raise ValueError(f"cyclic factor sizes must be positive, got {factors}")
    n = math.prod(factors)
    if n > MAX_ORDER:
        raise CapabilityError(f"group order {n} exceeds supported maximum {MAX_ORDER}")
    idx = np.arange(n)
    cayley = np.zeros((n, n), dtype=np.int64)
    rem_x, rem_y = idx.copy(), idx.copy()
    digits_x, digits_y = [], []
    for m in reversed(factors):
        digits_x.append(rem_x % m)
        digits_y.append(rem_y % m)
        rem_x //= m
        rem_y //= m
    stride = 1
    for m, dx, dy in zip(reversed(factors), digits_x, digits_y):
        cayley += ((dx[:, None] + dy[None, :]) % m) * stride
        stride *= m
    names = []
    for x in range(n):
        rem, digits = x, []
        for m in reversed(factors):
            digits.append(rem % m)
            rem //= m
        names.append("(" + ",".join(str(d) for d in reversed(digits)) + ")")
    label = "x".join(f"Z{m}" for m in factors)
    return _build_group(label, cayley, element_names=names, abelian_factors=factors)


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(p[q[x]] for x in range(len(p)))


def _make_s3() -> Group:
    perms = [
        (0, 1, 2),  # identity
        (1, 0, 2),  # swap first two symbols
        (2, 1, 0),  # swap outer symbols
        (0, 2, 1),  # swap last two symbols
        (1, 2, 0),  # 3-cycle
        (2, 0, 1),  # inverse 3-cycle
    ]
    names = ("I", "(12)", "(13)", "(23)", "(123)", "(132)")
    index = {p: i for i, p in enumerate(perms)}
    cayley = np.array(
        [[index[_compose(p, q)] for q in perms] for p in perms], dtype=np.int64
    )
    return _build_group("S3", cayley, element_names=names)


def _make_q8() -> Group:
    # elements encoded as (unit, sign) with units 1, i, j, k
    unit_mul = {
        (0, 0): (0, 0), (0, 1): (1, 0), (0, 2): (2, 0), (0, 3): (3, 0),
        (1, 0): (1, 0), (1, 1): (0, 1), (1, 2): (3, 0), (1, 3): (2, 1),
        (2, 0): (2, 0), (2, 1): (3, 1), (2, 2): (0, 1), (2, 3): (1, 0),
        (3, 0): (3, 0), (3, 1): (2, 0), (3, 2): (1, 1), (3, 3): (0, 1),
    }
    names = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")
    n = 8
    cayley = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        ua, sa = divmod(a, 2)
        for b in range(n):
            ub, sb = divmod(b, 2)
            uc, flip = unit_mul[(ua, ub)]
            cayley[a, b] = 2 * uc + ((sa + sb + flip) % 2)
    return _build_group("Q8", cayley, element_names=names)


def _make_d4() -> Group:
    # elements r^a s^b indexed a + 4b, with s r s = r^{-1}
    n = 8
    cayley = np.empty((n, n), dtype=np.int64)
    for x in range(n):
        a, b = x % 4, x // 4
        for y in range(n):
            c, d = y % 4, y // 4
            rot = (a + (c if b == 0 else -c)) % 4
            cayley[x, y] = rot + 4 * ((b + d) % 2)
    names = ("e", "r", "r2", "r3", "s", "rs", "r2s", "r3s")
    return _build_group("D4", cayley, element_names=names)


def make_named(name: str) -> Group:
    """One of the built-in nonabelian/Klein groups: S3, Q8, V4, D4."""
    key = name.upper()
    if key == "S3":
        return _make_s3()
    if key == "Q8":
        return _make_q8()
    if key == "D4":
        return _make_d4()
    if key == "V4":
        return replace(make_abelian((2, 2)), name="V4")
    raise ValueError(f"unknown group name {name!r}; available: {', '.join(CATALOG)}")


def group_from_label(label: str) -> Group:
    """Resolve a short label such as ``Z6``, ``Z2xZ3``, ``S3`` to a group."""
    text = label.strip()
    key = text.upper()
    if key in CATALOG:
        return make_named(key)
    parts = key.split("X")
    if all(re.fullmatch(r"Z\d+", p) for p in parts):
        sizes = tuple(int(p[1:]) for p in parts)
        if len(sizes) == 1:
            return make_cyclic(sizes[0])
        return make_abelian(sizes)
    raise ValueError(
        f"cannot resolve group label {label!r}; expected Z<n>, a product like Z2xZ3, "
        f"or one of {', '.join(CATALOG)}"
    )


# ---------------------------------------------------------------------------
# element-level operations


def _check_element(group: Group, x: int) -> int:
    x = int(x)
    if not 0 <= x < group.order:
        raise IndexError(f"element index {x} out of range for group of order {group.order}")
    return x


def multiply(group: Group, a: int, b: int) -> int:
    """Product ``g_a g_b`` as an element index."""
    return int(group.cayley[_check_element(group, a), _check_element(group, b)])


def inverse(group: Group, a: int) -> int:
    """Index of ``g_a^{-1}``."""
    return int(group.inverses[_check_element(group, a)])


def element_order(group: Group, x: int) -> int:
    """Multiplicative order of ``g_x``."""
    x = _check_element(group, x)
    cur, k = x, 1
    while cur != group.identity:
        cur = int(group.cayley[cur, x])
        k += 1
    return k


def conjugacy_classes(group: Group) -> list[list[int]]:
    """Conjugacy classes as sorted element lists, identity class first."""
    out: list[list[int]] = [[] for _ in range(group.n_classes)]
    for x in range(group.order):
        out[int(group.class_of[x])].append(x)
    return out


# ---------------------------------------------------------------------------
# serialization


def group_to_json(group: Group) -> dict:
    """JSON-compatible dict with the Cayley table and identity index."""
    return {
        "name": group.name,
        "order": group.order,
        "cayley": group.cayley.tolist(),
        "identity": group.identity,
    }


def group_from_json(obj: dict) -> Group:
    """Rebuild a group from :func:`group_to_json` output.

    All axioms are revalidated and the class partition is recomputed; the
    file's claims are never trusted.  When the stored table matches a label
    that :func:`group_from_label` can resolve, the resolved constructor's
    group is returned so factor structure is recovered.
    """
    try:
        name = str(obj["name"])
        order = int(obj["order"])
        cayley = np.asarray(obj["cayley"], dtype=np.int64)
        identity = int(obj["identity"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed group JSON: {exc}") from exc
    if cayley.shape != (order, order):
        raise ValueError(
            f"declared order {order} does not match Cayley table shape {cayley.shape}"
        )
    try:
        candidate = group_from_label(name)
    except ValueError:
        candidate = None
    if candidate is not None and np.array_equal(candidate.cayley, cayley):
        if candidate.identity != identity:
            raise ValueError(
                f"declared identity {identity} does not match computed {candidate.identity}"
            )
        return candidate
    group = _build_group(name, cayley)
    if group.identity != identity:
        raise ValueError(
            f"declared identity {identity} does not match computed {group.identity}"
        )
    return group


def load_group(path: str) -> Group:
    with open(path, "r", encoding="utf-8") as fh:
        return group_from_json(json.load(fh))


def save_group(group: Group, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(group_to_json(group), fh, indent=2)
        fh.write("\n")
