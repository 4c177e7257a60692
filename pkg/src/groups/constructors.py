"""Catalog constructors and the group expression grammar.

EXPR := TERM ("x" TERM)*, TERM := Z<k> | D<k> | S<k> | A<k> | Q8 | Dic<k>.

Element orderings:
- Z<n>: 0, 1, .., n-1
- D<n>: e, r, .., r^(n-1), s, rs, .., r^(n-1)s (index f*n + k for r^k s^f)
- S<n>, A<n>: permutations in lexicographic order of their one-line words
- Dic<n>: e, a, .., a^(2n-1), x, ax, .., a^(2n-1)x with x^2 = a^n and x a = a^-1 x
- Q8: 1, i, -1, -i, j, k, -j, -k (Dic2 relabelled)
- products: lexicographic pairs, index i*|H| + j
"""
import logging
import re
from functools import reduce
from itertools import permutations
from math import factorial
from typing import List, Optional, Tuple
import numpy as np

from src.config.search_configs import SEARCH_CONFIGS
from src.exceptions import InvalidArgumentError
from src.groups.group import FiniteGroup

logger = logging.getLogger(__name__)

TERM = re.compile(r"(Z|D|S|A|Dic)([0-9]+)|Q8")


def _power(base: str, k: int) -> str:
    return "" if k == 0 else base if k == 1 else f"{base}^{k}"


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise InvalidArgumentError(f"Z{n}: cyclic groups need n >= 1")
    return FiniteGroup(np.add.outer(np.arange(n), np.arange(n)) % n, name=f"Z{n}")


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n: r^a s^f * r^b s^g = r^(a + (-1)^f b) s^(f+g)."""
    if n < 1:
        raise InvalidArgumentError(f"D{n}: dihedral groups need n >= 1")
    index = np.arange(2 * n)
    k, f = index % n, index // n
    sign = np.where(f == 1, -1, 1)
    rotation = (k[:, None] + sign[:, None] * k[None, :]) % n
    flip = f[:, None] ^ f[None, :]
    labels = [(_power("r", k) + ("s" if f else "")) or "e" for f in (0, 1) for k in range(n)]
    return FiniteGroup(flip * n + rotation, labels, f"D{n}")


def _permutation_group(elements: List[Tuple[int, ...]], name: str) -> FiniteGroup:
    position = {p: i for i, p in enumerate(elements)}
    table = [[position[tuple(p[q[i]] for i in range(len(q)))] for q in elements] for p in elements]
    labels = ["".join(map(str, p)) or "e" for p in elements]
    return FiniteGroup(table, labels, name)


def _check_degree(n: int, name: str) -> None:
    cap = SEARCH_CONFIGS["groups"]["max_symmetric_degree"]
    if not 1 <= n <= cap:
        raise InvalidArgumentError(f"{name}: degree must be between 1 and {cap}")


def symmetric(n: int) -> FiniteGroup:
    """All permutations of {0..n-1}, composed as (p*q)(i) = p(q(i))."""
    _check_degree(n, f"S{n}")
    return _permutation_group(list(permutations(range(n))), f"S{n}")


def _is_even(p: Tuple[int, ...]) -> bool:
    inversions = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inversions % 2 == 0


def alternating(n: int) -> FiniteGroup:
    _check_degree(n, f"A{n}")
    return _permutation_group([p for p in permutations(range(n)) if _is_even(p)], f"A{n}")


def dicyclic(n: int, name: Optional[str] = None, labels: Optional[List[str]] = None) -> FiniteGroup:
    """Order 4n, generated by a of order 2n and x with x^2 = a^n and x a x^-1 = a^-1."""
    if n < 1:
        raise InvalidArgumentError(f"Dic{n}: dicyclic groups need n >= 1")
    m = 2 * n
    index = np.arange(2 * m)
    k, f = index % m, index // m
    # a^k x^f * a^l x^g = a^(k + (-1)^f l + n f g) x^(f xor g)
    sign = np.where(f == 1, -1, 1)
    rotation = (k[:, None] + sign[:, None] * k[None, :] + n * (f[:, None] & f[None, :])) % m
    flip = f[:, None] ^ f[None, :]
    if labels is None:
        labels = [(_power("a", k) + ("x" if f else "")) or "e" for f in (0, 1) for k in range(m)]
    return FiniteGroup(flip * m + rotation, labels, name or f"Dic{n}")


def quaternion() -> FiniteGroup:
    return dicyclic(2, "Q8", ["1", "i", "-1", "-i", "j", "k", "-j", "-k"])


def direct_product(*factors: FiniteGroup) -> FiniteGroup:
    """Lexicographic pairs; labels join the factor labels with ';'."""
    if not factors:
        raise InvalidArgumentError("A direct product needs at least one factor")

    def pair(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
        table = g.table[:, None, :, None] * h.order + h.table[None, :, None, :]
        size = g.order * h.order
        labels = [f"{a};{b}" for a in g.labels for b in h.labels]
        return FiniteGroup(table.reshape(size, size), labels, f"{g.name}x{h.name}")

    return reduce(pair, factors)


def _term_order(term: str) -> int:
    match = TERM.fullmatch(term)
    if match is None:
        raise InvalidArgumentError(f"Unknown group term {term!r}; expected Z<k>, D<k>, S<k>, A<k>, Q8 or Dic<k>")
    if term == "Q8":
        return 8
    kind, n = match.group(1), int(match.group(2))
    if kind in ("S", "A"):
        _check_degree(n, term)
    if n < 1:
        raise InvalidArgumentError(f"{term}: index must be at least 1")
    return {
        "Z": n,
        "D": 2 * n,
        "S": factorial(n),
        "A": max(1, factorial(n) // 2),
        "Dic": 4 * n,
    }[kind]


def _build_term(term: str) -> FiniteGroup:
    if term == "Q8":
        return quaternion()
    match = TERM.fullmatch(term)
    kind, n = match.group(1), int(match.group(2))
    return {"Z": cyclic, "D": dihedral, "S": symmetric, "A": alternating, "Dic": dicyclic}[kind](n)


def make_group(spec: str, order_cap: Optional[int] = None) -> FiniteGroup:
    """
    Build and verify the group named by a group expression such as "Z2xZ6" or "Dic3".

    The order is checked against the cap before any table is built.
    """
    cap = SEARCH_CONFIGS["groups"]["order_cap"] if order_cap is None else order_cap
    if not spec or spec != spec.strip():
        raise InvalidArgumentError(f"Malformed group expression {spec!r}")
    terms = spec.split("x")
    order = 1
    for term in terms:
        order *= _term_order(term)
    if order > cap:
        raise InvalidArgumentError(f"{spec} has order {order}, above the cap of {cap}")
    group = direct_product(*[_build_term(term) for term in terms])
    group.name = spec
    logger.info(f"Built {spec} of order {group.order}")
    return group
