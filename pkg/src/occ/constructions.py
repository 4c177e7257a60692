"""Families of functions with every radius at most r, giving lower bounds on Occ(m,n,r)."""
import logging
from itertools import combinations, product
from string import ascii_lowercase
from typing import Callable, Iterable, List, Sequence, Tuple

from src.config.search_configs import SEARCH_CONFIGS
from src.exceptions import InvalidArgumentError, VerificationError
from src.occ.bounds import OccInstance
from src.orders import EqualityOrder
from src.poset import FiniteFunction, FunctionFamily, radius

logger = logging.getLogger(__name__)


def letters(n: int) -> Tuple[str, ...]:
    if n <= len(ascii_lowercase):
        return tuple(ascii_lowercase[:n])
    return tuple(f"y{i}" for i in range(n))


def verify_family_radius(family: FunctionFamily, r: int) -> bool:
    """True iff every member of an equality-ordered family has radius at most r."""
    if not isinstance(family.order, EqualityOrder):
        raise InvalidArgumentError(f"Radius bounds are checked under equality, not {family.order.name}")
    return all(radius(family, i).value <= r for i in range(len(family)))


def family_of_words(words: Iterable[Sequence[int]], n: int) -> FunctionFamily:
    functions = sorted({tuple(w) for w in words})
    return FunctionFamily([FiniteFunction(f, n) for f in functions], EqualityOrder(), letters(n))


def _verified(family: FunctionFamily, r: int, name: str) -> FunctionFamily:
    if not verify_family_radius(family, r):
        raise VerificationError(f"{name} produced a member with radius above {r}")
    logger.debug(f"{name}: {len(family)} functions, all radii <= {r}")
    return family


def construct_3n2(n: int) -> FunctionFamily:
    """
    uvu, vuv, uuv and vvu for every pair of letters {u, v}, plus the constant words.

    Each pair word is pinned down by its first two positions, each constant word
    by its last two.
    """
    if n < 2:
        raise InvalidArgumentError(f"Need at least two letters, got n={n}")
    words: List[Tuple[int, ...]] = [(u, u, u) for u in range(n)]
    for u, v in combinations(range(n), 2):
        words += [(u, v, u), (v, u, v), (u, u, v), (v, v, u)]
    return _verified(family_of_words(words, n), 2, "construct_3n2")


def construct_m22(m: int) -> FunctionFamily:
    """a b^(i-1) a^(m-i) for i = 1..m and the same words with a and b swapped."""
    if m < 2:
        raise InvalidArgumentError(f"Need a domain of at least two positions, got m={m}")
    words = []
    for i in range(1, m + 1):
        word = (0,) + (1,) * (i - 1) + (0,) * (m - i)
        words += [word, tuple(1 - v for v in word)]
    return _verified(family_of_words(words, 2), 2, "construct_m22")


def construct_mn1(m: int, n: int) -> FunctionFamily:
    """The base letter everywhere except one position, which carries another letter."""
    if m < 1:
        raise InvalidArgumentError(f"Need a domain of at least one position, got m={m}")
    if n < 2:
        raise InvalidArgumentError(f"Need at least two letters, got n={n}")
    words = []
    for position in range(m):
        for letter in range(1, n):
            word = [0] * m
            word[position] = letter
            words.append(tuple(word))
    return _verified(family_of_words(words, n), 1, "construct_mn1")


def full_function_space(m: int, n: int) -> FunctionFamily:
    """All n^m functions; each one is its own restriction to the whole domain."""
    cap = SEARCH_CONFIGS["occ"]["full_space_witness_cap"]
    if n ** m > cap:
        raise InvalidArgumentError(f"The full space of {n}^{m} functions is larger than {cap}")
    return family_of_words(product(range(n), repeat=m), n)


def single_function(m: int, n: int) -> FunctionFamily:
    return family_of_words([(0,) * m], n)


def _applicable(inst: OccInstance) -> List[Tuple[str, Callable[[], FunctionFamily]]]:
    m, n, r = inst.m, inst.n, inst.r
    options: List[Tuple[str, Callable[[], FunctionFamily]]] = []
    if r == m and n ** m <= SEARCH_CONFIGS["occ"]["full_space_witness_cap"]:
        options.append(("full_function_space", lambda: full_function_space(m, n)))
    if m == 3 and r >= 2 and n >= 2:
        options.append(("construct_3n2", lambda: construct_3n2(n)))
    if n == 2 and r >= 2 and m >= 2:
        options.append(("construct_m22", lambda: construct_m22(m)))
    if r >= 1 and n >= 2:
        options.append(("construct_mn1", lambda: construct_mn1(m, n)))
    options.append(("single_function", lambda: single_function(m, n)))
    return options


def construction_size(name: str, inst: OccInstance) -> int:
    m, n = inst.m, inst.n
    return {
        "full_function_space": n ** m,
        "construct_3n2": 2 * n * (n - 1) + n,
        "construct_m22": 2 * m,
        "construct_mn1": m * (n - 1),
        "single_function": 1,
    }[name]


def best_construction(inst: OccInstance) -> Tuple[str, FunctionFamily]:
    """The largest known construction valid for the instance, with its name."""
    options = _applicable(inst)
    name, build = max(options, key=lambda option: construction_size(option[0], inst))
    family = build()
    logger.info(f"Best construction for {inst}: {name} with {len(family)} functions")
    return name, family
