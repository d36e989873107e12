"""Exact arithmetic for the coefficient groups carried by weights.

Two concrete families cover every group we need: direct products of cyclic
groups (finite orders or infinite cyclic, written multiplicatively) and
finite permutation groups given by generators.  Elements are plain tuples,
so they hash, compare and serialize cheaply:

* abelian products: an exponent vector with one integer per factor, reduced
  into ``[0, order)`` for finite factors;
* permutation groups: a one-line permutation array of length ``degree``.

The product convention is "later factor on the left": for permutations
``multiply(x, y)`` applies ``y`` first, then ``x``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as _iproduct
from typing import Iterable, Mapping, Sequence

from .errors import (
    ElementMismatchError,
    InfiniteGroupError,
    MalformedWordError,
    UnknownGeneratorError,
)

#: Order sentinel for infinite cyclic factors (and infinite element orders).
INF = math.inf

GroupElement = tuple

ABELIAN = "abelian"
PERMUTATION = "perm_group"

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def _check_name(name: str) -> None:
    if not isinstance(name, str) or not _NAME_RE.match(name) or name == "1":
        raise ValueError(f"bad generator name {name!r}")


@dataclass(frozen=True)
class GroupSpec:
    """Description of a coefficient group.

    ``kind`` is ``"abelian"`` (ordered ``factors`` of ``(name, order)`` pairs,
    order a positive int or :data:`INF`) or ``"perm_group"`` (``degree`` plus
    named ``generators``, each a bijection of ``range(degree)``).
    """

    kind: str
    factors: tuple = ()
    degree: int = 0
    generators: tuple = ()

    def __post_init__(self):
        if self.kind == ABELIAN:
            names = [name for name, _ in self.factors]
            for name in names:
                _check_name(name)
            for _, order in self.factors:
                if order is not INF and (not isinstance(order, int) or order < 1):
                    raise ValueError(f"factor order must be >= 1 or INF, got {order!r}")
            if len(set(names)) != len(names):
                raise ValueError("generator names must be pairwise distinct")
        elif self.kind == PERMUTATION:
            if not isinstance(self.degree, int) or self.degree < 1:
                raise ValueError("degree must be a positive integer")
            names = [name for name, _ in self.generators]
            for name in names:
                _check_name(name)
            if len(set(names)) != len(names):
                raise ValueError("generator names must be pairwise distinct")
            for name, perm in self.generators:
                if sorted(perm) != list(range(self.degree)):
                    raise ValueError(f"generator {name!r} is not a bijection on 0..{self.degree - 1}")
        else:
            raise ValueError(f"unknown group kind {self.kind!r}")

    # ------------------------------------------------------------------ #
    # constructors

    @staticmethod
    def abelian(factors: Iterable[tuple[str, object]]) -> "GroupSpec":
        return GroupSpec(ABELIAN, factors=tuple((n, o) for n, o in factors))

    @staticmethod
    def cyclic(order: int, name: str = "a") -> "GroupSpec":
        return GroupSpec.abelian([(name, order)])

    @staticmethod
    def infinite_cyclic(name: str = "a") -> "GroupSpec":
        return GroupSpec.abelian([(name, INF)])

    @staticmethod
    def trivial() -> "GroupSpec":
        return GroupSpec.abelian([])

    @staticmethod
    def perm_group(degree: int, generators: Mapping[str, Sequence[int]]) -> "GroupSpec":
        gens = tuple((name, tuple(generators[name])) for name in generators)
        return GroupSpec(PERMUTATION, degree=degree, generators=gens)

    # ------------------------------------------------------------------ #
    # basic queries

    @property
    def generator_names(self) -> tuple[str, ...]:
        if self.kind == ABELIAN:
            return tuple(name for name, _ in self.factors)
        return tuple(name for name, _ in self.generators)

    def is_finite(self) -> bool:
        if self.kind == ABELIAN:
            return all(order is not INF for _, order in self.factors)
        return True

    def order(self):
        """Group order: an integer, or INF for infinite abelian products."""
        if self.kind == ABELIAN:
            if not self.is_finite():
                return INF
            out = 1
            for _, order in self.factors:
                out *= order
            return out
        return len(self.elements())

    def _check(self, x: GroupElement) -> None:
        expected = len(self.factors) if self.kind == ABELIAN else self.degree
        if not isinstance(x, tuple) or len(x) != expected:
            raise ElementMismatchError(f"element {x!r} does not belong to this group", witness=x)

    # ------------------------------------------------------------------ #
    # arithmetic

    def identity(self) -> GroupElement:
        if self.kind == ABELIAN:
            return (0,) * len(self.factors)
        return tuple(range(self.degree))

    def is_identity(self, x: GroupElement) -> bool:
        return x == self.identity()

    def _reduce(self, exponents: Sequence[int]) -> GroupElement:
        out = []
        for e, (_, order) in zip(exponents, self.factors):
            out.append(e if order is INF else e % order)
        return tuple(out)

    def multiply(self, x: GroupElement, y: GroupElement) -> GroupElement:
        """Product x*y; for permutations this applies y first, then x."""
        self._check(x)
        self._check(y)
        if self.kind == ABELIAN:
            return self._reduce([a + b for a, b in zip(x, y)])
        return tuple(x[y[i]] for i in range(self.degree))

    def inverse(self, x: GroupElement) -> GroupElement:
        self._check(x)
        if self.kind == ABELIAN:
            return self._reduce([-a for a in x])
        out = [0] * self.degree
        for i, xi in enumerate(x):
            out[xi] = i
        return tuple(out)

    def power(self, x: GroupElement, k: int) -> GroupElement:
        if k < 0:
            return self.power(self.inverse(x), -k)
        acc = self.identity()
        base = x
        while k:
            if k & 1:
                acc = self.multiply(base, acc)
            base = self.multiply(base, base)
            k >>= 1
        return acc

    def element_order(self, x: GroupElement):
        """Least k >= 1 with x**k = 1, or INF."""
        self._check(x)
        if self.kind == ABELIAN:
            out = 1
            for e, (_, order) in zip(x, self.factors):
                if order is INF:
                    if e != 0:
                        return INF
                else:
                    out = math.lcm(out, order // math.gcd(order, e % order))
            return out
        out = 1
        seen = [False] * self.degree
        for i in range(self.degree):
            if seen[i]:
                continue
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = x[j]
                length += 1
            out = math.lcm(out, length)
        return out

    # ------------------------------------------------------------------ #
    # enumeration and words

    def elements(self) -> tuple[GroupElement, ...]:
        """All elements in a deterministic order.

        Abelian products enumerate exponent vectors lexicographically; a
        permutation group is closed breadth-first from its generators (the
        result is the generated subgroup, not all of S_degree).
        """
        if self.kind == ABELIAN:
            if not self.is_finite():
                raise InfiniteGroupError("cannot enumerate an infinite group", witness=self.kind)
            return _abelian_elements(self)
        return _perm_closure(self)[0]

    def parse_word(self, text: str) -> GroupElement:
        """Parse a word like ``a^3*b^-1`` over the declared generators."""
        if not isinstance(text, str) or not text.strip():
            raise MalformedWordError(f"malformed word {text!r}", witness=text)
        text = text.strip()
        if text == "1":
            return self.identity()
        gens = dict(self.factors) if self.kind == ABELIAN else dict(self.generators)
        index = {name: i for i, name in enumerate(self.generator_names)}
        result = self.identity()
        for token in text.split("*"):
            token = token.strip()
            name, caret, exp = token.partition("^")
            if not name or (caret and not exp):
                raise MalformedWordError(f"malformed word {text!r}", witness=token)
            if name not in index:
                raise UnknownGeneratorError(f"unknown generator {name!r}", witness=name)
            try:
                k = int(exp) if exp else 1
            except ValueError:
                raise MalformedWordError(f"malformed word {text!r}", witness=token) from None
            if self.kind == ABELIAN:
                vec = [0] * len(self.factors)
                vec[index[name]] = k
                result = self.multiply(result, self._reduce(vec))
            else:
                result = self.multiply(result, self.power(gens[name], k))
        return result

    def format_word(self, x: GroupElement) -> str:
        """Canonical word for x; ``parse_word(format_word(x)) == x``."""
        self._check(x)
        if self.kind == ABELIAN:
            parts = []
            by_name = sorted(zip(self.generator_names, x))
            for name, e in by_name:
                if e == 0:
                    continue
                parts.append(name if e == 1 else f"{name}^{e}")
            return "*".join(parts) if parts else "1"
        words = _perm_closure(self)[1]
        if x not in words:
            raise ElementMismatchError(f"element {x!r} is not in the generated subgroup", witness=x)
        return words[x]


@lru_cache(maxsize=None)
def _abelian_elements(spec: GroupSpec) -> tuple[GroupElement, ...]:
    ranges = [range(order) for _, order in spec.factors]
    return tuple(_iproduct(*ranges))


@lru_cache(maxsize=None)
def _perm_closure(spec: GroupSpec):
    """BFS closure of the generators with sorted frontier.

    Returns (elements in discovery order, {element: shortest word}).  Words
    use only positive generator letters, compressed into powers.
    """
    gens = sorted(spec.generators)
    ident = spec.identity()
    letters: dict[GroupElement, tuple[str, ...]] = {ident: ()}
    order = [ident]
    frontier = [ident]
    while frontier:
        discovered = []
        for x in frontier:
            for name, g in gens:
                y = spec.multiply(x, g)
                if y not in letters:
                    letters[y] = letters[x] + (name,)
                    discovered.append(y)
        discovered.sort()
        order.extend(discovered)
        frontier = discovered
    words = {x: _compress_word(seq) for x, seq in letters.items()}
    return tuple(order), words


def _compress_word(seq: tuple[str, ...]) -> str:
    if not seq:
        return "1"
    parts = []
    i = 0
    while i < len(seq):
        j = i
        while j < len(seq) and seq[j] == seq[i]:
            j += 1
        run = j - i
        parts.append(seq[i] if run == 1 else f"{seq[i]}^{run}")
        i = j
    return "*".join(parts)
