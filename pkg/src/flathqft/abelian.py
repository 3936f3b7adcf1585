"""Abelian coefficient groups, finitely generated abelian groups, Hom and Ext.

The multiplicative group of units of the base ring is modelled additively by
an abstract abelian group with exact arithmetic: Z/n, the rational circle
Q/Z, Z, and finite direct sums of these.  Q/Z plays the role of the divisible
case; its elements are exact ``Fraction`` values in [0, 1).

Abelian extensions of a finitely generated group by a coefficient group are
stored with an explicit normalized symmetric 2-cocycle.  The standard
representative for a class is a sum of carry rules, one per torsion factor.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Iterator, Sequence

from .errors import InputError, InvalidClassError, NotAHomomorphismError


# ---------------------------------------------------------------------------
# coefficient groups


class CoeffGroup:
    """Abstract abelian coefficient group written additively."""

    def element(self, raw) -> "CoeffElement":
        return CoeffElement(self, self.canon(raw))

    def zero(self) -> "CoeffElement":
        return self.element(self.zero_raw())

    # the per-kind raw protocol ------------------------------------------------
    def canon(self, raw):
        raise NotImplementedError

    def zero_raw(self):
        raise NotImplementedError

    def add_raw(self, a, b):
        raise NotImplementedError

    def neg_raw(self, a):
        raise NotImplementedError

    def scale_raw(self, n: int, a):
        raise NotImplementedError

    def order(self) -> int | None:
        """Group order, or None when infinite."""
        raise NotImplementedError

    def elements(self) -> Iterator["CoeffElement"]:
        """All elements in a deterministic order (finite groups only)."""
        raise InputError(f"cannot enumerate the infinite group {self}")

    def torsion_elements(self, d: int) -> list["CoeffElement"]:
        """All x with d*x = 0, in a deterministic order."""
        raise NotImplementedError

    def divide(self, n: int, target) -> "CoeffElement | None":
        """Canonical smallest x with n*x = target, or None."""
        raise NotImplementedError

    def coset_rep(self, a, n: int):
        """Canonical representative of the coset a + n*A."""
        raise NotImplementedError

    def quotient_by_multiples(self, n: int) -> list[tuple[int, "CoeffElement"]]:
        """A/nA as a list of (cyclic order, generator lifted to A)."""
        raise NotImplementedError

    def parse(self, text: str) -> "CoeffElement":
        raise NotImplementedError

    def format(self, raw) -> str:
        raise NotImplementedError

    def spec_string(self) -> str:
        raise NotImplementedError

    def __repr__(self):
        return self.spec_string()


@dataclass(frozen=True)
class CoeffElement:
    """An element of a coefficient group, in canonical form."""

    group: CoeffGroup
    value: object

    def __add__(self, other: "CoeffElement") -> "CoeffElement":
        if other.group != self.group:
            raise InputError(f"cannot add elements of {self.group} and {other.group}")
        return CoeffElement(self.group, self.group.add_raw(self.value, other.value))

    def __neg__(self) -> "CoeffElement":
        return CoeffElement(self.group, self.group.neg_raw(self.value))

    def __sub__(self, other: "CoeffElement") -> "CoeffElement":
        return self + (-other)

    def __rmul__(self, n: int) -> "CoeffElement":
        return CoeffElement(self.group, self.group.scale_raw(n, self.value))

    def is_zero(self) -> bool:
        return self.value == self.group.zero_raw()

    def __str__(self):
        return self.group.format(self.value)

    def __repr__(self):
        return f"{self.group.format(self.value)} in {self.group}"


def _parse_int(text: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise InputError(f"expected an integer literal, got {text!r}") from None


@dataclass(frozen=True)
class Cyclic(CoeffGroup):
    """Z/n with residues in [0, n)."""

    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise InputError("cyclic order must be >= 1")

    def canon(self, raw):
        return int(raw) % self.modulus

    def zero_raw(self):
        return 0

    def add_raw(self, a, b):
        return (a + b) % self.modulus

    def neg_raw(self, a):
        return (-a) % self.modulus

    def scale_raw(self, n, a):
        return (n * a) % self.modulus

    def order(self):
        return self.modulus

    def elements(self):
        for k in range(self.modulus):
            yield self.element(k)

    def torsion_elements(self, d):
        g = gcd(d, self.modulus)
        step = self.modulus // g
        return [self.element(k * step) for k in range(g)]

    def divide(self, n, target):
        t = self.canon(target)
        g = gcd(n, self.modulus)
        if t % g != 0:
            return None
        m2 = self.modulus // g
        inv = pow((n // g) % m2, -1, m2) if m2 > 1 else 0
        return self.element(((t // g) * inv) % m2)

    def coset_rep(self, a, n):
        g = gcd(n, self.modulus)
        return a % g

    def quotient_by_multiples(self, n):
        g = gcd(n, self.modulus)
        return [(g, self.element(1))] if g > 1 else []

    def parse(self, text):
        return self.element(_parse_int(text))

    def format(self, raw):
        return str(raw)

    def spec_string(self):
        return f"z/{self.modulus}"


@dataclass(frozen=True)
class RationalCircle(CoeffGroup):
    """Q/Z with exact rational representatives in [0, 1); divisible."""

    def canon(self, raw):
        f = Fraction(raw)
        return f - (f.numerator // f.denominator)

    def zero_raw(self):
        return Fraction(0)

    def add_raw(self, a, b):
        return self.canon(a + b)

    def neg_raw(self, a):
        return self.canon(-a)

    def scale_raw(self, n, a):
        return self.canon(n * a)

    def order(self):
        return None

    def torsion_elements(self, d):
        return [self.element(Fraction(k, d)) for k in range(d)]

    def divide(self, n, target):
        t = self.canon(target)
        return self.element(t / n)

    def coset_rep(self, a, n):
        return Fraction(0)

    def quotient_by_multiples(self, n):
        return []

    def parse(self, text):
        text = text.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return self.element(Fraction(_parse_int(num), _parse_int(den)))
        return self.element(_parse_int(text))

    def format(self, raw):
        return f"{raw.numerator}/{raw.denominator}" if raw.denominator != 1 else str(raw.numerator)

    def spec_string(self):
        return "q/z"


@dataclass(frozen=True)
class FreeInt(CoeffGroup):
    """The integers."""

    def canon(self, raw):
        return int(raw)

    def zero_raw(self):
        return 0

    def add_raw(self, a, b):
        return a + b

    def neg_raw(self, a):
        return -a

    def scale_raw(self, n, a):
        return n * a

    def order(self):
        return None

    def torsion_elements(self, d):
        return [self.element(0)]

    def divide(self, n, target):
        return self.element(target // n) if target % n == 0 else None

    def coset_rep(self, a, n):
        return a % n

    def quotient_by_multiples(self, n):
        return [(n, self.element(1))] if n > 1 else []

    def parse(self, text):
        return self.element(_parse_int(text))

    def format(self, raw):
        return str(raw)

    def spec_string(self):
        return "z"


@dataclass(frozen=True)
class DirectSum(CoeffGroup):
    """A finite direct sum of coefficient groups; nested sums are flattened."""

    parts: tuple[CoeffGroup, ...]

    def __post_init__(self):
        if not self.parts:
            raise InputError("direct sum needs at least one component")
        flat = []
        for p in self.parts:
            flat.extend(p.parts if isinstance(p, DirectSum) else (p,))
        object.__setattr__(self, "parts", tuple(flat))

    def canon(self, raw):
        raw = tuple(raw)
        if len(raw) != len(self.parts):
            raise InputError(f"expected {len(self.parts)} components, got {len(raw)}")
        return tuple(p.canon(r) for p, r in zip(self.parts, raw))

    def zero_raw(self):
        return tuple(p.zero_raw() for p in self.parts)

    def add_raw(self, a, b):
        return tuple(p.add_raw(x, y) for p, x, y in zip(self.parts, a, b))

    def neg_raw(self, a):
        return tuple(p.neg_raw(x) for p, x in zip(self.parts, a))

    def scale_raw(self, n, a):
        return tuple(p.scale_raw(n, x) for p, x in zip(self.parts, a))

    def order(self):
        total = 1
        for p in self.parts:
            o = p.order()
            if o is None:
                return None
            total *= o
        return total

    def elements(self):
        for combo in itertools.product(*(list(p.elements()) for p in self.parts)):
            yield self.element(tuple(e.value for e in combo))

    def torsion_elements(self, d):
        combos = itertools.product(*(p.torsion_elements(d) for p in self.parts))
        return [self.element(tuple(e.value for e in combo)) for combo in combos]

    def divide(self, n, target):
        out = []
        for p, t in zip(self.parts, target):
            x = p.divide(n, t)
            if x is None:
                return None
            out.append(x.value)
        return self.element(tuple(out))

    def coset_rep(self, a, n):
        return tuple(p.coset_rep(x, n) for p, x in zip(self.parts, a))

    def quotient_by_multiples(self, n):
        out = []
        for i, p in enumerate(self.parts):
            for order, gen in p.quotient_by_multiples(n):
                lifted = [q.zero_raw() for q in self.parts]
                lifted[i] = gen.value
                out.append((order, self.element(tuple(lifted))))
        return out

    def parse(self, text):
        pieces = text.split(",")
        if len(pieces) != len(self.parts):
            raise InputError(f"expected {len(self.parts)} comma-separated components")
        return self.element(tuple(p.parse(piece).value for p, piece in zip(self.parts, pieces)))

    def format(self, raw):
        return ",".join(p.format(x) for p, x in zip(self.parts, raw))

    def spec_string(self):
        return "+".join(p.spec_string() for p in self.parts)


def parse_group(text: str) -> CoeffGroup:
    """Parse a coefficient group spec string such as "z", "z/6", "q/z", "z/2+q/z"."""
    text = text.strip().lower()
    pieces = [p.strip() for p in text.split("+")]
    groups: list[CoeffGroup] = []
    for p in pieces:
        if p == "z":
            groups.append(FreeInt())
        elif p == "q/z":
            groups.append(RationalCircle())
        elif p.startswith("z/"):
            groups.append(Cyclic(_parse_int(p[2:])))
        else:
            raise InputError(f"unknown coefficient group {p!r}")
    return groups[0] if len(groups) == 1 else DirectSum(tuple(groups))


def solve_division(A: CoeffGroup, n: int, target: CoeffElement) -> CoeffElement | None:
    """Canonical x with n*x = target in A, or None when the division fails."""
    if n < 1:
        raise InputError("divisor must be >= 1")
    if target.group != A:
        raise InputError("target does not belong to the group")
    x = A.divide(n, target.value)
    if x is not None:
        assert (n * x) == target
    return x


# ---------------------------------------------------------------------------
# finitely generated abelian groups


def _default_labels(factors: Sequence[int], rank: int) -> tuple[str, ...]:
    return tuple(f"t{i}" for i in range(len(factors))) + tuple(f"f{i}" for i in range(rank))


@dataclass(frozen=True)
class FgAbGroup:
    """Z/d1 + ... + Z/dk + Z^rank with a divisibility chain d1 | d2 | ... .

    Elements are integer tuples, torsion components reduced into [0, d).
    """

    invariant_factors: tuple[int, ...]
    rank: int = 0
    generator_labels: tuple[str, ...] = ()

    def __post_init__(self):
        for d in self.invariant_factors:
            if d < 2:
                raise InputError("invariant factors must be >= 2")
        for a, b in zip(self.invariant_factors, self.invariant_factors[1:]):
            if b % a != 0:
                raise InputError(f"invariant factors must form a chain: {a} does not divide {b}")
        if self.rank < 0:
            raise InputError("rank must be >= 0")
        if not self.generator_labels:
            object.__setattr__(self, "generator_labels",
                               _default_labels(self.invariant_factors, self.rank))
        elif len(self.generator_labels) != self.n_generators:
            raise InputError("one label per generator required")

    @property
    def n_torsion(self) -> int:
        return len(self.invariant_factors)

    @property
    def n_generators(self) -> int:
        return self.n_torsion + self.rank

    @property
    def orders(self) -> tuple[int, ...]:
        """Generator orders; 0 encodes infinite order."""
        return self.invariant_factors + (0,) * self.rank

    def is_trivial(self) -> bool:
        return self.n_generators == 0

    def order(self) -> int | None:
        if self.rank > 0:
            return None
        total = 1
        for d in self.invariant_factors:
            total *= d
        return total

    def canon(self, x: Sequence[int]) -> tuple[int, ...]:
        x = tuple(int(a) for a in x)
        if len(x) != self.n_generators:
            raise InputError(f"element needs {self.n_generators} components, got {len(x)}")
        return tuple(a % d if d else a for a, d in zip(x, self.orders))

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.n_generators

    def add(self, x, y) -> tuple[int, ...]:
        return self.canon(a + b for a, b in zip(self.canon(x), self.canon(y)))

    def neg(self, x) -> tuple[int, ...]:
        return self.canon(-a for a in self.canon(x))

    def scale(self, n: int, x) -> tuple[int, ...]:
        return self.canon(n * a for a in self.canon(x))

    def generator(self, i: int) -> tuple[int, ...]:
        return self.canon(tuple(1 if j == i else 0 for j in range(self.n_generators)))

    def elements(self) -> Iterator[tuple[int, ...]]:
        if self.rank > 0:
            raise InputError("cannot enumerate an infinite group")
        for combo in itertools.product(*(range(d) for d in self.invariant_factors)):
            yield combo

    def __str__(self):
        pieces = [f"Z/{d}" for d in self.invariant_factors]
        if self.rank == 1:
            pieces.append("Z")
        elif self.rank > 1:
            pieces.append(f"Z^{self.rank}")
        return " + ".join(pieces) if pieces else "0"


def fgab_from_cyclic_orders(orders: Iterable[int]) -> FgAbGroup:
    """Assemble Z/o1 + Z/o2 + ... into invariant-factor normal form.

    An order of 0 stands for a Z summand; orders of 1 are dropped.
    """
    rank = 0
    by_prime: dict[int, list[int]] = {}
    for o in orders:
        if o == 0:
            rank += 1
            continue
        if o == 1:
            continue
        n, p = o, 2
        while p * p <= n:
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                by_prime.setdefault(p, []).append(p ** e)
            p += 1
        if n > 1:
            by_prime.setdefault(n, []).append(n)
    for p in by_prime:
        by_prime[p].sort(reverse=True)
    width = max((len(v) for v in by_prime.values()), default=0)
    factors = []
    for i in range(width):
        f = 1
        for p in sorted(by_prime):
            powers = by_prime[p]
            if i < len(powers):
                f *= powers[i]
        factors.append(f)
    factors.reverse()
    return FgAbGroup(tuple(factors), rank)


@dataclass(frozen=True)
class GroupHom:
    """A homomorphism from an FgAbGroup into a coefficient group."""

    source: FgAbGroup
    target: CoeffGroup
    values: tuple[CoeffElement, ...]

    def __call__(self, x: Sequence[int]) -> CoeffElement:
        x = self.source.canon(x)
        acc = self.target.zero()
        for a, v in zip(x, self.values):
            acc = acc + a * v
        return acc

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values)


def hom_values(G: FgAbGroup, A: CoeffGroup,
               assignment: Sequence[CoeffElement]) -> GroupHom:
    """Build the homomorphism sending each generator to the assigned value.

    Rejected unless every torsion generator of order d gets a value killed
    by d.
    """
    values = tuple(assignment)
    if len(values) != G.n_generators:
        raise NotAHomomorphismError(
            f"need {G.n_generators} generator values, got {len(values)}")
    for v in values:
        if v.group != A:
            raise NotAHomomorphismError(f"value {v!r} not in {A}")
    for d, v, label in zip(G.orders, values, G.generator_labels):
        if d and not (d * v).is_zero():
            raise NotAHomomorphismError(
                f"generator {label} has order {d} but {d}*{v} != 0")
    return GroupHom(G, A, values)


def enumerate_homs(G: FgAbGroup, A: CoeffGroup) -> list[GroupHom]:
    """All homomorphisms G -> A (requires finite A or finite G with torsion hitting A)."""
    choices = []
    for d in G.orders:
        if d:
            choices.append(A.torsion_elements(d))
        else:
            choices.append(list(A.elements()))
    return [GroupHom(G, A, combo) for combo in itertools.product(*choices)]


# ---------------------------------------------------------------------------
# Ext groups and abelian extensions


@dataclass(frozen=True)
class ExtComponent:
    """The contribution A/dA of one torsion factor Z/d of the base."""

    torsion_factor: int
    cyclic_parts: tuple[tuple[int, CoeffElement], ...]  # (order, generator in A)


@dataclass(frozen=True)
class ExtClass:
    """An element of Ext(G, A): one carry value in A per torsion factor of G."""

    base: FgAbGroup
    coeff: CoeffGroup
    carries: tuple[CoeffElement, ...]

    def __post_init__(self):
        if len(self.carries) != self.base.n_torsion:
            raise InvalidClassError(
                f"need {self.base.n_torsion} carry values, got {len(self.carries)}")
        for c in self.carries:
            if c.group != self.coeff:
                raise InvalidClassError(f"carry value {c!r} not in {self.coeff}")

    def canonical(self) -> tuple:
        """Carry values reduced modulo d*A; equal classes get equal tuples."""
        return tuple(self.coeff.coset_rep(c.value, d)
                     for c, d in zip(self.carries, self.base.invariant_factors))

    def is_zero(self) -> bool:
        zero = tuple(self.coeff.coset_rep(self.coeff.zero_raw(), d)
                     for d in self.base.invariant_factors)
        return self.canonical() == zero

    def __add__(self, other: "ExtClass") -> "ExtClass":
        if (other.base, other.coeff) != (self.base, self.coeff):
            raise InvalidClassError("classes live in different Ext groups")
        return ExtClass(self.base, self.coeff,
                        tuple(a + b for a, b in zip(self.carries, other.carries)))

    def __neg__(self) -> "ExtClass":
        return ExtClass(self.base, self.coeff, tuple(-a for a in self.carries))

    def __eq__(self, other):
        return (isinstance(other, ExtClass)
                and self.base == other.base
                and self.coeff == other.coeff
                and self.canonical() == other.canonical())

    def __hash__(self):
        return hash((self.base, self.coeff, self.canonical()))


@dataclass(frozen=True)
class ExtGroup:
    """Ext(G, A) = direct sum of A/dA over the torsion factors d of G."""

    base: FgAbGroup
    coeff: CoeffGroup
    components: tuple[ExtComponent, ...]

    @property
    def group(self) -> FgAbGroup:
        orders = [order for comp in self.components
                  for order, _ in comp.cyclic_parts]
        return fgab_from_cyclic_orders(orders)

    def order(self) -> int:
        total = 1
        for comp in self.components:
            for order, _ in comp.cyclic_parts:
                total *= order
        return total

    def zero_class(self) -> ExtClass:
        return ExtClass(self.base, self.coeff,
                        tuple(self.coeff.zero() for _ in self.components))

    def class_from_coords(self, coords: Sequence[int]) -> ExtClass:
        flat = [(comp, order, gen) for comp in self.components
                for order, gen in comp.cyclic_parts]
        coords = list(coords)
        if len(coords) != len(flat):
            raise InvalidClassError(f"need {len(flat)} coordinates, got {len(coords)}")
        by_comp = {comp: self.coeff.zero() for comp in self.components}
        for (comp, order, gen), k in zip(flat, coords):
            if not (0 <= k < order):
                raise InvalidClassError(f"coordinate {k} out of range [0, {order})")
            by_comp[comp] = by_comp[comp] + k * gen
        return ExtClass(self.base, self.coeff,
                        tuple(by_comp[comp] for comp in self.components))

    def classes(self) -> list[ExtClass]:
        ranges = [range(order) for comp in self.components
                  for order, _ in comp.cyclic_parts]
        return [self.class_from_coords(coords)
                for coords in itertools.product(*ranges)]


def ext_group(G: FgAbGroup, A: CoeffGroup) -> ExtGroup:
    """Ext(G, A): the free part of G contributes nothing; each Z/d gives A/dA."""
    comps = tuple(ExtComponent(d, tuple(A.quotient_by_multiples(d)))
                  for d in G.invariant_factors)
    return ExtGroup(G, A, comps)


class Extension:
    """An abelian extension of ``base`` by ``fiber`` with explicit 2-cocycle.

    The standard construction uses carry rules: on the torsion factor Z/d with
    carry value a, the cocycle is c(i, j) = a when the representatives wrap
    (i + j >= d) and 0 otherwise.  An arbitrary symmetric normalized cocycle
    function may be supplied instead (used when rebuilding extensions from
    monoidal functors).
    """

    def __init__(self, base: FgAbGroup, fiber: CoeffGroup,
                 carries: Sequence[CoeffElement] | None = None,
                 cocycle_fn: Callable[[tuple, tuple], CoeffElement] | None = None):
        if (carries is None) == (cocycle_fn is None):
            raise InputError("exactly one of carries / cocycle_fn required")
        if carries is not None:
            carries = tuple(carries)
            if len(carries) != base.n_torsion:
                raise InvalidClassError(
                    f"need {base.n_torsion} carry values, got {len(carries)}")
            for c in carries:
                if c.group != fiber:
                    raise InvalidClassError(f"carry value {c!r} not in {fiber}")
        self.base = base
        self.fiber = fiber
        self.carries = carries
        self._cocycle_fn = cocycle_fn

    def cocycle(self, x: Sequence[int], y: Sequence[int]) -> CoeffElement:
        x = self.base.canon(x)
        y = self.base.canon(y)
        if self._cocycle_fn is not None:
            return self._cocycle_fn(x, y)
        acc = self.fiber.zero()
        for i, d in enumerate(self.base.invariant_factors):
            if x[i] + y[i] >= d:
                acc = acc + self.carries[i]
        return acc

    # group structure on pairs (a, x) ----------------------------------------
    def element(self, a: CoeffElement, x: Sequence[int]) -> "ExtElement":
        if a.group != self.fiber:
            raise InputError(f"fiber part {a!r} not in {self.fiber}")
        return ExtElement(self, a, self.base.canon(x))

    def zero(self) -> "ExtElement":
        return self.element(self.fiber.zero(), self.base.zero())

    def add(self, u: "ExtElement", v: "ExtElement") -> "ExtElement":
        return self.element(u.a + v.a + self.cocycle(u.x, v.x),
                            self.base.add(u.x, v.x))

    def neg(self, u: "ExtElement") -> "ExtElement":
        nx = self.base.neg(u.x)
        return self.element(-u.a - self.cocycle(u.x, nx), nx)

    def scale(self, n: int, u: "ExtElement") -> "ExtElement":
        if n < 0:
            return self.scale(-n, self.neg(u))
        acc = self.zero()
        doubling = u
        while n:
            if n & 1:
                acc = self.add(acc, doubling)
            n >>= 1
            if n:
                doubling = self.add(doubling, doubling)
        return acc

    def elements(self) -> Iterator["ExtElement"]:
        for a in self.fiber.elements():
            for x in self.base.elements():
                yield self.element(a, x)

    def ext_class(self) -> ExtClass:
        """The class of this extension, read off torsion-generator multiples.

        For the torsion generator e_i of order d the element d*(0, e_i) lies
        in the fiber; its fiber part modulo d*A is the class datum.
        """
        carries = []
        for i in range(self.base.n_torsion):
            d = self.base.invariant_factors[i]
            lifted = self.element(self.fiber.zero(),
                                  self.base.generator(i))
            power = self.scale(d, lifted)
            assert power.x == self.base.zero()
            carries.append(power.a)
        return ExtClass(self.base, self.fiber, tuple(carries))

    def __repr__(self):
        kind = "carry" if self.carries is not None else "fn"
        return f"Extension({self.base} by {self.fiber}, {kind})"


@dataclass(frozen=True)
class ExtElement:
    """An element (a, x) of an extension, added with the cocycle twist."""

    ext: Extension
    a: CoeffElement
    x: tuple[int, ...]

    def __add__(self, other: "ExtElement") -> "ExtElement":
        if other.ext is not self.ext:
            raise InputError("elements of different extensions")
        return self.ext.add(self, other)

    def __neg__(self) -> "ExtElement":
        return self.ext.neg(self)

    def __sub__(self, other: "ExtElement") -> "ExtElement":
        return self + (-other)

    def __rmul__(self, n: int) -> "ExtElement":
        return self.ext.scale(n, self)

    def __eq__(self, other):
        return (isinstance(other, ExtElement) and other.ext is self.ext
                and other.a == self.a and other.x == self.x)

    def __hash__(self):
        return hash((id(self.ext), self.a, self.x))

    def __repr__(self):
        return f"({self.a}, {self.x})"


def extension_from_class(G: FgAbGroup, A: CoeffGroup, cls) -> Extension:
    """Realize an Ext class as a concrete extension with carry cocycle."""
    if isinstance(cls, ExtClass):
        if cls.base != G or cls.coeff != A:
            raise InvalidClassError("class belongs to a different Ext group")
        carries = cls.carries
    else:
        carries = tuple(cls)
        for c in carries:
            if not isinstance(c, CoeffElement) or c.group != A:
                raise InvalidClassError(f"carry value {c!r} is not an element of {A}")
    return Extension(G, A, carries=carries)
