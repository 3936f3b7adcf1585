"""Rank-one theories built from degree-2 cocycles.

A theory assigns to every family of mapped circles a torsor over the
coefficient group; elements are canonicalized as a single phase relative to
the standard fundamental cycle of the circles, so torsor equality is exact
element equality.  A cobordism acts by adding the cocycle paired with the
pushforward of its relative fundamental cycle; closed surfaces give the
holonomy.  Theories form a group under pointwise addition of cocycles.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import CoeffElement, CoeffGroup, FgAbGroup, GroupHom, hom_values
from .complexes import (Chain, SimplicialComplex, boundary, boundary_matrix,
                        chain_from_oriented, push_forward)
from .errors import (DomainMismatchError, InvariantError, NotACocycleError)
from .homology import (Cochain, chain_to_vector, coboundary, homology,
                       is_cocycle, offending_cocycle_simplex, vector_to_chain)
from .linalg import IntegerSolver
from .surfaces import (ClosedSurface, CobordismSurface, XSurface, circle_chain,
                       identity_cylinder, surface_from_cycle, validate_loop_in)


@dataclass(frozen=True)
class ObjectCircle:
    """An ordered family of mapped circles: the image loops in the base."""

    complex: SimplicialComplex
    loops: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for loop in self.loops:
            validate_loop_in(self.complex, loop)

    def canonical_image_cycle(self) -> Chain:
        """Pushforward of the standard fundamental 1-cycle of the circles."""
        acc = Chain(1, {})
        for loop in self.loops:
            k = len(loop)
            acc = acc + chain_from_oriented(
                [((loop[i], loop[(i + 1) % k]), 1)
                 for i in range(k) if loop[i] != loop[(i + 1) % k]], 1)
        return acc

    def tensor(self, other: "ObjectCircle") -> "ObjectCircle":
        if other.complex != self.complex:
            raise DomainMismatchError("objects live over different base complexes")
        return ObjectCircle(self.complex, self.loops + other.loops)

    def is_empty(self) -> bool:
        return not self.loops


@dataclass(frozen=True)
class FiberElement:
    """A torsor element: a phase relative to the canonical circle cycles."""

    object: ObjectCircle
    phase: CoeffElement


@dataclass(frozen=True)
class HolonomyCharacter:
    """The values of a theory on the degree-2 homology generators."""

    group: FgAbGroup
    values: tuple[CoeffElement, ...]

    def __post_init__(self):
        for d, v in zip(self.group.orders, self.values):
            if d and not (d * v).is_zero():
                raise InvariantError(
                    f"character value {v} on an order-{d} generator is not {d}-torsion")

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values)

    def __add__(self, other: "HolonomyCharacter") -> "HolonomyCharacter":
        if other.group != self.group:
            raise DomainMismatchError("characters on different homology groups")
        return HolonomyCharacter(self.group,
                                 tuple(a + b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "HolonomyCharacter":
        return HolonomyCharacter(self.group, tuple(-v for v in self.values))

    def as_hom(self, A: CoeffGroup) -> GroupHom:
        return hom_values(self.group, A, list(self.values))


class Hqft:
    """A theory given by a base complex, a coefficient group and a 2-cocycle."""

    def __init__(self, base: SimplicialComplex, coeff: CoeffGroup, cocycle: Cochain):
        if cocycle.complex != base:
            raise DomainMismatchError("cocycle lives on a different complex")
        if cocycle.degree != 2 or cocycle.group != coeff:
            raise DomainMismatchError("theory needs a degree-2 cochain over its group")
        if not is_cocycle(cocycle):
            raise NotACocycleError(
                f"not a cocycle: coboundary non-zero on {offending_cocycle_simplex(cocycle)}")
        self.base = base
        self.coeff = coeff
        self.cocycle = cocycle

    def zero_phase(self) -> CoeffElement:
        return self.coeff.zero()

    def unit_fiber(self) -> FiberElement:
        """The canonical element over the empty object."""
        return FiberElement(ObjectCircle(self.base, ()), self.coeff.zero())

    def __repr__(self):
        return f"Hqft(base={self.base!r}, coeff={self.coeff})"


def tau(X: SimplicialComplex, A: CoeffGroup, theta: Cochain) -> Hqft:
    """The theory attached to a 2-cocycle."""
    return Hqft(X, A, theta)


def trivial(X: SimplicialComplex, A: CoeffGroup) -> Hqft:
    return Hqft(X, A, Cochain(X, 2, A, {}))


def tensor(H1: Hqft, H2: Hqft) -> Hqft:
    if H1.base != H2.base or H1.coeff != H2.coeff:
        raise DomainMismatchError("theories over different bases cannot be tensored")
    return Hqft(H1.base, H1.coeff, H1.cocycle + H2.cocycle)


def inverse(H: Hqft) -> Hqft:
    return Hqft(H.base, H.coeff, -H.cocycle)


def input_object(H: Hqft, g: XSurface) -> ObjectCircle:
    return ObjectCircle(H.base, g.input_loops())


def output_object(H: Hqft, g: XSurface) -> ObjectCircle:
    return ObjectCircle(H.base, g.output_loops())


def holonomy(H: Hqft, g: XSurface) -> CoeffElement:
    """The value of the theory on a closed surface: the cocycle paired with
    the pushforward of the fundamental cycle."""
    if g.codomain != H.base:
        raise DomainMismatchError("surface maps into a different base complex")
    if not g.is_closed():
        raise InvariantError("holonomy needs a closed surface")
    return H.cocycle.evaluate(g.pushed_cycle())


def evaluate(H: Hqft, g: XSurface, e: FiberElement,
             selfcheck: bool = False) -> FiberElement:
    """Act with a cobordism on a fiber element.

    The output phase is the input phase plus the cocycle paired with the
    pushforward of the relative fundamental cycle, expressed over the output
    object.
    """
    if g.codomain != H.base:
        raise DomainMismatchError("surface maps into a different base complex")
    if isinstance(g.surface, ClosedSurface):
        raise InvariantError("evaluate needs a cobordism surface; use holonomy for closed ones")
    if e.object != input_object(H, g):
        raise DomainMismatchError("fiber element lives over a different object")
    if e.phase.group != H.coeff:
        raise DomainMismatchError("phase lives in the wrong coefficient group")
    if selfcheck:
        _relative_cycle_selfcheck(g)
    shift = H.cocycle.evaluate(g.pushed_cycle())
    return FiberElement(output_object(H, g), e.phase + shift)


def fiber_tensor(e1: FiberElement, e2: FiberElement) -> FiberElement:
    """Monoidal product of torsor elements: loops concatenate, phases add."""
    return FiberElement(e1.object.tensor(e2.object), e1.phase + e2.phase)


def _relative_cycle_selfcheck(g: XSurface):
    """Cross-check the stored relative cycle against an independently solved
    one.

    Any two relative fundamental cycles with the same boundary differ only on
    closed components, so the solver's solution must agree with the stored
    cycle on every component that touches the boundary.
    """
    surf = g.surface
    X = surf.complex
    if X.n_simplices(2) == 0:
        return
    solver = IntegerSolver(boundary_matrix(X, 2))
    sol = solver.solve(chain_to_vector(X, boundary(surf.cycle)))
    if sol is None:
        raise InvariantError("relative cycle boundary is not solvable; surface corrupt")
    other = vector_to_chain(X, 2, sol)
    diff = surf.cycle - other
    if not diff.is_zero():
        boundary_verts = {v for c in surf.input_circles + surf.output_circles for v in c}
        reach = _vertices_reachable_from(X, boundary_verts)
        for s in diff.coeffs:
            if set(s.verts) & reach:
                raise InvariantError(
                    "independent relative cycle disagrees on a boundary component")


def _vertices_reachable_from(X: SimplicialComplex, seeds: set[int]) -> set[int]:
    adj: dict[int, list[int]] = {}
    for e in X.simplices(1):
        a, b = e.verts
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    seen = set(seeds)
    stack = list(seeds)
    while stack:
        for w in adj.get(stack.pop(), ()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def fiber_from_representative(H: Hqft, obj: ObjectCircle, rep: Chain,
                              phase: CoeffElement) -> FiberElement:
    """Normalize a fiber element given relative to a non-standard
    representative cycle.

    The representative lives in the cylinder over the object; a bounding
    2-chain e with boundary(e) = rep - canonical is found exactly, and the
    phase is corrected by the cocycle paired with its pushforward.
    """
    cyl = identity_cylinder(H.base, [list(l) for l in obj.loops])
    X = cyl.surface.complex
    assert isinstance(cyl.surface, CobordismSurface)
    canonical = Chain(1, {})
    for c in cyl.surface.input_circles:
        canonical = canonical + circle_chain(c)
    if not X.contains_chain(rep):
        raise DomainMismatchError("representative does not live in the object cylinder")
    solver = IntegerSolver(boundary_matrix(X, 2))
    sol = solver.solve(chain_to_vector(X, rep - canonical))
    if sol is None:
        raise InvariantError("representative is not homologous to the canonical cycle")
    filling = vector_to_chain(X, 2, sol)
    correction = H.cocycle.evaluate(push_forward(cyl.map, filling))
    return FiberElement(obj, phase + correction)


def holonomy_character(H: Hqft) -> HolonomyCharacter:
    """Evaluate the theory on closed surfaces resolving the degree-2 homology
    generators."""
    h2 = homology(H.base, 2)
    values = []
    for z in h2.generator_cycles:
        g = surface_from_cycle(H.base, z)
        values.append(holonomy(H, g))
    return HolonomyCharacter(h2.group, tuple(values))


@dataclass(frozen=True)
class CoboundaryIso:
    """The isomorphism between the theories of two cohomologous cocycles.

    For a 1-cochain f it sends a phase over an object to the phase shifted
    by f of the canonical image cycle, landing in the theory of
    (cocycle - coboundary(f)).  The sign of the shift is forced by
    naturality once the boundary convention (inputs minus outputs) and the
    evaluation direction are fixed; flipping f recovers the opposite
    convention.
    """

    source: Hqft
    target: Hqft
    shift: Cochain

    def apply(self, e: FiberElement) -> FiberElement:
        if e.phase.group != self.source.coeff:
            raise DomainMismatchError("phase in the wrong group")
        corr = self.shift.evaluate(e.object.canonical_image_cycle())
        return FiberElement(e.object, e.phase + corr)

    def inverse_apply(self, e: FiberElement) -> FiberElement:
        corr = self.shift.evaluate(e.object.canonical_image_cycle())
        return FiberElement(e.object, e.phase - corr)

    def verify_naturality(self, cobordisms: list[XSurface]) -> bool:
        """Check commutation with evaluation on the given test cobordisms."""
        for g in cobordisms:
            e = FiberElement(input_object(self.source, g), self.source.coeff.zero())
            lhs = self.apply(evaluate(self.source, g, e))
            rhs = evaluate(self.target, g, self.apply(e))
            if lhs != rhs:
                return False
        return True

    def verify_monoidality(self, objects: list[ObjectCircle]) -> bool:
        for o1 in objects:
            for o2 in objects:
                e1 = FiberElement(o1, self.source.coeff.zero())
                e2 = FiberElement(o2, self.source.coeff.zero())
                lhs = self.apply(fiber_tensor(e1, e2))
                rhs = fiber_tensor(self.apply(e1), self.apply(e2))
                if lhs != rhs:
                    return False
        return True


def coboundary_iso(H: Hqft, f: Cochain) -> CoboundaryIso:
    """The isomorphism from the theory of theta to the theory of
    theta - coboundary(f)."""
    if f.complex != H.base or f.degree != 1 or f.group != H.coeff:
        raise DomainMismatchError("need a 1-cochain on the base in the theory's group")
    target = Hqft(H.base, H.coeff, H.cocycle - coboundary(f))
    return CoboundaryIso(H, target, f)
