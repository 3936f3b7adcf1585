"""Deterministic randomized generators for surfaces, cobordisms and cochains.

Everything takes an explicit ``random.Random`` so suites are reproducible;
the CLI seeds it from the HQFT_SEED environment variable.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .abelian import CoeffElement, CoeffGroup, Cyclic, DirectSum, FreeInt, RationalCircle
from .complexes import Simplex, SimplicialComplex
from .errors import InputError
from .homology import Cochain, homology
from . import surfaces as sf


def candidate_loops(X: SimplicialComplex) -> list[tuple[int, ...]]:
    """Short loops in X: constant loops, and both orientations of every
    3-clique in the edge graph (faces and empty triangles alike)."""
    loops = [(v, v, v) for v in range(X.vertex_count)
             if X.has(Simplex((v,)))]
    verts = sorted({s.verts[0] for s in X.simplices(0)})
    for a, b, c in itertools.combinations(verts, 3):
        if all(X.has(Simplex(e)) for e in ((a, b), (a, c), (b, c))):
            loops.append((a, b, c))
            loops.append((a, c, b))
    return loops


def loops_by_class(X: SimplicialComplex) -> dict[tuple[int, ...], list[tuple[int, ...]]]:
    """Candidate loops grouped by their degree-1 homology class."""
    h1 = homology(X, 1)
    out: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for loop in candidate_loops(X):
        cls = h1.class_of(sf.circle_chain(loop))
        out.setdefault(cls, []).append(loop)
    return out


def random_element(A: CoeffGroup, rng: random.Random) -> CoeffElement:
    if isinstance(A, Cyclic):
        return A.element(rng.randrange(A.modulus))
    if isinstance(A, FreeInt):
        return A.element(rng.randrange(-4, 5))
    if isinstance(A, RationalCircle):
        den = rng.choice([2, 3, 4, 5, 6])
        return A.element(Fraction(rng.randrange(den), den))
    if isinstance(A, DirectSum):
        return A.element(tuple(random_element(p, rng).value for p in A.parts))
    raise InputError(f"cannot sample from {A}")


def random_cochain(X: SimplicialComplex, A: CoeffGroup, rng: random.Random,
                   degree: int = 2, density: float = 0.7) -> Cochain:
    values = {}
    for s in X.simplices(degree):
        if rng.random() < density:
            values[s] = random_element(A, rng)
    return Cochain(X, degree, A, values)


def random_closed_surface(X: SimplicialComplex, rng: random.Random,
                          surgeries: int = 0) -> sf.XSurface:
    """A random closed mapped surface: resolved multiples of degree-2
    generators, disjoint constant spheres, and optional random surgeries."""
    h2 = homology(X, 2)
    pieces = []
    for z in h2.generator_cycles:
        c = rng.choice([-2, -1, 0, 1, 2])
        if c:
            pieces.append(sf.surface_from_cycle(X, z.scale(c)))
    n_spheres = rng.choice([0, 1, 2]) if pieces else rng.choice([1, 2])
    for _ in range(n_spheres):
        v = rng.randrange(X.vertex_count)
        pieces.append(sf.constant_sphere(X, v))
    g = pieces[0]
    for p in pieces[1:]:
        g = sf.disjoint_union(g, p)
    for _ in range(surgeries):
        g = random_surgery(g, rng)
    return g


def random_surgery(g: sf.XSurface, rng: random.Random) -> sf.XSurface:
    """One random valid surgery; disjoint-unions a constant sphere first if
    no site is available."""
    disks = sf.point_mapped_disk_pairs(g)
    annuli = sf.point_mapped_annuli(g)
    options = [("disks", s) for s in disks] + [("annulus", s) for s in annuli]
    if not options:
        v = rng.randrange(g.codomain.vertex_count)
        g = sf.disjoint_union(g, sf.constant_sphere(g.codomain, v))
        options = [("disks", s) for s in sf.point_mapped_disk_pairs(g)]
    _, site = options[rng.randrange(len(options))]
    return sf.local_surgery(g, site)


def random_object_loops(X: SimplicialComplex, rng: random.Random,
                        max_loops: int = 2) -> list[tuple[int, ...]]:
    pool = candidate_loops(X)
    n = rng.randrange(1, max_loops + 1)
    return [pool[rng.randrange(len(pool))] for _ in range(n)]


def _closed_as_cobordism(g: sf.XSurface) -> sf.XSurface:
    if isinstance(g.surface, sf.ClosedSurface):
        return sf.XSurface(sf.as_cobordism(g.surface), g.map)
    return g


def find_puncture_cobordism(closed: sf.XSurface, rng: random.Random) -> sf.XSurface | None:
    """Puncture a closed surface at two vertex-disjoint triangles, one input
    and one output."""
    tris = sorted(closed.surface.cycle.coeffs)
    rng.shuffle(tris)
    for a, b in itertools.combinations(tris, 2):
        if not (set(a.verts) & set(b.verts)):
            return sf.puncture(closed, [a, b], 1)
    return None


def random_cobordism(X: SimplicialComplex, rng: random.Random) -> sf.XSurface:
    """A cobordism with at least one boundary circle."""
    kind = rng.random()
    if kind < 0.45:
        g = sf.identity_cylinder(X, random_object_loops(X, rng))
    else:
        closed = random_closed_surface(X, rng)
        punctured = find_puncture_cobordism(closed, rng)
        if punctured is None:
            g = sf.identity_cylinder(X, random_object_loops(X, rng))
        else:
            g = punctured
    if rng.random() < 0.3:
        g = sf.disjoint_union(g, _closed_as_cobordism(random_closed_surface(X, rng)))
    return g


def composable_pair(X: SimplicialComplex, rng: random.Random
                    ) -> tuple[sf.XSurface, sf.XSurface]:
    """Two cobordisms with outputs of the first matching inputs of the
    second."""
    g1 = random_cobordism(X, rng)
    out_loops = [list(l) for l in g1.output_loops()]
    if not out_loops:
        g1 = sf.identity_cylinder(X, random_object_loops(X, rng))
        out_loops = [list(l) for l in g1.output_loops()]
    g2 = sf.identity_cylinder(X, out_loops)
    if rng.random() < 0.4:
        g2 = sf.disjoint_union(
            g2, _closed_as_cobordism(random_closed_surface(X, rng)))
        # the extra closed piece adds no boundary, composability is intact
    if rng.random() < 0.5:
        # extend g1 by a cylinder on the input side instead
        pre = sf.identity_cylinder(X, [list(l) for l in g1.input_loops()])
        g1 = sf.glue(pre, g1)
    return g1, g2


def random_endomorphism(X: SimplicialComplex, rng: random.Random) -> sf.XSurface:
    """A cobordism whose inputs and outputs are the same object."""
    g = sf.identity_cylinder(X, random_object_loops(X, rng))
    if rng.random() < 0.5:
        g = sf.disjoint_union(g, _closed_as_cobordism(random_closed_surface(X, rng)))
    return g
