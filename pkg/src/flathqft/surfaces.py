"""Triangulated closed and collared surfaces mapped into a base complex.

Boundary circles are combinatorial circles: cyclic vertex sequences with an
explicit basepoint and direction.  All gluing happens through degenerate
"collar" bands whose triangles carry at least one fresh vertex, so the result
of any operation is guaranteed to stay an honest simplicial complex; the
collars map through the circle, push forward to zero, and therefore never
contribute to any holonomy.

Sign conventions: the chain of a directed circle (v0, v1, ..., v_{k-1}) is the
sum of the directed edges v_i -> v_{i+1}; a cobordism's relative cycle f
satisfies boundary(f) = (sum of input circles) - (sum of output circles).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .complexes import (Chain, Simplex, SimplicialComplex, SimplicialMap,
                        boundary, build_complex, chain_from_oriented,
                        push_forward)
from .errors import (GluingError, InputError, InvalidSiteError,
                     InvariantError)

Circle = tuple[int, ...]


def circle_chain(circle: Sequence[int]) -> Chain:
    """The 1-chain of a directed combinatorial circle."""
    k = len(circle)
    return chain_from_oriented(
        [((circle[i], circle[(i + 1) % k]), 1) for i in range(k)], 1)


def reverse_circle(circle: Sequence[int]) -> Circle:
    """Opposite direction, same basepoint."""
    return (circle[0],) + tuple(reversed(circle[1:]))


def _check_circle(circle: Sequence[int]):
    if len(circle) < 3:
        raise InvariantError(f"combinatorial circle needs >= 3 vertices, got {circle}")
    if len(set(circle)) != len(circle):
        raise InvariantError(f"circle has repeated vertices: {circle}")


# ---------------------------------------------------------------------------
# surface types


@dataclass(frozen=True)
class ClosedSurface:
    """A closed oriented triangulated surface with its fundamental cycle."""

    complex: SimplicialComplex
    fundamental_cycle: Chain

    def verify(self):
        _verify_surface(self.complex, self.fundamental_cycle, (), ())

    @property
    def cycle(self) -> Chain:
        return self.fundamental_cycle


@dataclass(frozen=True)
class CobordismSurface:
    """A collared surface with ordered input and output boundary circles."""

    complex: SimplicialComplex
    input_circles: tuple[Circle, ...]
    output_circles: tuple[Circle, ...]
    relative_cycle: Chain

    def verify(self):
        _verify_surface(self.complex, self.relative_cycle,
                        self.input_circles, self.output_circles)

    @property
    def cycle(self) -> Chain:
        return self.relative_cycle

    def is_closed(self) -> bool:
        return not self.input_circles and not self.output_circles


def as_cobordism(s: ClosedSurface) -> CobordismSurface:
    return CobordismSurface(s.complex, (), (), s.fundamental_cycle)


def as_closed(s: CobordismSurface) -> ClosedSurface:
    if s.input_circles or s.output_circles:
        raise InvariantError("surface has boundary circles")
    return ClosedSurface(s.complex, s.relative_cycle)


@dataclass(frozen=True)
class XSurface:
    """A surface together with a simplicial map into the base complex."""

    surface: ClosedSurface | CobordismSurface
    map: SimplicialMap

    def verify(self):
        if self.map.domain != self.surface.complex:
            raise InvariantError("map domain differs from the surface complex")
        self.surface.verify()

    @property
    def codomain(self) -> SimplicialComplex:
        return self.map.codomain

    def is_closed(self) -> bool:
        return isinstance(self.surface, ClosedSurface) or self.surface.is_closed()

    def pushed_cycle(self) -> Chain:
        return push_forward(self.map, self.surface.cycle)

    def image_loop(self, circle: Circle) -> tuple[int, ...]:
        return tuple(self.map.vertex_map[v] for v in circle)

    def input_loops(self) -> tuple[tuple[int, ...], ...]:
        if isinstance(self.surface, ClosedSurface):
            return ()
        return tuple(self.image_loop(c) for c in self.surface.input_circles)

    def output_loops(self) -> tuple[tuple[int, ...], ...]:
        if isinstance(self.surface, ClosedSurface):
            return ()
        return tuple(self.image_loop(c) for c in self.surface.output_circles)

    def euler_characteristic(self) -> int:
        return self.surface.complex.euler_characteristic()


@dataclass(frozen=True)
class SurgerySite:
    """A point-mapped subsurface: two disjoint disks or one annulus."""

    triangles: frozenset[Simplex]


def signature(g: XSurface) -> tuple:
    """Invariants used to compare surfaces up to isomorphism over X:
    Euler characteristic, boundary data, and the pushforward cycle."""
    pushed = tuple(sorted((s.verts, c) for s, c in g.pushed_cycle().coeffs.items()))
    return (g.euler_characteristic(), g.input_loops(), g.output_loops(), pushed)


# ---------------------------------------------------------------------------
# verification


def _verify_surface(X: SimplicialComplex, cycle: Chain,
                    inputs: tuple[Circle, ...], outputs: tuple[Circle, ...]):
    if X.dim > 2:
        raise InvariantError("surface complex has simplices of dimension > 2")
    triangles = set(X.simplices(2))
    if cycle.dim != 2:
        raise InvariantError("surface cycle must have degree 2")
    if set(cycle.coeffs) != triangles or any(abs(c) != 1 for c in cycle.coeffs.values()):
        raise InvariantError("cycle must cover every triangle exactly once with signs +-1")

    for circle in inputs + outputs:
        _check_circle(circle)
    all_circle_verts = [v for c in inputs + outputs for v in c]
    if len(set(all_circle_verts)) != len(all_circle_verts):
        raise InvariantError("boundary circles are not pairwise disjoint")

    boundary_edges = set()
    for circle in inputs + outputs:
        k = len(circle)
        for i in range(k):
            e = Simplex(tuple(sorted((circle[i], circle[(i + 1) % k]))))
            if not X.has(e):
                raise InvariantError(f"circle edge {e} not in the complex")
            boundary_edges.add(e)

    # edge incidence counts
    edge_tris: dict[Simplex, list[Simplex]] = {}
    for t in triangles:
        for e in t.faces():
            edge_tris.setdefault(e, []).append(t)
    for e in X.simplices(1):
        n = len(edge_tris.get(e, ()))
        if e in boundary_edges:
            if n != 1:
                raise InvariantError(f"boundary edge {e} lies in {n} triangles, expected 1")
        else:
            if n != 2:
                raise InvariantError(f"interior edge {e} lies in {n} triangles, expected 2")

    # no stray vertices: every vertex must be a face of a triangle
    used = {v for t in triangles for v in t.verts}
    for s in X.simplices(0):
        if s.verts[0] not in used:
            raise InvariantError(f"vertex {s.verts[0]} lies in no triangle")

    # boundary identity
    want = Chain(1, {})
    for c in inputs:
        want = want + circle_chain(c)
    for c in outputs:
        want = want - circle_chain(c)
    if boundary(cycle) != want:
        raise InvariantError("boundary of the cycle does not match the circle data")

    # vertex links: one circle at interior vertices, one arc at boundary vertices
    circle_verts = set(all_circle_verts)
    link: dict[int, list[tuple[int, int]]] = {}
    for t in triangles:
        a, b, c = t.verts
        link.setdefault(a, []).append((b, c))
        link.setdefault(b, []).append((a, c))
        link.setdefault(c, []).append((a, b))
    for v, opposite in link.items():
        deg: dict[int, int] = {}
        for a, b in opposite:
            deg[a] = deg.get(a, 0) + 1
            deg[b] = deg.get(b, 0) + 1
        # connectivity of the link graph
        adj: dict[int, list[int]] = {}
        for a, b in opposite:
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
        start = next(iter(adj))
        seen = {start}
        stack = [start]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(adj):
            raise InvariantError(f"link of vertex {v} is not connected")
        ones = sum(1 for d in deg.values() if d == 1)
        twos = sum(1 for d in deg.values() if d == 2)
        if v in circle_verts:
            if ones != 2 or ones + twos != len(deg):
                raise InvariantError(f"link of boundary vertex {v} is not a single arc")
        else:
            if ones != 0 or twos != len(deg):
                raise InvariantError(f"link of interior vertex {v} is not a single circle")


def component_count(X: SimplicialComplex) -> int:
    parent = list(range(X.vertex_count))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in X.simplices(1):
        a, b = find(e.verts[0]), find(e.verts[1])
        if a != b:
            parent[a] = b
    return len({find(s.verts[0]) for s in X.simplices(0)})


# ---------------------------------------------------------------------------
# triangulated band and cone builders


def _band(a_seq: Sequence[int], b_seq: Sequence[int],
          alternate: bool) -> list[tuple[tuple[int, int, int], int]]:
    """Oriented triangles of an annulus between two directed circles.

    The chain boundary of the result is (circle a) + (circle b).  With
    ``alternate`` the two circles must have equal length and triangles only
    connect equal-index vertices (used for collars, keeps images degenerate);
    otherwise a staircase pattern valid for any lengths >= 3 is used.
    """
    m, n = len(a_seq), len(b_seq)
    if alternate and m != n:
        raise InputError("alternating band needs circles of equal length")
    if alternate:
        steps = "AB" * m
    else:
        steps = "ABA" + "B" * (n - 1) + "A" * (m - 2)
    terms = []
    p, q = 0, n
    for step in steps:
        if step == "A":
            terms.append(((a_seq[p % m], a_seq[(p + 1) % m], b_seq[q % n]), 1))
            p += 1
        else:
            terms.append(((a_seq[p % m], b_seq[(q - 1) % n], b_seq[q % n]), 1))
            q -= 1
    assert p == m and q == 0
    return terms


def _cone(apex: int, circle_seq: Sequence[int]) -> list[tuple[tuple[int, int, int], int]]:
    """Oriented triangles of a disk; chain boundary = the directed circle."""
    k = len(circle_seq)
    return [((apex, circle_seq[i], circle_seq[(i + 1) % k]), 1) for i in range(k)]


# ---------------------------------------------------------------------------
# assembling surfaces from abstract oriented triangles


def _assemble(X: SimplicialComplex, terms: list[tuple[tuple[int, int, int], int]],
              images: dict[int, int],
              inputs: Sequence[Sequence[int]] = (),
              outputs: Sequence[Sequence[int]] = ()) -> XSurface:
    """Renumber abstract vertex ids compactly and build a verified XSurface."""
    used = sorted({v for tri, _ in terms for v in tri}
                  | {v for c in inputs for v in c}
                  | {v for c in outputs for v in c})
    renum = {v: i for i, v in enumerate(used)}
    tri_terms = [(tuple(renum[v] for v in tri), c) for tri, c in terms]
    complex_ = build_complex([t for t, _ in tri_terms], vertex_count=len(used))
    cycle = chain_from_oriented(tri_terms, 2)
    vm = [images[v] for v in used]
    smap = SimplicialMap(complex_, X, vm)
    ins = tuple(tuple(renum[v] for v in c) for c in inputs)
    outs = tuple(tuple(renum[v] for v in c) for c in outputs)
    if ins or outs:
        surf: ClosedSurface | CobordismSurface = CobordismSurface(complex_, ins, outs, cycle)
    else:
        surf = ClosedSurface(complex_, cycle)
    xs = XSurface(surf, smap)
    xs.verify()
    return xs


def _export_terms(g: XSurface, offset: int) -> tuple[list, dict[int, int], list, list]:
    """Existing surface data re-expressed as abstract terms with an id offset."""
    terms = []
    for s, c in g.surface.cycle.coeffs.items():
        terms.append((tuple(v + offset for v in s.verts), c))
    images = {v + offset: g.map.vertex_map[v]
              for v in range(g.surface.complex.vertex_count)}
    if isinstance(g.surface, ClosedSurface):
        ins: list = []
        outs: list = []
    else:
        ins = [tuple(v + offset for v in c) for c in g.surface.input_circles]
        outs = [tuple(v + offset for v in c) for c in g.surface.output_circles]
    return terms, images, ins, outs


# ---------------------------------------------------------------------------
# elementary builders


def validate_loop_in(X: SimplicialComplex, loop: Sequence[int]) -> tuple[int, ...]:
    """Check that a vertex loop is simplicial in X (consecutive images span
    a vertex or an edge of X) and return it as a tuple."""
    loop = tuple(loop)
    if len(loop) < 3:
        raise InputError(f"image loop needs >= 3 entries, got {loop}")
    for i, a in enumerate(loop):
        b = loop[(i + 1) % len(loop)]
        target = Simplex(tuple(sorted({a, b})))
        if not X.has(target):
            raise InputError(f"loop step ({a},{b}) does not span a simplex of X")
    return loop


def identity_cylinder(X: SimplicialComplex, loops: Sequence[Sequence[int]]) -> XSurface:
    """The identity cobordism over the given image loops: one prism per loop,
    mapped through the circle projection."""
    terms: list = []
    images: dict[int, int] = {}
    ins, outs = [], []
    base = 0
    for loop in loops:
        loop = validate_loop_in(X, loop)
        k = len(loop)
        bottom = tuple(range(base, base + k))
        top = tuple(range(base + k, base + 2 * k))
        base += 2 * k
        for i in range(k):
            images[bottom[i]] = loop[i]
            images[top[i]] = loop[i]
        terms += _band(bottom, reverse_circle(top), alternate=True)
        ins.append(bottom)
        outs.append(top)
    if not loops:
        surf = CobordismSurface(SimplicialComplex(0, []), (), (), Chain(2, {}))
        return XSurface(surf, SimplicialMap(surf.complex, X, ()))
    return _assemble(X, terms, images, ins, outs)


def empty_surface(X: SimplicialComplex) -> XSurface:
    surf = ClosedSurface(SimplicialComplex(0, []), Chain(2, {}))
    return XSurface(surf, SimplicialMap(surf.complex, X, ()))


def constant_sphere(X: SimplicialComplex, vertex: int) -> XSurface:
    """A bipyramid sphere mapped to a single vertex of X."""
    if vertex < 0 or vertex >= X.vertex_count:
        raise InputError(f"vertex {vertex} not in the base complex")
    ring = (0, 1, 2, 3)
    top, bottom = 4, 5
    terms = _cone(top, ring) + [(tri, -c) for tri, c in _cone(bottom, ring)]
    images = {v: vertex for v in range(6)}
    return _assemble(X, terms, images)


def disjoint_union(g1: XSurface, g2: XSurface) -> XSurface:
    if g1.codomain != g2.codomain:
        raise GluingError("surfaces map into different base complexes")
    t1, im1, in1, out1 = _export_terms(g1, 0)
    off = g1.surface.complex.vertex_count
    t2, im2, in2, out2 = _export_terms(g2, off)
    both_closed = g1.is_closed() and g2.is_closed() and \
        isinstance(g1.surface, ClosedSurface) and isinstance(g2.surface, ClosedSurface)
    if both_closed:
        return _assemble(g1.codomain, t1 + t2, {**im1, **im2})
    return _assemble(g1.codomain, t1 + t2, {**im1, **im2},
                     in1 + in2, out1 + out2)


def reverse(g: XSurface) -> XSurface:
    """Orientation reversal: the cycle is negated and inputs and outputs swap."""
    if isinstance(g.surface, ClosedSurface):
        surf: ClosedSurface | CobordismSurface = ClosedSurface(
            g.surface.complex, -g.surface.fundamental_cycle)
    else:
        surf = CobordismSurface(g.surface.complex,
                                g.surface.output_circles,
                                g.surface.input_circles,
                                -g.surface.relative_cycle)
    out = XSurface(surf, g.map)
    out.verify()
    return out


def _collar_terms(out_circle: Sequence[int], in_circle: Sequence[int],
                  images_out: Sequence[int], fresh_start: int
                  ) -> tuple[list, dict[int, int], int]:
    """Two prism layers out_circle -> fresh middle -> in_circle.

    Chain boundary is (out circle) - (in circle); every triangle carries a
    fresh middle vertex and maps through the circle, so nothing can collide
    and the pushforward is zero.
    """
    k = len(out_circle)
    mid = tuple(range(fresh_start, fresh_start + k))
    terms = _band(tuple(out_circle), reverse_circle(mid), alternate=True)
    terms += _band(mid, reverse_circle(tuple(in_circle)), alternate=True)
    images = {mid[i]: images_out[i] for i in range(k)}
    return terms, images, fresh_start + k


def glue(g1: XSurface, g2: XSurface) -> XSurface:
    """Glue the outputs of g1 to the inputs of g2 through degenerate collars."""
    if g1.codomain != g2.codomain:
        raise GluingError("surfaces map into different base complexes")
    if isinstance(g1.surface, ClosedSurface) or isinstance(g2.surface, ClosedSurface):
        raise GluingError("gluing needs cobordism surfaces")
    outs, ins = g1.surface.output_circles, g2.surface.input_circles
    if len(outs) != len(ins):
        raise GluingError(f"{len(outs)} outputs cannot be glued to {len(ins)} inputs")
    for c_out, c_in in zip(outs, ins):
        if len(c_out) != len(c_in):
            raise GluingError("circle lengths differ")
        if g1.image_loop(c_out) != g2.image_loop(c_in):
            raise GluingError(
                f"image loops differ: {g1.image_loop(c_out)} vs {g2.image_loop(c_in)}")
    t1, im1, in1, _ = _export_terms(g1, 0)
    off2 = g1.surface.complex.vertex_count
    t2, im2, _, out2 = _export_terms(g2, off2)
    fresh = off2 + g2.surface.complex.vertex_count
    terms = t1 + t2
    images = {**im1, **im2}
    for c_out, c_in in zip(outs, ins):
        shifted_in = tuple(v + off2 for v in c_in)
        extra, extra_images, fresh = _collar_terms(
            c_out, shifted_in, g1.image_loop(c_out), fresh)
        terms += extra
        images.update(extra_images)
    return _assemble(g1.codomain, terms, images, in1, out2)


def close_up(g: XSurface) -> XSurface:
    """Glue the outputs of an endomorphism to its own inputs."""
    if isinstance(g.surface, ClosedSurface):
        raise GluingError("surface is already closed")
    outs, ins = g.surface.output_circles, g.surface.input_circles
    if len(outs) != len(ins):
        raise GluingError("inputs and outputs do not match up")
    for c_out, c_in in zip(outs, ins):
        if len(c_out) != len(c_in) or g.image_loop(c_out) != g.image_loop(c_in):
            raise GluingError("input/output image loops differ; not an endomorphism")
    terms, images, _, _ = _export_terms(g, 0)
    fresh = g.surface.complex.vertex_count
    for c_out, c_in in zip(outs, ins):
        extra, extra_images, fresh = _collar_terms(c_out, c_in, g.image_loop(c_out), fresh)
        terms += extra
        images.update(extra_images)
    return _assemble(g.codomain, terms, images)


def permute_outputs(g: XSurface, perm: Sequence[int]) -> XSurface:
    """Reorder the output circles; with identity cylinders this builds the
    swap (symmetry) cobordisms."""
    if isinstance(g.surface, ClosedSurface):
        raise InputError("closed surfaces have no outputs to permute")
    outs = g.surface.output_circles
    if sorted(perm) != list(range(len(outs))):
        raise InputError(f"not a permutation of {len(outs)} outputs: {perm}")
    surf = CobordismSurface(g.surface.complex, g.surface.input_circles,
                            tuple(outs[i] for i in perm), g.surface.relative_cycle)
    out = XSurface(surf, g.map)
    out.verify()
    return out


def puncture(g: XSurface, triangles: Sequence[Simplex], n_inputs: int) -> XSurface:
    """Remove pairwise vertex-disjoint triangles from a closed surface,
    turning the first ``n_inputs`` holes into inputs and the rest into
    outputs."""
    if not g.is_closed() or not isinstance(g.surface, ClosedSurface):
        raise InputError("puncture expects a closed surface")
    tris = list(triangles)
    seen_verts: set[int] = set()
    for t in tris:
        if t not in g.surface.fundamental_cycle.coeffs:
            raise InputError(f"triangle {t} not in the surface")
        if seen_verts & set(t.verts):
            raise InputError("punctured triangles must be pairwise vertex-disjoint")
        seen_verts |= set(t.verts)
    if n_inputs < 0 or n_inputs > len(tris):
        raise InputError("bad number of inputs")
    cycle = g.surface.fundamental_cycle
    ins, outs = [], []
    for idx, t in enumerate(tris):
        v0, v1, v2 = t.verts
        induced = (v0, v1, v2) if cycle.coeffs[t] == 1 else (v0, v2, v1)
        if idx < n_inputs:
            ins.append(reverse_circle(induced))
        else:
            outs.append(induced)
    terms = [(s.verts, c) for s, c in cycle.coeffs.items() if s not in set(tris)]
    images = {v: g.map.vertex_map[v] for v in range(g.surface.complex.vertex_count)}
    return _assemble(g.codomain, terms, images, ins, outs)


# ---------------------------------------------------------------------------
# local surgery


def _site_analysis(g: XSurface, site: SurgerySite):
    """Validate a surgery site and return (kind, point, directed circles,
    kept terms)."""
    surf = g.surface
    cycle = surf.cycle
    site_tris = sorted(site.triangles)
    if not site_tris:
        raise InvalidSiteError("empty surgery site")
    for t in site_tris:
        if t not in cycle.coeffs:
            raise InvalidSiteError(f"site triangle {t} not in the surface")
    site_verts = sorted({v for t in site_tris for v in t.verts})
    points = {g.map.vertex_map[v] for v in site_verts}
    if len(points) != 1:
        raise InvalidSiteError(f"site maps to {len(points)} vertices, expected exactly 1")
    point = points.pop()
    if isinstance(surf, CobordismSurface):
        circle_verts = {v for c in surf.input_circles + surf.output_circles for v in c}
        if circle_verts & set(site_verts):
            raise InvalidSiteError("site touches the surface boundary")

    # connected components through shared vertices
    parent = {v: v for v in site_verts}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for t in site_tris:
        a, b, c = t.verts
        for x, y in ((a, b), (b, c)):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry
    comps = {}
    for t in site_tris:
        comps.setdefault(find(t.verts[0]), []).append(t)
    n_comp = len(comps)

    # boundary circles of the site, directed by the induced orientation
    site_set = set(site_tris)
    edge_count: dict[Simplex, int] = {}
    for t in site_tris:
        for e in t.faces():
            edge_count[e] = edge_count.get(e, 0) + 1
    if any(n > 2 for n in edge_count.values()):
        raise InvalidSiteError("site has an edge in more than two site triangles")
    restricted = Chain(2, {t: cycle.coeffs[t] for t in site_tris})
    rim = boundary(restricted)
    succ: dict[int, int] = {}
    for e, c in rim.coeffs.items():
        if abs(c) != 1:
            raise InvalidSiteError("site boundary is not a collection of simple circles")
        a, b = e.verts
        tail, head = (a, b) if c == 1 else (b, a)
        if tail in succ:
            raise InvalidSiteError("site boundary is not a collection of simple circles")
        succ[tail] = head
    circles = []
    remaining = set(succ)
    while remaining:
        start = min(remaining)
        walk = [start]
        remaining.discard(start)
        v = succ[start]
        while v != start:
            walk.append(v)
            remaining.discard(v)
            v = succ[v]
        _check_circle(walk)
        circles.append(tuple(walk))
    circles.sort()

    # interior edges of the site must not be shared with kept triangles
    for e, n in edge_count.items():
        if n == 2:
            for t in cycle.coeffs:
                if t not in site_set and e in t.faces():
                    raise InvalidSiteError(f"site interior edge {e} touches a kept triangle")

    site_chi = (len({v for t in site_tris for v in t.verts})
                - len(edge_count) + len(site_tris))
    if n_comp == 2 and site_chi == 2 and len(circles) == 2:
        kind = "disks"
    elif n_comp == 1 and site_chi == 0 and len(circles) == 2:
        kind = "annulus"
    else:
        raise InvalidSiteError(
            f"site is neither two disks nor an annulus "
            f"(components={n_comp}, chi={site_chi}, circles={len(circles)})")
    if set(circles[0]) & set(circles[1]):
        raise InvalidSiteError("site boundary circles share vertices")
    return kind, point, circles, site_set


def local_surgery(g: XSurface, site: SurgerySite) -> XSurface:
    """Replace two point-mapped disks by a point-mapped annulus with the same
    boundary circles, or the other way round.  The Euler characteristic moves
    by -2 (disks to annulus) or +2; the pushforward cycle is unchanged."""
    kind, point, circles, site_set = _site_analysis(g, site)
    surf = g.surface
    cycle = surf.cycle
    terms = [(s.verts, c) for s, c in cycle.coeffs.items() if s not in site_set]
    images = {v: g.map.vertex_map[v]
              for t, _ in terms for v in t} | \
             {v: g.map.vertex_map[v]
              for c in circles for v in c}
    fresh = surf.complex.vertex_count
    c1, c2 = circles
    if kind == "disks":
        mid = tuple(range(fresh, fresh + 3))
        fresh += 3
        new_terms = _band(c1, reverse_circle(mid), alternate=False)
        new_terms += _band(mid, c2, alternate=False)
        for v in mid:
            images[v] = point
    else:
        apex1, apex2 = fresh, fresh + 1
        fresh += 2
        new_terms = _cone(apex1, c1) + _cone(apex2, c2)
        images[apex1] = point
        images[apex2] = point
    terms += new_terms
    if isinstance(surf, CobordismSurface):
        return _assemble(g.codomain, terms, images,
                         surf.input_circles, surf.output_circles)
    return _assemble(g.codomain, terms, images)


def point_mapped_disk_pairs(g: XSurface) -> list[SurgerySite]:
    """All sites made of two vertex-disjoint point-mapped triangles."""
    by_point: dict[int, list[Simplex]] = {}
    for t in g.surface.cycle.coeffs:
        imgs = {g.map.vertex_map[v] for v in t.verts}
        if len(imgs) == 1:
            by_point.setdefault(imgs.pop(), []).append(t)
    sites = []
    for tris in by_point.values():
        tris.sort()
        for i in range(len(tris)):
            for j in range(i + 1, len(tris)):
                if not (set(tris[i].verts) & set(tris[j].verts)):
                    site = SurgerySite(frozenset((tris[i], tris[j])))
                    try:
                        _site_analysis(g, site)
                    except InvalidSiteError:
                        continue
                    sites.append(site)
    return sites


def point_mapped_annuli(g: XSurface) -> list[SurgerySite]:
    """Annulus sites: point-mapped annulus components, plus unions of vertex
    stars around point-mapped empty vertex rings (which is exactly what the
    disks-to-annulus surgery leaves behind)."""
    X = g.surface.complex
    point_tris: set[Simplex] = set()
    for t in g.surface.cycle.coeffs:
        if len({g.map.vertex_map[v] for v in t.verts}) == 1:
            point_tris.add(t)
    star: dict[int, set[Simplex]] = {}
    for t in g.surface.cycle.coeffs:
        for v in t.verts:
            star.setdefault(v, set()).add(t)

    candidates: list[frozenset[Simplex]] = []
    # components of the point-mapped region
    parent = {}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for t in sorted(point_tris):
        parent.setdefault(t, t)
    for t in sorted(point_tris):
        for e in t.faces():
            for t2 in star.get(e.verts[0], ()):
                if t2 in point_tris and e in t2.faces() and t2 != t:
                    ra, rb = find(t), find(t2)
                    if ra != rb:
                        parent[ra] = rb
    comps: dict[Simplex, list[Simplex]] = {}
    for t in sorted(point_tris):
        comps.setdefault(find(t), []).append(t)
    candidates.extend(frozenset(c) for c in comps.values())

    # empty vertex rings: 3-cycles in the edge graph not filled by a triangle,
    # restricted to vertices whose whole star is point-mapped
    verts = sorted(v for v, tris in star.items() if tris <= point_tris)
    for i, a in enumerate(verts):
        for b in (v for v in verts if v > a):
            if not X.has(Simplex((a, b))):
                continue
            for c in (v for v in verts if v > b):
                if not (X.has(Simplex((a, c))) and X.has(Simplex((b, c)))):
                    continue
                if X.has(Simplex((a, b, c))):
                    continue
                candidates.append(frozenset(star[a] | star[b] | star[c]))

    sites = []
    seen = set()
    for tris in candidates:
        if tris in seen:
            continue
        seen.add(tris)
        site = SurgerySite(tris)
        try:
            kind, *_ = _site_analysis(g, site)
        except InvalidSiteError:
            continue
        if kind == "annulus":
            sites.append(site)
    sites.sort(key=lambda s: sorted(t.verts for t in s.triangles))
    return sites


# ---------------------------------------------------------------------------
# resolving a 2-cycle into a mapped closed surface


def surface_from_cycle(X: SimplicialComplex, y: Chain,
                       force_robust: bool = False) -> XSurface:
    """A closed oriented XSurface whose pushforward fundamental cycle equals
    y exactly.

    The triangles of y (with multiplicity) are glued along matched opposite
    edge occurrences; vertices are split so that every link is a single
    circle.  When the direct gluing would produce a doubled edge the pairing
    is realized through degenerate connector bands instead, which always
    yields a genuine simplicial surface and pushes forward to the same chain.
    """
    if y.dim != 2:
        raise InputError("surface resolution expects a 2-chain")
    if not X.contains_chain(y):
        raise InputError("chain does not live in the base complex")
    if not y.is_zero() and not boundary(y).is_zero():
        raise InvariantError("chain is not a cycle")
    if y.is_zero():
        return empty_surface(X)

    copies = []  # oriented X-vertex triples, one per triangle copy
    for s in sorted(y.coeffs):
        c = y.coeffs[s]
        v0, v1, v2 = s.verts
        tri = (v0, v1, v2) if c > 0 else (v1, v0, v2)
        copies.extend([tri] * abs(c))

    # slots: 3 fresh ids per copy; slot 3*t + i maps to copies[t][i]
    n = len(copies)
    slot_image = {}
    for t, tri in enumerate(copies):
        for i in range(3):
            slot_image[3 * t + i] = tri[i]

    # edge occurrences and the deterministic pairing
    plus: dict[tuple[int, int], list[tuple[int, int]]] = {}
    minus: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for t, tri in enumerate(copies):
        for i in range(3):
            tail, head = 3 * t + i, 3 * t + (i + 1) % 3
            a, b = slot_image[tail], slot_image[head]
            if a < b:
                plus.setdefault((a, b), []).append((tail, head))
            else:
                minus.setdefault((b, a), []).append((tail, head))
    pairings = []  # ((tail+, head+), (tail-, head-)) with opposite directions
    for e in sorted(plus):
        p, m = plus[e], minus.get(e, [])
        assert len(p) == len(m), "unbalanced edge occurrences in a cycle"
        pairings.extend(zip(p, m))

    if not force_robust:
        direct = _resolve_direct(X, copies, slot_image, pairings)
        if direct is not None:
            assert direct.pushed_cycle() == y
            return direct
    robust = _resolve_with_connectors(X, copies, slot_image, pairings)
    assert robust.pushed_cycle() == y
    return robust


def _resolve_direct(X, copies, slot_image, pairings) -> XSurface | None:
    """Glue paired edge occurrences directly, splitting vertices along link
    circles.  Returns None when the quotient fails to be simplicial."""
    # link adjacency between slots: each pairing identifies tail+ with head-
    # and head+ with tail-
    adj: dict[int, list[int]] = {s: [] for s in slot_image}
    for (tp, hp), (tm, hm) in pairings:
        adj[tp].append(hm)
        adj[hm].append(tp)
        adj[hp].append(tm)
        adj[tm].append(hp)
    comp: dict[int, int] = {}
    comp_images = []
    for s in sorted(slot_image):
        if s in comp:
            continue
        cid = len(comp_images)
        comp_images.append(slot_image[s])
        stack = [s]
        comp[s] = cid
        while stack:
            cur = stack.pop()
            assert slot_image[cur] == slot_image[s]
            for nxt in adj[cur]:
                if nxt not in comp:
                    comp[nxt] = cid
                    stack.append(nxt)

    # simpliciality: distinct corners, no doubled edges, no doubled triangles
    final_edges = set()
    for (tp, hp), (tm, hm) in pairings:
        e = (comp[tp], comp[hp])
        e = (min(e), max(e))
        if e[0] == e[1] or e in final_edges:
            return None
        final_edges.add(e)
    terms = []
    tri_sets = set()
    for t in range(len(copies)):
        tri = (comp[3 * t], comp[3 * t + 1], comp[3 * t + 2])
        if len(set(tri)) != 3 or frozenset(tri) in tri_sets:
            return None
        tri_sets.add(frozenset(tri))
        terms.append((tri, 1))
    images = {cid: img for cid, img in enumerate(comp_images)}
    try:
        return _assemble(X, terms, images)
    except InvariantError:
        return None


def _resolve_with_connectors(X, copies, slot_image, pairings) -> XSurface:
    """Keep every triangle copy on its own slots and realize each pairing by
    a degenerate connector band; cap the resulting link polygons with
    point-mapped cones."""
    terms = [((3 * t, 3 * t + 1, 3 * t + 2), 1) for t in range(len(copies))]
    images = dict(slot_image)
    fresh = 3 * len(copies)
    # per-vertex successor structure for the link polygons:
    # each connector contributes directed paths tail -> mid -> partner head
    succ: dict[int, int] = {}
    for (tp, hp), (tm, hm) in pairings:
        a_img, b_img = slot_image[tp], slot_image[hp]
        m_a, m_b = fresh, fresh + 1
        fresh += 2
        images[m_a] = a_img
        images[m_b] = b_img
        # strip with boundary -(tp->hp) - (tm->hm) + verticals
        for tri in ((tp, hp, m_b), (tp, m_b, m_a), (m_a, m_b, tm), (m_a, tm, hm)):
            terms.append((tri, -1))
        # vertical paths: tp -> m_a -> hm (image a) and tm -> m_b -> hp (image b)
        succ[tp] = m_a
        succ[m_a] = hm
        succ[tm] = m_b
        succ[m_b] = hp
    # cap the polygons
    remaining = set(succ)
    while remaining:
        start = min(remaining)
        walk = [start]
        remaining.discard(start)
        v = succ[start]
        while v != start:
            walk.append(v)
            remaining.discard(v)
            v = succ[v]
        apex = fresh
        fresh += 1
        images[apex] = images[start]
        for tri, c in _cone(apex, walk):
            terms.append((tri, -c))
    return _assemble(X, terms, images)
