"""Integral homology with generators and witnesses; degree-2 cohomology.

Homology groups come with explicit generator cycles, and each torsion
generator carries a witness chain whose boundary is the generator times its
order.  Those witnesses are exactly what the universal-coefficient splitting
of a 2-cocycle consumes: the Hom part pairs the cocycle with the degree-2
generators, the Ext part evaluates it on the torsion witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Mapping

from .abelian import (CoeffElement, CoeffGroup, Cyclic, DirectSum, ExtClass,
                      FgAbGroup, FreeInt, GroupHom, RationalCircle, hom_values)
from .complexes import Chain, Simplex, SimplicialComplex, boundary, boundary_matrix
from .errors import (DimensionError, DomainMismatchError, InputError,
                     InvariantError, NotACocycleError)
from .linalg import IntegerSolver, IntMatrix, smith_normal_form, solve_integer


def chain_to_vector(X: SimplicialComplex, c: Chain) -> list[int]:
    vec = [0] * X.n_simplices(c.dim)
    for s, coeff in c.coeffs.items():
        vec[X.index(s)] = coeff
    return vec


def vector_to_chain(X: SimplicialComplex, k: int, vec) -> Chain:
    ss = X.simplices(k)
    return Chain(k, {ss[i]: int(v) for i, v in enumerate(vec) if v})


class HomologyGroup:
    """H_k of a complex with generator cycles and torsion witnesses."""

    def __init__(self, X: SimplicialComplex, degree: int, group: FgAbGroup,
                 generator_cycles: list[Chain], torsion_witnesses: list[Chain],
                 cycle_solver: IntegerSolver, class_transform: IntMatrix,
                 class_positions: list[int], boundary_solver: IntegerSolver):
        self.complex = X
        self.degree = degree
        self.group = group
        self.generator_cycles = generator_cycles
        self.torsion_witnesses = torsion_witnesses
        self._cycle_solver = cycle_solver
        self._class_transform = class_transform
        self._class_positions = class_positions
        self._boundary_solver = boundary_solver
        for z in generator_cycles:
            if degree > 0 and not boundary(z).is_zero():
                raise InvariantError("generator cycle has non-zero boundary")
        for d, w, z in zip(group.invariant_factors, torsion_witnesses, generator_cycles):
            if boundary(w) != z.scale(d):
                raise InvariantError("torsion witness does not bound d * generator")

    def class_of(self, z: Chain) -> tuple[int, ...]:
        """Coordinates of the homology class of the cycle z in the generators."""
        if z.dim != self.degree:
            raise DimensionError(f"cycle has degree {z.dim}, expected {self.degree}")
        if z.dim > 0 and not boundary(z).is_zero():
            raise InvariantError("not a cycle")
        coords = self._cycle_solver.solve(chain_to_vector(self.complex, z))
        if coords is None:
            raise InvariantError("cycle is not an integer combination of the kernel basis")
        transformed = self._class_transform.mul_vec(coords)
        return self.group.canon(transformed[i] for i in self._class_positions)

    def is_boundary_with_witness(self, z: Chain) -> Chain | None:
        """A chain w with boundary(w) = z, or None when z is not a boundary."""
        if z.dim != self.degree:
            raise DimensionError(f"cycle has degree {z.dim}, expected {self.degree}")
        if z.dim > 0 and not boundary(z).is_zero():
            raise InvariantError("witness requested for a non-cycle")
        sol = self._boundary_solver.solve(chain_to_vector(self.complex, z))
        if sol is None:
            return None
        return vector_to_chain(self.complex, self.degree + 1, sol)

    def __repr__(self):
        return f"H_{self.degree} = {self.group}"


def _sparsify(z: Chain, boundaries: list[tuple[Chain, Chain]]) -> tuple[Chain, Chain | None]:
    """Greedy support reduction of a generator by adding boundary columns.

    ``boundaries`` pairs each boundary chain with the unit chain it bounds.
    Returns the reduced cycle and the accumulated correction u such that
    z_new = z + boundary(u); the caller fixes torsion witnesses with it.
    """
    correction: Chain | None = None
    improved = True
    while improved:
        improved = False
        for b, unit in boundaries:
            for sign in (1, -1):
                cand = z + b.scale(sign)
                if len(cand.coeffs) < len(z.coeffs):
                    z = cand
                    step = unit.scale(sign)
                    correction = step if correction is None else correction + step
                    improved = True
    return z, correction


_homology_cache: dict[int, tuple[SimplicialComplex, dict[int, HomologyGroup]]] = {}


def homology(X: SimplicialComplex, k: int) -> HomologyGroup:
    """H_k(X; Z) with generators, computed from the Smith normal forms of
    the boundary maps.  Results are cached per complex."""
    if k < 0 or k > max(X.dim, 0):
        raise DimensionError(f"degree {k} out of range for a complex of dim {X.dim}")
    cached = _homology_cache.get(id(X))
    if cached is not None and cached[0] is X and k in cached[1]:
        return cached[1][k]

    n_k = X.n_simplices(k)
    if k == 0:
        kernel_cols = [[1 if i == j else 0 for i in range(n_k)] for j in range(n_k)]
    else:
        dk = boundary_matrix(X, k)
        kernel_cols = []
        snf_k = smith_normal_form(dk)
        diag = snf_k.S.diagonal()
        for j in range(dk.cols):
            if j >= len(diag) or diag[j] == 0:
                kernel_cols.append(snf_k.V.column(j))
    kmat = IntMatrix.from_columns(n_k, kernel_cols)
    z = len(kernel_cols)
    cycle_solver = IntegerSolver(kmat)

    if k + 1 <= X.dim:
        dk1 = boundary_matrix(X, k + 1)
    else:
        dk1 = IntMatrix.zeros(n_k, 0)
    boundary_solver = IntegerSolver(dk1)

    m_cols = []
    for j in range(dk1.cols):
        coords = cycle_solver.solve(dk1.column(j))
        assert coords is not None, "boundary column is not a cycle"
        m_cols.append(coords)
    m = IntMatrix.from_columns(z, m_cols)
    snf_m = smith_normal_form(m)
    diag_m = snf_m.S.diagonal()

    new_basis = kmat.mul(snf_m.u_inv)
    factors = []
    positions = []
    free_positions = []
    torsion_witnesses = []
    generator_cycles = []
    for i in range(z):
        d = diag_m[i] if i < len(diag_m) else 0
        if d == 1:
            continue
        gen = vector_to_chain(X, k, new_basis.column(i))
        if d == 0:
            free_positions.append((i, gen))
        else:
            factors.append(d)
            positions.append(i)
            generator_cycles.append(gen)
            torsion_witnesses.append(vector_to_chain(X, k + 1, snf_m.V.column(i)))
    for i, gen in free_positions:
        positions.append(i)
        generator_cycles.append(gen)

    # shrink generator supports by greedily absorbing boundary columns
    col_pairs = [(vector_to_chain(X, k, dk1.column(j)),
                  Chain(k + 1, {X.simplices(k + 1)[j]: 1}))
                 for j in range(dk1.cols)]
    for idx in range(len(generator_cycles)):
        gen, corr = _sparsify(generator_cycles[idx], col_pairs)
        if corr is not None:
            generator_cycles[idx] = gen
            if idx < len(factors):
                d = factors[idx]
                torsion_witnesses[idx] = torsion_witnesses[idx] + corr.scale(d)

    group = FgAbGroup(tuple(factors), rank=len(free_positions))
    hg = HomologyGroup(X, k, group, generator_cycles, torsion_witnesses,
                       cycle_solver, snf_m.U, positions, boundary_solver)
    if cached is None or cached[0] is not X:
        _homology_cache[id(X)] = (X, {})
    _homology_cache[id(X)][1][k] = hg
    return hg


def is_boundary_with_witness(X: SimplicialComplex, z: Chain) -> Chain | None:
    """A chain w with boundary(w) = z exactly, or None."""
    return homology(X, z.dim).is_boundary_with_witness(z)


# ---------------------------------------------------------------------------
# cochains


class Cochain:
    """An A-valued cochain on the k-simplices of a fixed complex.

    Values are stored against the increasing-vertex orientation; evaluation
    on an oriented simplex multiplies by its sign, and evaluation on chains
    extends Z-linearly.
    """

    def __init__(self, X: SimplicialComplex, degree: int, group: CoeffGroup,
                 values: Mapping[Simplex, CoeffElement] | None = None):
        if degree < 0:
            raise DimensionError("cochain degree must be non-negative")
        vals: dict[Simplex, CoeffElement] = {}
        for s, v in (values or {}).items():
            if s.dim != degree:
                raise DomainMismatchError(f"simplex {s} has dim {s.dim}, cochain degree {degree}")
            if not X.has(s):
                raise InputError(f"simplex {s} not in the complex")
            if v.group != group:
                raise DomainMismatchError(f"value {v!r} not in {group}")
            if not v.is_zero():
                vals[s] = v
        self.complex = X
        self.degree = degree
        self.group = group
        self.values = vals

    def value_on(self, s: Simplex) -> CoeffElement:
        return self.values.get(s, self.group.zero())

    def evaluate(self, c: Chain) -> CoeffElement:
        if c.dim != self.degree:
            raise DimensionError(f"chain degree {c.dim} != cochain degree {self.degree}")
        if not self.complex.contains_chain(c):
            raise DomainMismatchError("chain does not live in the cochain's complex")
        acc = self.group.zero()
        for s, coeff in c.coeffs.items():
            v = self.values.get(s)
            if v is not None:
                acc = acc + coeff * v
        return acc

    def __add__(self, other: "Cochain") -> "Cochain":
        if (other.complex is not self.complex and other.complex != self.complex) \
                or other.degree != self.degree or other.group != self.group:
            raise DomainMismatchError("cochains not compatible")
        out = dict(self.values)
        for s, v in other.values.items():
            out[s] = out.get(s, self.group.zero()) + v
        return Cochain(self.complex, self.degree, self.group, out)

    def __neg__(self) -> "Cochain":
        return Cochain(self.complex, self.degree, self.group,
                       {s: -v for s, v in self.values.items()})

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def is_zero(self) -> bool:
        return not self.values

    def __eq__(self, other):
        return (isinstance(other, Cochain) and self.complex == other.complex
                and self.degree == other.degree and self.group == other.group
                and self.values == other.values)

    def __repr__(self):
        return f"Cochain(deg={self.degree}, {len(self.values)} non-zero values in {self.group})"


def coboundary(f: Cochain) -> Cochain:
    """(delta f)(sigma) = f(boundary sigma)."""
    X = f.complex
    if f.degree >= X.dim:
        raise DimensionError(f"coboundary needs degree < dim = {X.dim}")
    out: dict[Simplex, CoeffElement] = {}
    for s in X.simplices(f.degree + 1):
        v = f.evaluate(boundary(Chain(f.degree + 1, {s: 1})))
        if not v.is_zero():
            out[s] = v
    return Cochain(X, f.degree + 1, f.group, out)


def is_cocycle(f: Cochain) -> bool:
    """Whether f vanishes on all boundaries of (degree+1)-simplices."""
    X = f.complex
    for s in X.simplices(f.degree + 1):
        if not f.evaluate(boundary(Chain(f.degree + 1, {s: 1}))).is_zero():
            return False
    return True


def offending_cocycle_simplex(f: Cochain) -> Simplex | None:
    """The first (degree+1)-simplex on which the coboundary is non-zero."""
    X = f.complex
    for s in X.simplices(f.degree + 1):
        if not f.evaluate(boundary(Chain(f.degree + 1, {s: 1}))).is_zero():
            return s
    return None


# ---------------------------------------------------------------------------
# the universal-coefficient splitting of a degree-2 cocycle


@dataclass(frozen=True)
class UctSplit:
    """The pair (Hom part on H_2, Ext class over H_1) attached to a cocycle."""

    hom_part: GroupHom
    ext_part: ExtClass

    def is_zero(self) -> bool:
        return self.hom_part.is_zero() and self.ext_part.is_zero()


def uct_split(X: SimplicialComplex, theta: Cochain) -> UctSplit:
    """Split the class of a 2-cocycle into its Hom and Ext data.

    The Hom part pairs theta with the degree-2 homology generators.  The Ext
    part evaluates theta on a witness w with boundary(w) = d * t for each
    torsion generator t of H_1 of order d, read modulo d*A.
    """
    if theta.complex is not X and theta.complex != X:
        raise DomainMismatchError("cochain lives on a different complex")
    if theta.degree != 2:
        raise DimensionError("uct_split expects a degree-2 cochain")
    if not is_cocycle(theta):
        raise NotACocycleError(
            f"not a cocycle: coboundary non-zero on {offending_cocycle_simplex(theta)}")
    h2 = homology(X, 2)
    h1 = homology(X, 1)
    hom_part = hom_values(h2.group, theta.group,
                          [theta.evaluate(z) for z in h2.generator_cycles])
    carries = [theta.evaluate(w) for w in h1.torsion_witnesses]
    ext_part = ExtClass(h1.group, theta.group, tuple(carries))
    return UctSplit(hom_part, ext_part)


# ---------------------------------------------------------------------------
# coboundary membership with witnesses


def _solve_mod(X: SimplicialComplex, ints: list[int], modulus: int) -> list[int] | None:
    """Solve (delta f) = theta mod `modulus` for integer f on the edges;
    modulus 0 means over Z."""
    dmat = boundary_matrix(X, 2).transpose()
    n2, n1 = dmat.rows, dmat.cols
    if modulus == 0:
        return solve_integer(dmat, ints)
    aug = [dmat.row(i) + [modulus if j == i else 0 for j in range(n2)]
           for i in range(n2)]
    sol = solve_integer(IntMatrix.from_rows(n2, n1 + n2, aug), ints)
    if sol is None:
        return None
    return sol[:n1]


def is_coboundary(X: SimplicialComplex, theta: Cochain) -> Cochain | None:
    """A 1-cochain f with coboundary(f) = theta, or None.

    Complete as well as sound: for finite cyclic coefficients the witness
    search runs modulo n; over the rational circle, denominators up to
    N * (exponent of the H_1 torsion) suffice for every trivial class, so a
    failed search genuinely means the class is non-trivial.
    """
    if theta.degree != 2:
        raise DimensionError("coboundary membership implemented for degree 2")
    A = theta.group
    if isinstance(A, DirectSum):
        witnesses = []
        for i, part in enumerate(A.parts):
            comp = Cochain(X, 2, part,
                           {s: part.element(v.value[i]) for s, v in theta.values.items()})
            w = is_coboundary(X, comp)
            if w is None:
                return None
            witnesses.append(w)
        edges = X.simplices(1)
        vals = {}
        for e in edges:
            raw = tuple(w.value_on(e).value for w in witnesses)
            vals[e] = A.element(raw)
        return Cochain(X, 1, A, vals)

    tvec = [theta.value_on(s) for s in X.simplices(2)]
    if isinstance(A, FreeInt):
        sol = _solve_mod(X, [v.value for v in tvec], 0)
        if sol is None:
            return None
        f = Cochain(X, 1, A, {e: A.element(x)
                              for e, x in zip(X.simplices(1), sol)})
    elif isinstance(A, Cyclic):
        sol = _solve_mod(X, [v.value for v in tvec], A.modulus)
        if sol is None:
            return None
        f = Cochain(X, 1, A, {e: A.element(x)
                              for e, x in zip(X.simplices(1), sol)})
    elif isinstance(A, RationalCircle):
        denom = lcm(1, *(v.value.denominator for v in tvec)) if tvec else 1
        h1 = homology(X, 1)
        exponent = h1.group.invariant_factors[-1] if h1.group.invariant_factors else 1
        m = denom * exponent
        ints = [int(v.value * m) for v in tvec]
        sol = _solve_mod(X, ints, m)
        if sol is None:
            return None
        f = Cochain(X, 1, A, {e: A.element(Fraction(x, m))
                              for e, x in zip(X.simplices(1), sol)})
    else:
        raise InputError(f"unsupported coefficient group {A}")
    assert coboundary(f) == theta
    return f
