"""Acceptance suite: one test per criterion, one printed line per criterion.

All equalities are exact (integers, residues, reduced fractions); there are
no tolerances anywhere.  The randomized suites read their seed from the
HQFT_SEED environment variable (default 0) and are deterministic for a fixed
seed.
"""

import os
import random
from fractions import Fraction

from flathqft import fixtures
from flathqft import surfaces as sf
from flathqft.abelian import Cyclic, RationalCircle
from flathqft.complexes import boundary_matrix
from flathqft.homology import (Cochain, coboundary, homology, is_coboundary,
                               uct_split)
from flathqft.hqft import (FiberElement, coboundary_iso, evaluate, fiber_tensor,
                           holonomy, holonomy_character, input_object, inverse,
                           tau, tensor, trivial)
from flathqft.bridge import verify_theorem71
from flathqft.linalg import IntegerSolver, IntMatrix, smith_normal_form, solve_integer
from flathqft.sampling import (composable_pair, random_closed_surface,
                               random_cochain, random_element,
                               random_endomorphism, random_surgery)

from oracles import box_solve, homology_oracle, snf_diagonal_bruteforce

SEED = int(os.environ.get("HQFT_SEED", "0"))


def report(criterion: str, ok: bool, detail: str = ""):
    """One line per criterion; run with ``pytest -s`` to see them live."""
    line = f"acceptance {criterion}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" ({detail})"
    print(line, flush=True)
    assert ok, line


def test_criterion_1_homology_regression():
    expected = {
        "point": {1: (0, []), 2: (0, [])},
        "circle": {1: (1, []), 2: (0, [])},
        "sphere": {1: (0, []), 2: (1, [])},
        "torus": {1: (2, []), 2: (1, [])},
        "rp2": {1: (0, [2]), 2: (0, [])},
    }
    ok = True
    for name, degrees in expected.items():
        X = fixtures.named_fixtures()[name]
        for k, (betti, torsion) in degrees.items():
            if k > X.dim:
                got = (0, [])
                oracle = (0, [])
            else:
                hg = homology(X, k)
                got = (hg.group.rank, list(hg.group.invariant_factors))
                rows_k = boundary_matrix(X, k).to_rows() if 1 <= k <= X.dim else None
                rows_k1 = boundary_matrix(X, k + 1).to_rows() if k + 1 <= X.dim else None
                oracle = homology_oracle(rows_k, rows_k1, X.n_simplices(k))
                oracle = (oracle[0], oracle[1])
            ok = ok and got == (betti, torsion) == (oracle[0], list(oracle[1]))
    report("criterion 1 (homology regression vs brute-force oracle)", ok)


def test_criterion_2_theorem_diagram():
    cases = [("rp2", Cyclic(2)), ("torus", Cyclic(3)),
             ("sphere", Cyclic(4)), ("wedge", Cyclic(4))]
    ok = True
    details = []
    for name, A in cases:
        X = fixtures.named_fixtures()[name]
        rep = verify_theorem71(X, A, rng_seed=SEED, complex_label=name)
        count_ok = any(i.name.startswith("class count") and i.passed for i in rep.items)
        ok = ok and rep.passed and count_ok
        details.append(f"{name}/{A.spec_string()}:{'ok' if rep.passed else 'FAIL'}")
    report("criterion 2 (two-square diagram at desk scale)", ok, ", ".join(details))


def test_criterion_3_divisibility_dichotomy():
    X = fixtures.projective_plane()
    tris = X.simplices(2)
    edges = X.simplices(1)
    QZ = RationalCircle()
    A2 = Cyclic(2)

    # over the rational circle every mod-2-shaped cocycle bounds: exhaustive
    # witness search over all 1024 half-integer cochains through one solver
    m = 4  # denominator 2 times the H_1 torsion exponent 2
    dmat = boundary_matrix(X, 2).transpose()
    aug = [dmat.row(i) + [m if j == i else 0 for j in range(len(tris))]
           for i in range(len(tris))]
    solver = IntegerSolver(IntMatrix.from_rows(len(tris), len(edges) + len(tris), aug))
    half_ok = True
    for mask in range(1 << len(tris)):
        target = [(m // 2) * (mask >> i & 1) for i in range(len(tris))]
        sol = solver.solve(target)
        if sol is None:
            half_ok = False
            break
    # spot-check the library path agrees and produces verified witnesses
    for mask in (0, 1, 513, 1023):
        theta = Cochain(X, 2, QZ, {t: QZ.element(Fraction(mask >> i & 1, 2))
                                   for i, t in enumerate(tris)})
        w = is_coboundary(X, theta)
        half_ok = half_ok and w is not None and coboundary(w) == theta

    # over Z/2 the non-trivial class has zero holonomy character yet no
    # trivializing 1-cochain: exhaustive search over all 2^15 of them
    theta2 = None
    for vec in ([1] + [0] * 9,):
        theta2 = Cochain(X, 2, A2, {t: A2.element(v) for t, v in zip(tris, vec)})
    split = uct_split(X, theta2)
    nontrivial = not split.ext_part.is_zero()
    char_zero = holonomy_character(tau(X, A2, theta2)).is_zero()
    target_mask = sum(1 << i for i, t in enumerate(tris)
                      if not theta2.value_on(t).is_zero())
    delta_cols = []
    for e in edges:
        df = coboundary(Cochain(X, 1, A2, {e: A2.element(1)}))
        delta_cols.append(sum(1 << i for i, t in enumerate(tris)
                              if not df.value_on(t).is_zero()))
    image = {0}
    for col in delta_cols:
        image |= {v ^ col for v in image}
    no_witness = target_mask not in image
    searched_all = len(image) == 512  # rank of the mod-2 coboundary map is 9

    ok = half_ok and nontrivial and char_zero and no_witness and searched_all
    report("criterion 3 (divisibility dichotomy on the projective plane)", ok,
           f"q/z witnesses exhaustive; z/2 kernel class confirmed over "
           f"{1 << len(edges)} candidate cochains")


def test_criterion_4_holonomy_invariance():
    rng = random.Random(SEED)
    groups = [Cyclic(2), Cyclic(3), Cyclic(4), Cyclic(6), RationalCircle()]
    names = ["torus", "rp2", "sphere", "wedge"]
    instances = 0
    ok = True
    while instances < 100:
        X = fixtures.named_fixtures()[names[instances % len(names)]]
        A = groups[instances % len(groups)]
        theta = random_cochain(X, A, rng)
        H = tau(X, A, theta)
        g = random_closed_surface(X, rng)
        base = holonomy(H, g)
        # (a) one to five local surgeries
        h = g
        for _ in range(rng.randint(1, 5)):
            h = random_surgery(h, rng)
            ok = ok and holonomy(H, h) == base
        # (b) disjoint union with constant spheres
        u = sf.disjoint_union(g, sf.constant_sphere(X, rng.randrange(X.vertex_count)))
        ok = ok and holonomy(H, u) == base
        # (c) replacing the surface by the resolution of its pushforward cycle
        r = sf.surface_from_cycle(X, g.pushed_cycle())
        ok = ok and holonomy(H, r) == base
        instances += 1
        if not ok:
            break
    report("criterion 4 (holonomy invariance: surgery, spheres, resolution)",
           ok, f"{instances} randomized instances, exact equality")


def test_criterion_5_functoriality_monoidality_symmetry():
    rng = random.Random(SEED + 1)
    groups = [Cyclic(3), Cyclic(4), RationalCircle()]
    names = ["torus", "rp2", "wedge"]
    pairs = 0
    ok = True
    while pairs < 100:
        X = fixtures.named_fixtures()[names[pairs % len(names)]]
        A = groups[pairs % len(groups)]
        H = tau(X, A, random_cochain(X, A, rng))
        g1, g2 = composable_pair(X, rng)
        e = FiberElement(input_object(H, g1), random_element(A, rng))
        ok = ok and evaluate(H, sf.glue(g1, g2), e) == evaluate(H, g2, evaluate(H, g1, e))
        # monoidality under disjoint union
        e2 = FiberElement(input_object(H, g2), random_element(A, rng))
        union = sf.disjoint_union(g1, g2)
        ok = ok and evaluate(H, union, fiber_tensor(e, e2)) == \
            fiber_tensor(evaluate(H, g1, e), evaluate(H, g2, e2))
        # symmetry: the swap cylinder permutes loops and keeps the phase
        loops = [list(l) for l in g1.input_loops()]
        if len(loops) >= 2:
            swap = sf.permute_outputs(sf.identity_cylinder(X, loops), [1, 0])
            es = FiberElement(input_object(H, swap), random_element(A, rng))
            out = evaluate(H, swap, es)
            ok = ok and out.phase == es.phase
            ok = ok and out.object.loops == (es.object.loops[1], es.object.loops[0])
        # trace identity and reflection cancellation
        endo = random_endomorphism(X, rng)
        ee = FiberElement(input_object(H, endo), random_element(A, rng))
        ok = ok and evaluate(H, endo, ee).phase - ee.phase == \
            holonomy(H, sf.close_up(endo))
        closed = random_closed_surface(X, rng)
        ok = ok and holonomy(H, sf.disjoint_union(closed, sf.reverse(closed))).is_zero()
        pairs += 1
        if not ok:
            break
    report("criterion 5 (functoriality, monoidality, symmetry, trace)",
           ok, f"{pairs} randomized composable pairs, exact equality")


def test_criterion_6_group_structure():
    rng = random.Random(SEED + 2)
    names = ["torus", "rp2", "wedge"]
    groups = [Cyclic(4), Cyclic(6), RationalCircle()]
    ok = True
    done = 0
    while done < 50:
        X = fixtures.named_fixtures()[names[done % len(names)]]
        A = groups[done % len(groups)]
        H1 = tau(X, A, random_cochain(X, A, rng))
        H2 = tau(X, A, random_cochain(X, A, rng))
        c1, c2 = holonomy_character(H1), holonomy_character(H2)
        ok = ok and holonomy_character(tensor(H1, H2)).values == (c1 + c2).values
        ok = ok and holonomy_character(inverse(H1)).values == (-c1).values
        done += 1
        if not ok:
            break
    # tensor with the inverse is isomorphic to the trivial theory via an
    # exhibited natural transformation
    X = fixtures.torus()
    QZ = RationalCircle()
    H = tau(X, QZ, random_cochain(X, QZ, rng))
    cancel = tensor(H, inverse(H))
    ok = ok and cancel.cocycle.is_zero()
    iso = coboundary_iso(cancel, Cochain(X, 1, QZ, {}))
    ok = ok and iso.target.cocycle == trivial(X, QZ).cocycle
    cobs = [composable_pair(X, rng)[0] for _ in range(4)]
    ok = ok and iso.verify_naturality(cobs)
    # and a non-trivial witness: the theory of a coboundary trivializes via f
    f = random_cochain(X, QZ, rng, degree=1)
    iso2 = coboundary_iso(tau(X, QZ, coboundary(f)), f)
    ok = ok and iso2.target.cocycle.is_zero()
    ok = ok and iso2.verify_naturality(cobs)
    report("criterion 6 (holonomy characters form a group; inverses trivialize)",
           ok, f"{done} random theory pairs")


def test_criterion_7_exact_linalg_soundness():
    rng = random.Random(SEED + 3)
    ok = True
    for _ in range(1000):
        r, c = rng.randint(1, 8), rng.randint(1, 8)
        rows = [[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)]
        a = IntMatrix.from_rows(r, c, rows)
        d = smith_normal_form(a)
        ok = ok and d.verify(a)
        ok = ok and d.S.diagonal() == snf_diagonal_bruteforce(rows)
        if not ok:
            break
    solved = 0
    for _ in range(200):
        r, c = rng.randint(1, 3), rng.randint(1, 3)
        rows = [[rng.randint(-3, 3) for _ in range(c)] for _ in range(r)]
        if rng.random() < 0.5:
            x = [rng.randint(-2, 2) for _ in range(c)]
            b = [sum(rows[i][j] * x[j] for j in range(c)) for i in range(r)]
        else:
            b = [rng.randint(-6, 6) for _ in range(r)]
        got = solve_integer(IntMatrix.from_rows(r, c, rows), b)
        boxed = box_solve(rows, b, 6)
        if got is None:
            ok = ok and boxed is None
        else:
            ok = ok and IntMatrix.from_rows(r, c, rows).mul_vec(got) == b
            solved += 1
        if not ok:
            break
    report("criterion 7 (exact linear algebra soundness)", ok,
           f"1000 Smith forms verified, 200 systems vs box search "
           f"({solved} solvable)")
