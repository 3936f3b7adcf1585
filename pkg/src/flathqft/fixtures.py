"""Standard small complexes used in tests, docs and the verification suites."""

from __future__ import annotations

from .complexes import SimplicialComplex, build_complex


def point() -> SimplicialComplex:
    return build_complex([(0,)])


def circle() -> SimplicialComplex:
    """A triangle without its interior."""
    return build_complex([(0, 1), (1, 2), (0, 2)])


def sphere() -> SimplicialComplex:
    """The boundary of the tetrahedron."""
    return build_complex([(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])


def torus() -> SimplicialComplex:
    """The 7-vertex triangulation of the torus."""
    tris = []
    for i in range(7):
        tris.append(((i) % 7, (i + 1) % 7, (i + 3) % 7))
        tris.append(((i) % 7, (i + 2) % 7, (i + 3) % 7))
    return build_complex(tris)


_RP2_FACES = [(0, 1, 2), (0, 1, 3), (0, 2, 4), (0, 3, 5), (0, 4, 5),
              (1, 2, 5), (1, 3, 4), (1, 4, 5), (2, 3, 4), (2, 3, 5)]


def projective_plane() -> SimplicialComplex:
    """The 6-vertex triangulation of the real projective plane."""
    return build_complex(_RP2_FACES)


def wedge() -> SimplicialComplex:
    """Projective plane, circle and sphere joined at vertex 0.

    H_1 = Z/2 + Z and H_2 = Z.
    """
    tris: list[tuple[int, ...]] = list(_RP2_FACES)
    tris += [(0, 6), (6, 7), (0, 7)]
    tris += [(0, 8, 9), (0, 8, 10), (0, 9, 10), (8, 9, 10)]
    return build_complex(tris)


def named_fixtures() -> dict[str, SimplicialComplex]:
    return {
        "point": point(),
        "circle": circle(),
        "sphere": sphere(),
        "torus": torus(),
        "rp2": projective_plane(),
        "wedge": wedge(),
    }
