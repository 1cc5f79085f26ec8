#!/usr/bin/env python3
"""Derive the facelet permutation tables from a geometric cubie model.

Every sticker on a 3x3x3 cube is identified by the 3-D center position of
the cubie it sits on plus its outward normal. A clockwise quarter turn of a
face rotates the nine cubies of that layer about the face axis; chasing
(position, normal) pairs through the rotation yields the 54-element facelet
permutation for each turn. The only hand-written inputs are the per-face
reading frames of the standard unfolded net (U above F, each face row-major
as seen from outside); no permutation entry is typed by hand.

Running this file rewrites src/puzzletext/cube_tables.py. The test suite
also imports it as the independent oracle for the frozen tables.
"""
from __future__ import annotations

from pathlib import Path

FACES = "URFDBL"

# Axes: x toward R, y toward U, z toward F. Cubie centers sit at -1/0/1.
NORMALS = {
    "U": (0, 1, 0),
    "R": (1, 0, 0),
    "F": (0, 0, 1),
    "D": (0, -1, 0),
    "B": (0, 0, -1),
    "L": (-1, 0, 0),
}

# Reading frame per face: (top-left sticker position, row step, column step),
# row-major as seen from outside the cube. F, R, B, L are read with U up;
# U is read with B at the top of the view; D is read with F at the top.
FRAMES = {
    "U": ((-1, 1, -1), (0, 0, 1), (1, 0, 0)),
    "R": ((1, 1, 1), (0, -1, 0), (0, 0, -1)),
    "F": ((-1, 1, 1), (0, -1, 0), (1, 0, 0)),
    "D": ((-1, -1, 1), (0, 0, -1), (1, 0, 0)),
    "B": ((1, 1, -1), (0, -1, 0), (-1, 0, 0)),
    "L": ((-1, 1, -1), (0, -1, 0), (0, 0, 1)),
}


def _add(u, v):
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2])


def _sub(u, v):
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2])


def _scale(k, v):
    return (k * v[0], k * v[1], k * v[2])


def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def rotate_cw(v, axis):
    """Quarter-turn v about axis, clockwise as seen from outside the face.

    Rodrigues' formula at -90 degrees collapses to (v.a)a - a x v.
    """
    return _sub(_scale(_dot(v, axis), axis), _cross(axis, v))


def sticker_geometry():
    """Map facelet index (0..53 in URFDBL string order) to (position, normal)."""
    geometry = {}
    for face_index, face in enumerate(FACES):
        origin, row_step, col_step = FRAMES[face]
        for r in range(3):
            for c in range(3):
                pos = _add(origin, _add(_scale(r, row_step), _scale(c, col_step)))
                geometry[face_index * 9 + r * 3 + c] = (pos, NORMALS[face])
    return geometry


def clockwise_permutations():
    """Facelet permutation for each clockwise face turn.

    Returns {face: perm} where applying the turn is new[i] = old[perm[i]].
    """
    geometry = sticker_geometry()
    index_of = {key: idx for idx, key in geometry.items()}
    perms = {}
    for face in FACES:
        axis = NORMALS[face]
        perm = list(range(54))
        for idx, (pos, normal) in geometry.items():
            if _dot(pos, axis) == 1:  # sticker rides the turning layer
                target = index_of[(rotate_cw(pos, axis), rotate_cw(normal, axis))]
                perm[target] = idx
        perms[face] = tuple(perm)
    return perms


def _check(perms):
    for face, perm in perms.items():
        assert sorted(perm) == list(range(54)), face
        assert sum(1 for i, p in enumerate(perm) if i != p) == 20, face
        for center in range(4, 54, 9):
            assert perm[center] == center, face
        state = list(range(54))
        for _ in range(4):
            state = [state[i] for i in perm]
        assert state == list(range(54)), face


def _module_text(perms):
    lines = [
        '"""Facelet permutation tables for the six clockwise quarter turns.',
        "",
        "Generated by tools/derive_cube_tables.py; do not edit by hand.",
        'Applying one clockwise turn of `face`: new[i] = old[CLOCKWISE_PERMS[face][i]].',
        '"""',
        "",
        "CLOCKWISE_PERMS = {",
    ]
    for face in FACES:
        perm = perms[face]
        lines.append(f'    "{face}": (')
        for start in range(0, 54, 18):
            chunk = ", ".join(f"{p:2d}" for p in perm[start:start + 18])
            lines.append(f"        {chunk},")
        lines.append("    ),")
    lines.append("}")
    lines.append("")
    return "\n".join(lines)


def main():
    perms = clockwise_permutations()
    _check(perms)
    out = Path(__file__).resolve().parents[1] / "src" / "puzzletext" / "cube_tables.py"
    out.write_text(_module_text(perms), encoding="utf-8")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
