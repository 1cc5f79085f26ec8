"""Rubik's cube state, move grammar, scrambling, and text codecs.

A cube state is a string of 54 face letters listing the stickers of each
face in the fixed order U, R, F, D, B, L, each face row-major as seen from
outside the cube. Sticker letters are the face letters themselves, so the
solved cube reads as nine U's, nine R's, and so on.

Moves use the common face-turn grammar: a bare letter ("R") is a clockwise
quarter turn, a letter with an ASCII apostrophe ("R'") the counterclockwise
quarter turn, and a letter with a 2 ("F2") a half turn. Formulas are
space-separated move tokens.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from enum import IntEnum

from .cube_tables import CLOCKWISE_PERMS

FACES = "URFDBL"
SOLVED_FACELETS = "".join(face * 9 for face in FACES)

# Center stickers never move; one per face at offset 4.
CENTER_INDICES = tuple(i * 9 + 4 for i in range(6))


class FormulaSyntaxError(ValueError):
    """A move token that does not match the formula grammar."""

    def __init__(self, position: int, token: str):
        super().__init__(f"bad move token {token!r} at position {position}")
        self.position = position  # 1-based token number
        self.token = token


class FaceletStringError(ValueError):
    """Base class for malformed 54-character cube strings."""


class FaceletLengthError(FaceletStringError):
    def __init__(self, length: int):
        super().__init__(f"cube string must have 54 characters, got {length}")
        self.length = length


class FaceletAlphabetError(FaceletStringError):
    def __init__(self, position: int, char: str):
        super().__init__(f"character {char!r} at index {position} is not one of {FACES}")
        self.position = position
        self.char = char


class FaceletCountError(FaceletStringError):
    def __init__(self, symbol: str, count: int):
        super().__init__(f"symbol {symbol!r} appears {count} times, expected 9")
        self.symbol = symbol
        self.count = count


class FaceletCenterError(FaceletStringError):
    def __init__(self, face: str, found: str):
        super().__init__(f"center of face {face} must be {face!r}, found {found!r}")
        self.face = face
        self.found = found


class ScrambleLengthError(ValueError):
    pass


class Turn(IntEnum):
    """Quarter-turn multiples applied clockwise: R is 1, R2 is 2, R' is 3."""

    CW90 = 1
    HALF180 = 2
    CCW90 = 3


_SUFFIX_TO_TURN = {"": Turn.CW90, "2": Turn.HALF180, "'": Turn.CCW90}
_TURN_TO_SUFFIX = {turn: suffix for suffix, turn in _SUFFIX_TO_TURN.items()}


@dataclass(frozen=True, slots=True)
class Move:
    face: str
    turn: Turn

    def inverse(self) -> "Move":
        return Move(self.face, Turn(4 - self.turn))

    def __str__(self) -> str:
        return self.face + _TURN_TO_SUFFIX[self.turn]


# A formula is an ordered, possibly empty, tuple of moves.
Formula = tuple[Move, ...]

ALL_MOVES: Formula = tuple(
    Move(face, turn) for face in FACES for turn in (Turn.CW90, Turn.HALF180, Turn.CCW90)
)


def _compose(p, q):
    # apply p then q: new[i] = old[p[q[i]]]
    return tuple(p[j] for j in q)


def _build_move_perms():
    perms = {}
    for face, cw in CLOCKWISE_PERMS.items():
        half = _compose(cw, cw)
        perms[(face, Turn.CW90)] = cw
        perms[(face, Turn.HALF180)] = half
        perms[(face, Turn.CCW90)] = _compose(half, cw)
    return perms


MOVE_PERMS = _build_move_perms()


@dataclass(frozen=True, slots=True)
class FaceletCube:
    """Immutable cube state; defaults to the solved cube."""

    facelets: str = SOLVED_FACELETS


def parse_formula(text: str) -> Formula:
    """Parse space-separated move tokens; raises FormulaSyntaxError."""
    moves = []
    for position, token in enumerate(text.split(), start=1):
        if not token or token[0] not in FACES or token[1:] not in _SUFFIX_TO_TURN:
            raise FormulaSyntaxError(position, token)
        moves.append(Move(token[0], _SUFFIX_TO_TURN[token[1:]]))
    return tuple(moves)


def format_formula(formula: Formula) -> str:
    return " ".join(str(move) for move in formula)


def inverse_formula(formula: Formula) -> Formula:
    return tuple(move.inverse() for move in reversed(formula))


def apply_move(cube: FaceletCube, move: Move) -> FaceletCube:
    perm = MOVE_PERMS[(move.face, move.turn)]
    facelets = cube.facelets
    return FaceletCube("".join(map(facelets.__getitem__, perm)))


def apply_formula(cube: FaceletCube, formula: Formula) -> FaceletCube:
    facelets = cube.facelets
    for move in formula:
        perm = MOVE_PERMS[(move.face, move.turn)]
        facelets = "".join(map(facelets.__getitem__, perm))
    return FaceletCube(facelets)


def encode_facelets(cube: FaceletCube) -> str:
    return cube.facelets


def decode_facelets(text: str) -> FaceletCube:
    """Validate and wrap a 54-character cube string.

    Checks, in order: length, alphabet, nine-of-each symbol counts, and the
    fixed center stickers. Raises a FaceletStringError subclass on the first
    failure, which callers use to flag malformed states.
    """
    if len(text) != 54:
        raise FaceletLengthError(len(text))
    for position, char in enumerate(text):
        if char not in FACES:
            raise FaceletAlphabetError(position, char)
    for symbol in FACES:
        count = text.count(symbol)
        if count != 9:
            raise FaceletCountError(symbol, count)
    for face, index in zip(FACES, CENTER_INDICES):
        if text[index] != face:
            raise FaceletCenterError(face, text[index])
    return FaceletCube(text)


def is_solved(cube: FaceletCube) -> bool:
    return cube.facelets == SOLVED_FACELETS


def random_scramble(rng_seed: int, length: int, max_length: int = 5) -> Formula:
    """Seeded scramble of exactly `length` moves, uniform over the 18-move
    set, with no two consecutive moves on the same face."""
    if not 1 <= length <= max_length:
        raise ScrambleLengthError(f"length must be in 1..{max_length}, got {length}")
    rng = random.Random(rng_seed)
    moves = []
    previous_face = None
    for _ in range(length):
        candidates = [move for move in ALL_MOVES if move.face != previous_face]
        move = rng.choice(candidates)
        moves.append(move)
        previous_face = move.face
    return tuple(moves)


def render_cube_net(cube: FaceletCube) -> str:
    """Nine-line ASCII net: U on top, the L F R B band in the middle, D below."""
    s = cube.facelets

    def rows(face: str):
        base = FACES.index(face) * 9
        return [s[base + 3 * r: base + 3 * r + 3] for r in range(3)]

    up, right, front, down, back, left = (rows(f) for f in FACES)
    pad = " " * 4
    lines = [pad + row for row in up]
    lines += [" ".join(band) for band in zip(left, front, right, back)]
    lines += [pad + row for row in down]
    return "\n".join(lines)
