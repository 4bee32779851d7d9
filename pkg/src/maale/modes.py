"""Mode-number encodings for every game family.

Each game variant is named by a small integer whose layout is
game-specific: Combat uses fixed lookup tables, Space Invaders packs five
option bits above a base of 33, Maze Craze combines a game type n and a
visibility level k as 4n+k, and Video Olympics / Entombed use plain
per-variant tables.
"""

from dataclasses import dataclass

from .errors import InvalidModeError

# --- Combat -----------------------------------------------------------

# mode -> (maze, billiards, invisible)
COMBAT_TANK_MODES = {
    1: (False, False, False),
    2: (True, False, False),
    8: (False, True, False),
    9: (True, True, False),
    10: (False, False, True),
    11: (True, False, True),
    13: (False, True, True),
    14: (True, True, True),
}

# mode -> (guided_missiles, jet_plane)
COMBAT_PLANE_MODES = {
    15: (False, False),
    16: (True, False),
    21: (False, True),
    22: (True, True),
}


@dataclass(frozen=True)
class CombatFlags:
    style: str  # "tank" or "plane"
    maze: bool = False
    billiards: bool = False
    invisible: bool = False
    guided: bool = False
    jet: bool = False

    def __post_init__(self):
        if self.style not in ("tank", "plane"):
            raise ValueError(f"bad combat style {self.style!r}")
        if self.style == "tank" and (self.guided or self.jet):
            raise ValueError("tank style does not use guided/jet flags")
        if self.style == "plane" and (self.maze or self.billiards or self.invisible):
            raise ValueError("plane style does not use maze/billiards/invisible flags")


_TANK_BY_FLAGS = {v: k for k, v in COMBAT_TANK_MODES.items()}
_PLANE_BY_FLAGS = {v: k for k, v in COMBAT_PLANE_MODES.items()}


def combat_mode(flags):
    """Mode number for a combination of Combat option flags."""
    if flags.style == "tank":
        return _TANK_BY_FLAGS[(flags.maze, flags.billiards, flags.invisible)]
    return _PLANE_BY_FLAGS[(flags.guided, flags.jet)]


def decode_combat_mode(mode):
    if mode in COMBAT_TANK_MODES:
        maze, billiards, invisible = COMBAT_TANK_MODES[mode]
        return CombatFlags("tank", maze=maze, billiards=billiards,
                           invisible=invisible)
    if mode in COMBAT_PLANE_MODES:
        guided, jet = COMBAT_PLANE_MODES[mode]
        return CombatFlags("plane", guided=guided, jet=jet)
    raise InvalidModeError(
        "combat", mode,
        list(COMBAT_TANK_MODES) + list(COMBAT_PLANE_MODES))


# --- Space Invaders ---------------------------------------------------

SPACE_INVADERS_BASE = 33


@dataclass(frozen=True)
class SpaceInvadersFlags:
    moving_shields: bool = False
    zigzag_bombs: bool = False
    fast_bombs: bool = False
    invisible_invaders: bool = False
    alternating_turns: bool = False


def space_invaders_mode(flags):
    """Pack the five option bits: 33 + m + 2z + 4f + 8i + 16a."""
    return (SPACE_INVADERS_BASE
            + flags.moving_shields
            + 2 * flags.zigzag_bombs
            + 4 * flags.fast_bombs
            + 8 * flags.invisible_invaders
            + 16 * flags.alternating_turns)


def decode_space_invaders_mode(mode):
    if not SPACE_INVADERS_BASE <= mode <= SPACE_INVADERS_BASE + 31:
        raise InvalidModeError("space_invaders", mode,
                               range(SPACE_INVADERS_BASE, SPACE_INVADERS_BASE + 32))
    bits = mode - SPACE_INVADERS_BASE
    return SpaceInvadersFlags(
        moving_shields=bool(bits & 1),
        zigzag_bombs=bool(bits & 2),
        fast_bombs=bool(bits & 4),
        invisible_invaders=bool(bits & 8),
        alternating_turns=bool(bits & 16),
    )


# --- Maze Craze -------------------------------------------------------

# Supported game types n; visibility k in [0, 3] applies to each.
MAZE_CRAZE_TYPES = {0: "race", 1: "robbers", 11: "capture"}


def maze_craze_mode(n, k):
    """Mode = 4n + k, where n is the game type and k the visibility level."""
    if n not in MAZE_CRAZE_TYPES:
        raise InvalidModeError("maze_craze", 4 * n + k,
                               [4 * t for t in MAZE_CRAZE_TYPES])
    if not 0 <= k <= 3:
        raise InvalidModeError("maze_craze", 4 * n + k)
    return 4 * n + k


def decode_maze_craze_mode(mode):
    """Inverse of maze_craze_mode; returns (n, k)."""
    n, k = divmod(mode, 4)
    if n not in MAZE_CRAZE_TYPES:
        raise InvalidModeError("maze_craze", mode,
                               [4 * t + j for t in MAZE_CRAZE_TYPES for j in range(4)])
    return n, k


# --- Video Olympics ---------------------------------------------------

def video_olympics_modes():
    """Variant name -> (two-player mode, four-player mode); None if absent."""
    return {
        "classic_pong": (4, 6),
        "foozpong": (19, 21),
        "quadrapong": (None, 33),
        "volleyball": (39, 41),
        "basketball": (45, 49),
    }


# --- Entombed ---------------------------------------------------------

def entombed_modes():
    return {"competitive": 2, "cooperative": 3}
