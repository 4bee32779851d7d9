"""The canonical 18-action joystick set shared by every game.

Action ids follow the classic arcade ordering: NOOP, FIRE, the four
directions, the four diagonals, then the same nine with FIRE held.
"""

NOOP = 0
FIRE = 1
UP = 2
RIGHT = 3
LEFT = 4
DOWN = 5
UPRIGHT = 6
UPLEFT = 7
DOWNRIGHT = 8
DOWNLEFT = 9
UPFIRE = 10
RIGHTFIRE = 11
LEFTFIRE = 12
DOWNFIRE = 13
UPRIGHTFIRE = 14
UPLEFTFIRE = 15
DOWNRIGHTFIRE = 16
DOWNLEFTFIRE = 17

ALL_ACTIONS = tuple(range(18))

ACTION_NAMES = (
    "NOOP", "FIRE", "UP", "RIGHT", "LEFT", "DOWN",
    "UPRIGHT", "UPLEFT", "DOWNRIGHT", "DOWNLEFT",
    "UPFIRE", "RIGHTFIRE", "LEFTFIRE", "DOWNFIRE",
    "UPRIGHTFIRE", "UPLEFTFIRE", "DOWNRIGHTFIRE", "DOWNLEFTFIRE",
)

# (dx, dy) with +x right, +y down.
_DIRECTIONS = {
    NOOP: (0, 0), FIRE: (0, 0),
    UP: (0, -1), RIGHT: (1, 0), LEFT: (-1, 0), DOWN: (0, 1),
    UPRIGHT: (1, -1), UPLEFT: (-1, -1), DOWNRIGHT: (1, 1), DOWNLEFT: (-1, 1),
    UPFIRE: (0, -1), RIGHTFIRE: (1, 0), LEFTFIRE: (-1, 0), DOWNFIRE: (0, 1),
    UPRIGHTFIRE: (1, -1), UPLEFTFIRE: (-1, -1),
    DOWNRIGHTFIRE: (1, 1), DOWNLEFTFIRE: (-1, 1),
}

_FIRING = frozenset({
    FIRE, UPFIRE, RIGHTFIRE, LEFTFIRE, DOWNFIRE,
    UPRIGHTFIRE, UPLEFTFIRE, DOWNRIGHTFIRE, DOWNLEFTFIRE,
})


def direction(action):
    """Movement component of an action as an (dx, dy) unit-ish offset."""
    return _DIRECTIONS[action]


def has_fire(action):
    return action in _FIRING


def is_valid(action):
    return isinstance(action, int) and 0 <= action <= 17
