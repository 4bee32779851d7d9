"""Shared game plumbing: mode registry entries, screen constants, drawing."""

from dataclasses import dataclass, field

SCREEN_W = 160
SCREEN_H = 210


@dataclass(frozen=True)
class ModeInfo:
    players: int
    flags: object = None
    playable: bool = True
    label: str = ""


class Game:
    """One game family: its mode registry plus pure transition/render rules.

    State objects are plain mutable containers owned by the caller; step()
    mutates the given state in place and returns (rewards, events).  Events
    are short strings the core layer consumes ("progress" feeds the stall
    clock).  All randomness comes through the supplied rng, so replaying a
    (seed, action) sequence is bit-reproducible.
    """

    name = ""
    group = ""          # six-way game-theory grouping
    game_theory = ""    # catalog column: competitive / mixed / cooperative
    stall_enabled = False
    modes = {}
    default_mode = 0

    def minimal_actions(self, mode):
        raise NotImplementedError

    def init_state(self, mode, rng):
        raise NotImplementedError

    def step(self, state, actions, rng):
        raise NotImplementedError

    def render(self, state, screen):
        raise NotImplementedError

    def lives(self, state):
        raise NotImplementedError

    def is_terminal(self, state):
        return state.terminal

    def terminal_cause(self, state):
        return getattr(state, "cause", "")

    def stall_blame(self, state):
        """Player index responsible for making progress (stall games only)."""
        raise NotImplementedError

    def ram_features(self, state, player):
        """Small discrete feature tuple for table-based learners; optional."""
        raise NotImplementedError


def fill_rect(screen, x, y, w, h, color):
    """Paint an axis-aligned rectangle, clipped to the screen."""
    x0 = max(0, int(x))
    y0 = max(0, int(y))
    x1 = min(SCREEN_W, int(x + w))
    y1 = min(SCREEN_H, int(y + h))
    if x0 < x1 and y0 < y1:
        screen[y0:y1, x0:x1] = color
