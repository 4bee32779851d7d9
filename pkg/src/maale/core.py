"""The multiplayer environment surface: handles, stepping, lives, screens.

A GameHandle is a single-threaded mutable state machine around one game's
pure transition rules.  All randomness lives in a per-handle RNG seeded at
reset, so (seed, action sequence) fully determines every screen, reward,
and lives value.  Rendering is lazy: the screen buffer is refreshed only
when screen_rgb() is called after a state change.
"""

import random
from dataclasses import dataclass

import numpy as np

from . import actions as A
from .errors import (
    InvalidModeError, NotResetError, TerminalStateError, UnknownGameError,
    UnplayableModeError, WrongArityError,
)
from .games import REGISTRY, SCREEN_H, SCREEN_W


@dataclass
class StallConfig:
    """Forfeit rule for games one player can freeze indefinitely."""
    enabled: bool = True
    threshold_frames: int = 300
    forfeit_reward: int = -1  # paid to the staller; opponent gets the negation

    def __post_init__(self):
        if self.threshold_frames < 1:
            raise ValueError("threshold_frames must be >= 1")


class GameHandle:
    def __init__(self, game, stall=None):
        self.game = game
        self.stall = stall if stall is not None else StallConfig()
        self.mode = game.default_mode
        self.state = None
        self.rng = None
        self.frame = 0
        self._terminal = False
        self._cause = ""
        self._screen = np.zeros((SCREEN_H, SCREEN_W, 3), dtype=np.uint8)
        self._screen_fresh = False
        self._frames_since_progress = 0

    # -- mode handling ---------------------------------------------------

    @property
    def players(self):
        return self.game.modes[self.mode].players

    def available_modes(self, num_players=None):
        modes = self.game.modes
        if num_players is None:
            return sorted(modes)
        return sorted(m for m, info in modes.items()
                      if info.players == num_players)

    def set_mode(self, mode):
        if mode not in self.game.modes:
            raise InvalidModeError(self.game.name, mode, self.game.modes)
        self.mode = mode
        self.state = None

    def minimal_action_set(self):
        acts = sorted(set(self.game.minimal_actions(self.mode)) | {A.NOOP})
        return acts

    # -- episode lifecycle -------------------------------------------------

    def reset(self, seed):
        info = self.game.modes[self.mode]
        if not info.playable:
            raise UnplayableModeError(self.game.name, self.mode)
        self.rng = random.Random(seed)
        self.state = self.game.init_state(self.mode, self.rng)
        self.frame = 0
        self._terminal = False
        self._cause = ""
        self._frames_since_progress = 0
        self._screen_fresh = False

    def _require_reset(self):
        if self.state is None:
            raise NotResetError(f"reset() not called on {self.game.name!r}")

    def act(self, actions):
        self._require_reset()
        if self._terminal:
            raise TerminalStateError("act() after episode end")
        if len(actions) != self.players:
            raise WrongArityError(self.players, len(actions))
        for a in actions:
            if not A.is_valid(a):
                raise ValueError(f"invalid action id {a!r}")
        rewards, events = self.game.step(self.state, actions, self.rng)
        self.frame += 1
        self._screen_fresh = False
        terminal = self.game.is_terminal(self.state)
        if terminal:
            self._cause = self.game.terminal_cause(self.state)
        if self.game.stall_enabled and self.stall.enabled and not terminal:
            if "progress" in events:
                self._frames_since_progress = 0
            else:
                self._frames_since_progress += 1
                if self._frames_since_progress >= self.stall.threshold_frames:
                    blame = self.game.stall_blame(self.state)
                    rewards = list(rewards)
                    rewards[blame] += self.stall.forfeit_reward
                    rewards[1 - blame] -= self.stall.forfeit_reward
                    terminal = True
                    self._cause = "stall"
        self._terminal = terminal
        return list(rewards)

    def all_lives(self):
        self._require_reset()
        return list(self.game.lives(self.state))

    def game_over(self):
        self._require_reset()
        return self._terminal

    def terminal_cause(self):
        return self._cause

    def screen_rgb(self):
        self._require_reset()
        if not self._screen_fresh:
            self.game.render(self.state, self._screen)
            self._screen_fresh = True
        return self._screen.copy()


def load_game(name, stall=None):
    """Open a handle on a built-in game, default mode selected."""
    game = REGISTRY.get(name)
    if game is None:
        raise UnknownGameError(name, REGISTRY)
    return GameHandle(game, stall=stall)
