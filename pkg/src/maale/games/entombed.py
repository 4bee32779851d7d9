"""Entombed: two players descend an endlessly scrolling maze.

The maze scrolls upward one cell row every 40 frames; a player pushed off
the top edge is crushed and loses a life.  Power-ups grant make-break
charges that a FIRE+direction action spends to toggle an adjacent wall.
Mode 2 scores competitively (a death pays the opponent), mode 3
cooperatively (both players score on section passes and stage restarts).
"""

import numpy as np

from .. import actions as A
from .base import Game, ModeInfo, fill_rect

COLS = 16
VIS_ROWS = 18
CELL_W = 10
CELL_H = 9
OFF_Y = 35
SCROLL_PERIOD = 40
MOVE_COOLDOWN = 4
ROWS_PER_SECTION = 30
SECTIONS_PER_STAGE = 5
WALL_PROB = 0.45
POWERUP_PROB = 0.08
START_LIVES = 2

BG = (12, 10, 28)
WALL_COLOR = (170, 120, 70)
POWER_COLOR = (120, 220, 220)
PLAYER_COLORS = ((92, 186, 92), (214, 92, 92))


class _State:
    __slots__ = (
        "mode", "frame", "terminal", "cause", "walls", "powers",
        "channel", "players", "cooldown", "charges", "lives",
        "rows_scrolled", "sections_passed", "scroll_timer", "start_channel",
    )


class Entombed(Game):
    name = "entombed"
    group = "competitive-racing"
    game_theory = "competitive"
    default_mode = 2

    modes = {
        2: ModeInfo(2, "competitive", True, "competitive"),
        3: ModeInfo(2, "cooperative", True, "cooperative"),
    }

    def minimal_actions(self, mode):
        return [A.NOOP, A.FIRE, A.UP, A.RIGHT, A.LEFT, A.DOWN,
                A.UPFIRE, A.RIGHTFIRE, A.LEFTFIRE, A.DOWNFIRE]

    def _gen_row(self, s, rng):
        """Append one maze row, keeping the guaranteed channel open."""
        c = s.channel
        c2 = min(COLS - 1, max(0, c + rng.randint(-1, 1)))
        walls = [1 if rng.random() < WALL_PROB else 0 for _ in range(COLS)]
        for col in range(min(c, c2), max(c, c2) + 1):
            walls[col] = 0
        walls[c] = 0
        powers = [0] * COLS
        if rng.random() < POWERUP_PROB:
            open_cols = [i for i in range(COLS) if not walls[i]]
            powers[rng.choice(open_cols)] = 1
        s.channel = c2
        s.walls.append(walls)
        s.powers.append(powers)

    def init_state(self, mode, rng):
        s = _State()
        s.mode = self.modes[mode].flags
        s.frame = 0
        s.terminal = False
        s.cause = ""
        s.walls = []
        s.powers = []
        s.channel = COLS // 2
        s.start_channel = []
        for _ in range(VIS_ROWS):
            self._gen_row(s, rng)
            s.start_channel.append(s.channel)
        start_col = s.start_channel[6]
        s.walls[6][start_col] = 0
        s.players = [[6, start_col], [6, start_col]]
        s.cooldown = [0, 0]
        s.charges = [0, 0]
        s.lives = [START_LIVES, START_LIVES]
        s.rows_scrolled = 0
        s.sections_passed = 0
        s.scroll_timer = 0
        return s

    def _respawn(self, s, i, rng):
        row = 4
        cols = [c for c in range(COLS) if not s.walls[row][c]]
        col = cols[len(cols) // 2] if cols else COLS // 2
        s.walls[row][col] = 0
        s.players[i] = [row, col]
        s.cooldown[i] = 0

    def step(self, state, acts, rng):
        s = state
        s.frame += 1
        coop = s.mode == "cooperative"
        rewards = [0, 0]
        for i, a in enumerate(acts):
            if s.cooldown[i] > 0:
                s.cooldown[i] -= 1
                continue
            dx, dy = A.direction(a)
            if dx == 0 and dy == 0:
                continue
            r, c = s.players[i]
            nr, nc = r + dy, c + dx
            if not (0 <= nr < VIS_ROWS and 0 <= nc < COLS):
                continue
            if A.has_fire(a):
                if s.charges[i] > 0:
                    s.walls[nr][nc] ^= 1
                    s.charges[i] -= 1
                    s.cooldown[i] = MOVE_COOLDOWN
                continue
            if s.walls[nr][nc]:
                continue
            s.players[i] = [nr, nc]
            s.cooldown[i] = MOVE_COOLDOWN
            if s.powers[nr][nc]:
                s.powers[nr][nc] = 0
                s.charges[i] += 1
        # scroll
        s.scroll_timer += 1
        deaths = []
        if s.scroll_timer >= SCROLL_PERIOD:
            s.scroll_timer = 0
            s.walls.pop(0)
            s.powers.pop(0)
            self._gen_row(s, rng)
            s.rows_scrolled += 1
            for i in range(2):
                s.players[i][0] -= 1
                if s.players[i][0] < 0:
                    deaths.append(i)
            if s.rows_scrolled % ROWS_PER_SECTION == 0:
                s.sections_passed += 1
                if coop:
                    rewards[0] += 1
                    rewards[1] += 1
        for i in deaths:
            if s.lives[i] == 0:
                s.terminal = True
                s.cause = "lives"
                if not coop:
                    rewards[i] -= 1
                    rewards[1 - i] += 1
            else:
                s.lives[i] -= 1
                self._respawn(s, i, rng)
                if coop:
                    # stage restart after a death still pays both players
                    rewards[0] += 1
                    rewards[1] += 1
                else:
                    rewards[i] -= 1
                    rewards[1 - i] += 1
        return rewards, []

    def lives(self, state):
        return list(state.lives)

    def stage(self, state):
        return state.sections_passed // SECTIONS_PER_STAGE

    def render(self, state, screen):
        screen[:] = BG
        grid = np.zeros((VIS_ROWS, COLS), dtype=np.uint8)
        for r in range(VIS_ROWS):
            row = state.walls[r]
            for c in range(COLS):
                if row[c]:
                    grid[r, c] = 1
        px = np.repeat(np.repeat(grid, CELL_H, axis=0), CELL_W, axis=1)
        region = screen[OFF_Y:OFF_Y + VIS_ROWS * CELL_H, :COLS * CELL_W]
        region[px == 1] = WALL_COLOR
        for r in range(VIS_ROWS):
            prow = state.powers[r]
            for c in range(COLS):
                if prow[c]:
                    fill_rect(screen, c * CELL_W + 3, OFF_Y + r * CELL_H + 2,
                              4, 4, POWER_COLOR)
        for i in range(2):
            r, c = state.players[i]
            fill_rect(screen, c * CELL_W + 1 + i * 2, OFF_Y + r * CELL_H + 1,
                      6, 7, PLAYER_COLORS[i])
        # HUD: lives and charges
        for i in range(2):
            for j in range(state.lives[i]):
                x = 8 + j * 6 if i == 0 else 140 - j * 6
                fill_rect(screen, x, 8, 4, 4, PLAYER_COLORS[i])
            for j in range(min(8, state.charges[i])):
                x = 8 + j * 6 if i == 0 else 140 - j * 6
                fill_rect(screen, x, 18, 4, 4, POWER_COLOR)
