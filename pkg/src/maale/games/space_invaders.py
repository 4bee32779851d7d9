"""Two-player Space Invaders with the five option bits of modes 33..64.

Both cannons fight one alien wave; shooting an alien pays the shooter,
and an alien bomb destroying the other cannon pays the survivor.  The
players share a pool of three lives; the episode ends when the pool is
exhausted or the wave reaches the cannons.
"""

import numpy as np

from .. import actions as A
from ..modes import decode_space_invaders_mode, SPACE_INVADERS_BASE
from .base import Game, ModeInfo, fill_rect

GRID = 6
ALIEN_W, ALIEN_H = 8, 8
PITCH_X, PITCH_Y = 14, 12
GRID_X0, GRID_Y0 = 30, 55
EDGE_L, EDGE_R = 10, 150
DROP = 6
PLAYER_Y = 196
CANNON_W = 8
SHIELD_Y = 170
SHIELD_W, SHIELD_H = 18, 10
SHOT_SPEED = 4
BOMB_PERIOD = 8
BOMB_PROB = 0.35
TURN_PERIOD = 120
POOL_LIVES = 3
KILL_REWARD = 10
SURVIVOR_REWARD = 20

BG = (0, 0, 0)
ALIEN_COLOR = (120, 220, 120)
SHIELD_COLOR = (200, 120, 60)
BOMB_COLOR = (230, 230, 90)
SHOT_COLOR = (240, 240, 240)
PLAYER_COLORS = ((92, 186, 92), (110, 160, 240))
FLOOR = (142, 142, 142)


class _State:
    __slots__ = (
        "flags", "frame", "terminal", "cause", "alive", "gx", "gy", "gdir",
        "players_x", "shots", "bombs", "shields", "shield_off", "shield_vel",
        "deaths", "scores", "turn", "turn_timer", "wave",
    )


class SpaceInvaders(Game):
    name = "space_invaders"
    group = "mixed-sum-survival"
    game_theory = "mixed"
    default_mode = SPACE_INVADERS_BASE

    modes = {m: ModeInfo(2, decode_space_invaders_mode(m), True)
             for m in range(SPACE_INVADERS_BASE, SPACE_INVADERS_BASE + 32)}

    def minimal_actions(self, mode):
        return [A.NOOP, A.FIRE, A.RIGHT, A.LEFT, A.RIGHTFIRE, A.LEFTFIRE]

    def init_state(self, mode, rng):
        s = _State()
        s.flags = self.modes[mode].flags
        s.frame = 0
        s.terminal = False
        s.cause = ""
        s.alive = [[True] * GRID for _ in range(GRID)]
        s.gx, s.gy = float(GRID_X0), float(GRID_Y0)
        s.gdir = 1
        s.players_x = [50.0, 110.0]
        s.shots = [None, None]
        s.bombs = []
        s.shields = [np.ones((SHIELD_H, SHIELD_W), dtype=bool)
                     for _ in range(3)]
        s.shield_off = 0.0
        s.shield_vel = 0.25
        s.deaths = [0, 0]
        s.scores = [0, 0]
        s.turn = 0
        s.turn_timer = 0
        s.wave = 0
        return s

    @staticmethod
    def _shield_x(s, i):
        return 22 + i * 49 + (s.shield_off if s.flags.moving_shields else 0.0)

    def _fire_allowed(self, s, i):
        if not s.flags.alternating_turns:
            return True
        return s.turn == i

    def step(self, state, acts, rng):
        s = state
        s.frame += 1
        rewards = [0, 0]
        # cannons
        for i, a in enumerate(acts):
            dx = A.direction(a)[0]
            if dx:
                s.players_x[i] = min(EDGE_R - CANNON_W, max(EDGE_L,
                                     s.players_x[i] + dx))
            if A.has_fire(a) and s.shots[i] is None and self._fire_allowed(s, i):
                s.shots[i] = [s.players_x[i] + CANNON_W / 2, PLAYER_Y - 2.0]
                if s.flags.alternating_turns:
                    s.turn = 1 - s.turn
                    s.turn_timer = 0
        if s.flags.alternating_turns:
            s.turn_timer += 1
            if s.turn_timer >= TURN_PERIOD:
                s.turn = 1 - s.turn
                s.turn_timer = 0
        # alien block
        if s.frame % 2 == 0:
            cols = [c for c in range(GRID)
                    if any(s.alive[r][c] for r in range(GRID))]
            if cols:
                left = s.gx + cols[0] * PITCH_X
                right = s.gx + cols[-1] * PITCH_X + ALIEN_W
                if (s.gdir > 0 and right + 1 > EDGE_R) or \
                        (s.gdir < 0 and left - 1 < EDGE_L):
                    s.gdir = -s.gdir
                    s.gy += DROP
                else:
                    s.gx += s.gdir
        # moving shields oscillate
        if s.flags.moving_shields:
            s.shield_off += s.shield_vel
            if abs(s.shield_off) >= 8:
                s.shield_vel = -s.shield_vel
        # bombs spawn from bottom-most alien of a random column
        if s.frame % BOMB_PERIOD == 0 and rng.random() < BOMB_PROB:
            cols = [c for c in range(GRID)
                    if any(s.alive[r][c] for r in range(GRID))]
            if cols:
                c = cols[rng.randrange(len(cols))]
                r = max(r for r in range(GRID) if s.alive[r][c])
                s.bombs.append([s.gx + c * PITCH_X + ALIEN_W / 2,
                                s.gy + r * PITCH_Y + ALIEN_H])
        bomb_speed = 2.0 if s.flags.fast_bombs else 1.0
        hit_player = None
        keep = []
        for b in s.bombs:
            b[1] += bomb_speed
            if s.flags.zigzag_bombs:
                b[0] += rng.choice((-1, 1))
            if self._erode_shield(s, b[0], b[1]):
                continue
            dead = False
            for i in range(2):
                if abs(b[0] - (s.players_x[i] + CANNON_W / 2)) < 5 \
                        and b[1] >= PLAYER_Y - 2:
                    hit_player = i
                    dead = True
                    break
            if not dead and b[1] < 206:
                keep.append(b)
        s.bombs = keep
        # player shots
        for i in range(2):
            shot = s.shots[i]
            if shot is None:
                continue
            shot[1] -= SHOT_SPEED
            if shot[1] < 30:
                s.shots[i] = None
                continue
            if self._erode_shield(s, shot[0], shot[1]):
                s.shots[i] = None
                continue
            col = int((shot[0] - s.gx) // PITCH_X)
            row = int((shot[1] - s.gy) // PITCH_Y)
            if 0 <= col < GRID and 0 <= row < GRID and s.alive[row][col] \
                    and (shot[0] - s.gx) % PITCH_X < ALIEN_W \
                    and (shot[1] - s.gy) % PITCH_Y < ALIEN_H:
                s.alive[row][col] = False
                rewards[i] += KILL_REWARD
                s.scores[i] += KILL_REWARD
                s.shots[i] = None
        if hit_player is not None:
            s.deaths[hit_player] += 1
            rewards[1 - hit_player] += SURVIVOR_REWARD
            s.scores[1 - hit_player] += SURVIVOR_REWARD
            s.bombs = []
            s.shots = [None, None]
            s.players_x = [50.0, 110.0]
            if s.deaths[0] + s.deaths[1] >= POOL_LIVES:
                s.terminal = True
                s.cause = "lives"
        # wave cleared -> fresh wave
        if not any(any(row) for row in s.alive):
            s.alive = [[True] * GRID for _ in range(GRID)]
            s.gx, s.gy = float(GRID_X0), float(GRID_Y0)
            s.gdir = 1
            s.wave += 1
        # invasion ends the episode
        low = max((r for r in range(GRID)
                   if any(s.alive[r])), default=-1)
        if low >= 0 and s.gy + low * PITCH_Y + ALIEN_H >= PLAYER_Y - 4:
            s.terminal = True
            s.cause = "lives"
        return rewards, []

    def _erode_shield(self, s, x, y):
        if not (SHIELD_Y <= y < SHIELD_Y + SHIELD_H):
            return False
        for i in range(3):
            sx = self._shield_x(s, i)
            if sx <= x < sx + SHIELD_W:
                mx = int(x - sx)
                my = int(y - SHIELD_Y)
                if s.shields[i][my, mx]:
                    y0, y1 = max(0, my - 1), min(SHIELD_H, my + 2)
                    x0, x1 = max(0, mx - 1), min(SHIELD_W, mx + 2)
                    s.shields[i][y0:y1, x0:x1] = False
                    return True
        return False

    def lives(self, state):
        """Pool of 3 split as guaranteed per-player lives, 0 = last life."""
        remaining = POOL_LIVES - state.deaths[0] - state.deaths[1]
        spare = max(0, remaining - 1)
        base = spare // 2
        out = [base, base]
        if spare % 2:
            if state.deaths[0] <= state.deaths[1]:
                out[0] += 1
            else:
                out[1] += 1
        return out

    def render(self, state, screen):
        s = state
        screen[:] = BG
        fill_rect(screen, 0, 204, 160, 6, FLOOR)
        if not s.flags.invisible_invaders:
            for r in range(GRID):
                for c in range(GRID):
                    if s.alive[r][c]:
                        fill_rect(screen, s.gx + c * PITCH_X,
                                  s.gy + r * PITCH_Y, ALIEN_W, ALIEN_H,
                                  ALIEN_COLOR)
        for i in range(3):
            sx = int(self._shield_x(s, i))
            mask = s.shields[i]
            region = screen[SHIELD_Y:SHIELD_Y + SHIELD_H, sx:sx + SHIELD_W]
            if region.shape[:2] == mask.shape:
                region[mask] = SHIELD_COLOR
        for i in range(2):
            fill_rect(screen, s.players_x[i], PLAYER_Y, CANNON_W, 6,
                      PLAYER_COLORS[i])
            shot = s.shots[i]
            if shot is not None:
                fill_rect(screen, shot[0], shot[1], 1, 4, SHOT_COLOR)
        for b in s.bombs:
            fill_rect(screen, b[0], b[1], 2, 3, BOMB_COLOR)
        lives = self.lives(s)
        for i in range(2):
            for j in range(lives[i]):
                x = 8 + j * 6 if i == 0 else 146 - j * 6
                fill_rect(screen, x, 8, 4, 4, PLAYER_COLORS[i])
