"""Warlords: four corner fortresses, one ball, last player standing wins.

Each corner holds a warlord block behind an L-shaped brick shield and a
paddle sliding along the corner arc.  Bricks absorb one hit each; a ball
reaching the warlord eliminates that player (-1), and the sole survivor
collects +1 when the episode ends.
"""

import math

from .. import actions as A
from .base import Game, ModeInfo, fill_rect

AX0, AX1 = 8, 152
AY0, AY1 = 30, 202
BALL_SPEED0 = 2.0
BALL_SPEED_MAX = 4.0
PADDLE_SPEED = 0.02
ARC = 45.0
SUDDEN_DEATH_FRAME = 15_000

# corner anchor and inward direction per seat
CORNERS = (
    (AX0, AY0, 1, 1),    # top-left
    (AX1, AY0, -1, 1),   # top-right
    (AX0, AY1, 1, -1),   # bottom-left
    (AX1, AY1, -1, -1),  # bottom-right
)

BG = (0, 0, 0)
WALL = (142, 142, 142)
BALL_COLOR = (236, 236, 236)
PLAYER_COLORS = (
    (92, 186, 92), (214, 92, 92), (92, 128, 214), (214, 198, 92),
)


def _warlord_rect(seat):
    px, py, dx, dy = CORNERS[seat]
    x = px if dx > 0 else px - 12
    y = py if dy > 0 else py - 12
    return (x, y, 12, 12)


def _shield_bricks(seat):
    px, py, dx, dy = CORNERS[seat]
    bricks = []
    # vertical strip guarding the inward x side
    x0 = px + 32 if dx > 0 else px - 37
    for k in range(5):
        y = py + dy * k * 9
        y0 = y if dy > 0 else y - 9
        bricks.append([x0, y0, 5, 9])
    # horizontal strip guarding the inward y side
    y0 = py + 32 if dy > 0 else py - 37
    for k in range(4):
        x = px + dx * k * 8
        xx = x if dx > 0 else x - 8
        bricks.append([xx, y0, 8, 5])
    return bricks


class _State:
    __slots__ = (
        "frame", "terminal", "cause", "alive", "bricks", "paddle_t",
        "ball_x", "ball_y", "vx", "vy",
    )


class Warlords(Game):
    name = "warlords"
    group = "four-player-FFA"
    game_theory = "competitive"
    default_mode = 1

    modes = {1: ModeInfo(4, None, True)}

    def minimal_actions(self, mode):
        return [A.NOOP, A.UP, A.RIGHT, A.LEFT, A.DOWN]

    def init_state(self, mode, rng):
        s = _State()
        s.frame = 0
        s.terminal = False
        s.cause = ""
        s.alive = [True] * 4
        s.bricks = [_shield_bricks(i) for i in range(4)]
        s.paddle_t = [0.5] * 4
        s.ball_x = (AX0 + AX1) / 2.0
        s.ball_y = (AY0 + AY1) / 2.0
        ang = rng.uniform(0, 2 * math.pi)
        s.vx = BALL_SPEED0 * math.cos(ang)
        s.vy = BALL_SPEED0 * math.sin(ang)
        return s

    @staticmethod
    def _paddle_rect(s, seat):
        px, py, dx, dy = CORNERS[seat]
        t = s.paddle_t[seat]
        if t < 0.5:
            # vertical leg of the arc
            x = px + dx * ARC
            y = py + dy * (t * 2 * ARC)
            x0 = x if dx > 0 else x - 4
            y0 = y if dy > 0 else y - 12
            return (x0, y0, 4, 12)
        x = px + dx * ((1 - t) * 2 * ARC)
        y = py + dy * ARC
        x0 = x if dx > 0 else x - 12
        y0 = y if dy > 0 else y - 4
        return (x0, y0, 12, 4)

    @staticmethod
    def _hit_rect(x, y, rect):
        rx, ry, rw, rh = rect
        return rx - 1 <= x <= rx + rw + 1 and ry - 1 <= y <= ry + rh + 1

    def step(self, state, acts, rng):
        s = state
        s.frame += 1
        rewards = [0, 0, 0, 0]
        for i, a in enumerate(acts):
            if not s.alive[i]:
                continue
            dx, dy = A.direction(a)
            d = 0
            if dy < 0 or dx < 0:
                d = -1
            elif dy > 0 or dx > 0:
                d = 1
            if d:
                s.paddle_t[i] = min(1.0, max(0.0, s.paddle_t[i] + d * PADDLE_SPEED))
        if s.frame == SUDDEN_DEATH_FRAME:
            s.bricks = [[] for _ in range(4)]
        s.ball_x += s.vx
        s.ball_y += s.vy
        if s.ball_x <= AX0 + 1:
            s.ball_x = AX0 + 1
            s.vx = abs(s.vx)
        elif s.ball_x >= AX1 - 1:
            s.ball_x = AX1 - 1
            s.vx = -abs(s.vx)
        if s.ball_y <= AY0 + 1:
            s.ball_y = AY0 + 1
            s.vy = abs(s.vy)
        elif s.ball_y >= AY1 - 1:
            s.ball_y = AY1 - 1
            s.vy = -abs(s.vy)
        for i in range(4):
            if not s.alive[i]:
                continue
            # paddle deflects radially away from the corner, with jitter
            if self._hit_rect(s.ball_x, s.ball_y, self._paddle_rect(s, i)):
                px, py, _, _ = CORNERS[i]
                ang = math.atan2(s.ball_y - py, s.ball_x - px)
                ang += rng.uniform(-0.25, 0.25)
                speed = min(BALL_SPEED_MAX,
                            (s.vx * s.vx + s.vy * s.vy) ** 0.5 + 0.2)
                s.vx = speed * math.cos(ang)
                s.vy = speed * math.sin(ang)
                s.ball_x += s.vx
                s.ball_y += s.vy
                continue
            hit_brick = None
            for b in s.bricks[i]:
                if self._hit_rect(s.ball_x, s.ball_y, b):
                    hit_brick = b
                    break
            if hit_brick is not None:
                s.bricks[i].remove(hit_brick)
                bx, by, bw, bh = hit_brick
                # reflect off the brick's longer exposure axis
                ddx = min(abs(s.ball_x - bx), abs(bx + bw - s.ball_x))
                ddy = min(abs(s.ball_y - by), abs(by + bh - s.ball_y))
                if ddx < ddy:
                    s.vx = -s.vx
                else:
                    s.vy = -s.vy
                continue
            if self._hit_rect(s.ball_x, s.ball_y, _warlord_rect(i)):
                s.alive[i] = False
                rewards[i] -= 1
                s.bricks[i] = []
                px, py, dx, dy = CORNERS[i]
                s.vx = abs(s.vx) * dx
                s.vy = abs(s.vy) * dy
                survivors = [j for j in range(4) if s.alive[j]]
                if len(survivors) == 1:
                    rewards[survivors[0]] += 1
                    s.terminal = True
                    s.cause = "score-limit"
                    break
        return rewards, []

    def lives(self, state):
        # 1 while the warlord stands, 0 once eliminated; elimination has no
        # lower value to fall to under the 0-is-alive convention
        return [1 if a else 0 for a in state.alive]

    def render(self, state, screen):
        s = state
        screen[:] = BG
        fill_rect(screen, AX0 - 4, AY0 - 4, AX1 - AX0 + 8, 4, WALL)
        fill_rect(screen, AX0 - 4, AY1, AX1 - AX0 + 8, 4, WALL)
        fill_rect(screen, AX0 - 4, AY0, 4, AY1 - AY0, WALL)
        fill_rect(screen, AX1, AY0, 4, AY1 - AY0, WALL)
        for i in range(4):
            if not s.alive[i]:
                continue
            color = PLAYER_COLORS[i]
            dim = tuple(c * 2 // 3 for c in color)
            for b in s.bricks[i]:
                fill_rect(screen, b[0], b[1], b[2], b[3], dim)
            wx, wy, ww, wh = _warlord_rect(i)
            fill_rect(screen, wx, wy, ww, wh, color)
            px0, py0, pw, ph = self._paddle_rect(s, i)
            fill_rect(screen, px0, py0, pw, ph, color)
        fill_rect(screen, s.ball_x - 1, s.ball_y - 1, 3, 3, BALL_COLOR)
