"""Combat: two-player tank and plane duels.

Tank modes support maze obstacles, billiards (ricochet-only) shells, and
invisible tanks; plane modes trade speed control for constant forward
motion with optional jets and guided missiles.  A hit scores +1/-1 and
resets the round; the match runs a fixed number of frames.
"""

import math

from .. import actions as A
from ..modes import COMBAT_TANK_MODES, COMBAT_PLANE_MODES, decode_combat_mode
from .base import Game, ModeInfo, fill_rect, SCREEN_W

AX0, AX1 = 8, 152
AY0, AY1 = 30, 200
MATCH_FRAMES = 3600
TANK_SPEED = 1.0
BIPLANE_SPEED = 1.5
JET_SPEED = 2.0
SHELL_SPEED = 3.0
TURN_COOLDOWN = 4
HIT_RADIUS = 6.0

HEADINGS = tuple(
    (math.cos(i * math.pi / 8), -math.sin(i * math.pi / 8)) for i in range(16)
)

BG_TANK = (48, 72, 40)
BG_PLANE = (40, 56, 96)
WALL = (130, 130, 130)
OBSTACLE = (160, 150, 120)
SHELL = (240, 240, 240)
TANK_COLORS = ((200, 72, 72), (90, 140, 220))

SPAWNS = ((30.0, 115.0, 0), (130.0, 115.0, 8))


class _Shell:
    __slots__ = ("x", "y", "dx", "dy", "age", "bounces", "active")

    def __init__(self):
        self.active = False


class _State:
    __slots__ = (
        "flags", "frame", "terminal", "cause", "scores",
        "x", "y", "heading", "turn_cd", "visible_timer",
        "shells", "obstacles", "bumped",
    )


class Combat(Game):
    name = "combat"
    group = "1v1-tournament"
    game_theory = "competitive"
    default_mode = 1

    modes = {m: ModeInfo(2, decode_combat_mode(m), True, "tank")
             for m in COMBAT_TANK_MODES}
    modes.update({m: ModeInfo(2, decode_combat_mode(m), True, "plane")
                  for m in COMBAT_PLANE_MODES})

    def minimal_actions(self, mode):
        if self.modes[mode].flags.style == "tank":
            return [A.NOOP, A.FIRE, A.UP, A.RIGHT, A.LEFT, A.DOWN]
        return [A.NOOP, A.FIRE, A.RIGHT, A.LEFT]

    def init_state(self, mode, rng):
        s = _State()
        s.flags = self.modes[mode].flags
        s.frame = 0
        s.terminal = False
        s.cause = ""
        s.scores = [0, 0]
        s.x = [SPAWNS[0][0], SPAWNS[1][0]]
        s.y = [SPAWNS[0][1], SPAWNS[1][1]]
        s.heading = [SPAWNS[0][2], SPAWNS[1][2]]
        s.turn_cd = [0, 0]
        s.visible_timer = [0, 0]
        s.bumped = [False, False]
        s.shells = [_Shell(), _Shell()]
        s.obstacles = []
        if s.flags.style == "tank" and s.flags.maze:
            for _ in range(6):
                ox = rng.uniform(45, 100)
                oy = rng.uniform(55, 155)
                s.obstacles.append((ox, oy, 14.0, 14.0))
        return s

    @staticmethod
    def _in_obstacle(s, x, y, pad=4.0):
        for ox, oy, ow, oh in s.obstacles:
            if ox - pad <= x <= ox + ow + pad and oy - pad <= y <= oy + oh + pad:
                return True
        return False

    def _round_reset(self, s):
        for i in range(2):
            s.x[i], s.y[i], s.heading[i] = SPAWNS[i]
            s.shells[i].active = False
            s.visible_timer[i] = 0

    def step(self, state, acts, rng):
        s = state
        s.frame += 1
        rewards = [0, 0]
        tank = s.flags.style == "tank"
        speed = TANK_SPEED if tank else (JET_SPEED if s.flags.jet else BIPLANE_SPEED)
        for i, a in enumerate(acts):
            s.bumped[i] = False
            if s.turn_cd[i] > 0:
                s.turn_cd[i] -= 1
            dx, dy = A.direction(a)
            if dx and s.turn_cd[i] == 0:
                # LEFT turns counter-clockwise, RIGHT clockwise
                s.heading[i] = (s.heading[i] + (1 if dx < 0 else -1)) % 16
                s.turn_cd[i] = TURN_COOLDOWN
            hx, hy = HEADINGS[s.heading[i]]
            if tank:
                move = 0.0
                if dy < 0:
                    move = speed
                elif dy > 0:
                    move = -0.5 * speed
                nx, ny = s.x[i] + hx * move, s.y[i] + hy * move
            else:
                nx, ny = s.x[i] + hx * speed, s.y[i] + hy * speed
                # planes wrap around the arena
                nx = AX0 + (nx - AX0) % (AX1 - AX0)
                ny = AY0 + (ny - AY0) % (AY1 - AY0)
            if tank:
                blocked = not (AX0 + 4 <= nx <= AX1 - 4 and AY0 + 4 <= ny <= AY1 - 4)
                if not blocked and self._in_obstacle(s, nx, ny):
                    blocked = True
                if blocked:
                    s.bumped[i] = True
                    s.visible_timer[i] = 2
                else:
                    s.x[i], s.y[i] = nx, ny
            else:
                s.x[i], s.y[i] = nx, ny
            if A.has_fire(a) and not s.shells[i].active:
                sh = s.shells[i]
                sh.active = True
                sh.x, sh.y = s.x[i] + hx * 5, s.y[i] + hy * 5
                sh.dx, sh.dy = hx, hy
                sh.age = 0
                sh.bounces = 0
                s.visible_timer[i] = 2
            elif s.visible_timer[i] > 0 and not s.bumped[i]:
                s.visible_timer[i] -= 1
        hit = self._move_shells(s, rewards)
        if hit:
            self._round_reset(s)
        if s.frame >= MATCH_FRAMES:
            s.terminal = True
            s.cause = "time"
        return rewards, []

    def _move_shells(self, s, rewards):
        tank = s.flags.style == "tank"
        billiards = tank and s.flags.billiards
        guided = (tank and not billiards) or (not tank and s.flags.guided)
        speed = SHELL_SPEED if tank else SHELL_SPEED + 1.0
        hit = False
        for i in range(2):
            sh = s.shells[i]
            if not sh.active:
                continue
            sh.age += 1
            if guided:
                sh.dx, sh.dy = HEADINGS[s.heading[i]]
            sh.x += sh.dx * speed
            sh.y += sh.dy * speed
            if billiards:
                bounced = False
                if sh.x < AX0 or sh.x > AX1:
                    sh.dx = -sh.dx
                    sh.x = max(AX0, min(AX1, sh.x))
                    bounced = True
                if sh.y < AY0 or sh.y > AY1:
                    sh.dy = -sh.dy
                    sh.y = max(AY0, min(AY1, sh.y))
                    bounced = True
                if not bounced:
                    for ox, oy, ow, oh in s.obstacles:
                        if ox <= sh.x <= ox + ow and oy <= sh.y <= oy + oh:
                            # reflect on the nearer axis of the block
                            if min(sh.x - ox, ox + ow - sh.x) < min(sh.y - oy, oy + oh - sh.y):
                                sh.dx = -sh.dx
                            else:
                                sh.dy = -sh.dy
                            bounced = True
                            break
                if bounced:
                    sh.bounces += 1
                    if sh.bounces > 3:
                        sh.active = False
                        continue
            else:
                if not (AX0 <= sh.x <= AX1 and AY0 <= sh.y <= AY1):
                    sh.active = False
                    continue
                if tank and self._in_obstacle(s, sh.x, sh.y, pad=0.0):
                    sh.active = False
                    continue
            if sh.age > 240:
                sh.active = False
                continue
            j = 1 - i
            lethal = sh.bounces >= 1 if billiards else True
            if lethal and (sh.x - s.x[j]) ** 2 + (sh.y - s.y[j]) ** 2 <= HIT_RADIUS ** 2:
                rewards[i] += 1
                rewards[j] -= 1
                s.scores[i] += 1
                sh.active = False
                hit = True
        return hit

    def lives(self, state):
        return [0, 0]

    def render(self, state, screen):
        s = state
        tank = s.flags.style == "tank"
        screen[:] = BG_TANK if tank else BG_PLANE
        fill_rect(screen, AX0 - 4, AY0 - 4, AX1 - AX0 + 8, 4, WALL)
        fill_rect(screen, AX0 - 4, AY1, AX1 - AX0 + 8, 4, WALL)
        fill_rect(screen, AX0 - 4, AY0, 4, AY1 - AY0, WALL)
        fill_rect(screen, AX1, AY0, 4, AY1 - AY0, WALL)
        for ox, oy, ow, oh in s.obstacles:
            fill_rect(screen, ox, oy, ow, oh, OBSTACLE)
        invisible = tank and s.flags.invisible
        for i in range(2):
            if invisible and s.visible_timer[i] == 0 and not s.shells[i].active:
                continue
            hx, hy = HEADINGS[s.heading[i]]
            fill_rect(screen, s.x[i] - 3, s.y[i] - 3, 7, 7, TANK_COLORS[i])
            fill_rect(screen, s.x[i] + hx * 5 - 1, s.y[i] + hy * 5 - 1, 2, 2,
                      TANK_COLORS[i])
        for i in range(2):
            sh = s.shells[i]
            if sh.active:
                fill_rect(screen, sh.x - 1, sh.y - 1, 2, 2, SHELL)
        for t in range(2):
            for j in range(min(20, s.scores[t])):
                x = 8 + j * 5 if t == 0 else SCREEN_W - 12 - j * 5
                fill_rect(screen, x, 8, 3, 3, TANK_COLORS[t])

    @staticmethod
    def tank_pixel_boxes(state):
        """Bounding boxes covering each tank sprite, for render analysis."""
        boxes = []
        for i in range(2):
            boxes.append((state.x[i] - 7, state.y[i] - 7, 14, 14))
        return boxes
