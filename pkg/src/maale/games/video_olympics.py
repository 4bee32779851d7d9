"""Video Olympics family: classic pong (2p/4p), quadrapong, volleyball.

Foozpong and basketball are registered in the mode table for catalog
completeness but their dynamics are not implemented; selecting them fails
at reset.  Scoring is tracked by team, every teammate receiving the same
+-1 on each point.
"""

from .. import actions as A
from .base import Game, ModeInfo, fill_rect, SCREEN_W, SCREEN_H

TOP, BOT = 20, 200          # pong play band
PADDLE_H = 16
PADDLE_W = 3
PADDLE_SPEED = 2.0
BALL_SPEED0 = 2.0
BALL_SPEED_MAX = 4.0
SCORE_LIMIT = 10
FRAME_LIMIT = 10_000

# quadrapong square arena
QX0, QX1 = 20, 140
QY0, QY1 = 45, 165

# volleyball court
VX0, VX1 = 8, 152
V_FLOOR = 190
V_NET_X = 80
V_NET_TOP = 150

PLAYER_COLORS = (
    (92, 186, 92),    # green
    (214, 92, 92),    # red
    (92, 128, 214),   # blue
    (214, 198, 92),   # yellow
)
BG = (0, 0, 0)
WALL = (142, 142, 142)
BALL_COLOR = (236, 236, 236)


class _State:
    __slots__ = (
        "variant", "players", "frame", "terminal", "cause",
        "paddles", "scores", "ball_x", "ball_y", "vx", "vy",
        "player_vy", "player_h", "serve_side",
    )


class VideoOlympics(Game):
    name = "video_olympics"
    group = "1v1-tournament"
    game_theory = "competitive"
    default_mode = 4

    modes = {
        4: ModeInfo(2, "pong", True, "classic_pong"),
        6: ModeInfo(4, "pong", True, "classic_pong"),
        19: ModeInfo(2, "foozpong", False, "foozpong"),
        21: ModeInfo(4, "foozpong", False, "foozpong"),
        33: ModeInfo(4, "quadrapong", True, "quadrapong"),
        39: ModeInfo(2, "volleyball", True, "volleyball"),
        41: ModeInfo(4, "volleyball", True, "volleyball"),
        45: ModeInfo(2, "basketball", False, "basketball"),
        49: ModeInfo(4, "basketball", False, "basketball"),
    }

    def minimal_actions(self, mode):
        variant = self.modes[mode].flags
        if variant == "pong":
            return [A.NOOP, A.UP, A.DOWN]
        if variant == "quadrapong":
            return [A.NOOP, A.UP, A.RIGHT, A.LEFT, A.DOWN]
        return [A.NOOP, A.UP, A.RIGHT, A.LEFT]  # volleyball

    # seats 0,2 form the left team; 1,3 the right team
    @staticmethod
    def _team(seat):
        return seat % 2

    def init_state(self, mode, rng):
        info = self.modes[mode]
        s = _State()
        s.variant = info.flags
        s.players = info.players
        s.frame = 0
        s.terminal = False
        s.cause = ""
        s.scores = [0, 0]
        s.player_vy = [0.0] * info.players
        s.player_h = [0.0] * info.players
        if s.variant == "pong":
            mid = (TOP + BOT - PADDLE_H) / 2.0
            s.paddles = [mid] * info.players
        elif s.variant == "quadrapong":
            s.paddles = [
                (QY0 + QY1 - PADDLE_H) / 2.0, (QY0 + QY1 - PADDLE_H) / 2.0,
                (QX0 + QX1 - PADDLE_H) / 2.0, (QX0 + QX1 - PADDLE_H) / 2.0,
            ]
        else:  # volleyball: paddle value is the x of each player's left edge
            if info.players == 2:
                s.paddles = [38.0, 110.0]
            else:
                s.paddles = [28.0, 120.0, 52.0, 96.0]
        s.serve_side = rng.randrange(2)
        self._serve(s, rng)
        return s

    def _serve(self, s, rng):
        if s.variant == "volleyball":
            # drop the ball over the receiving side's court
            s.ball_x = 40.0 if s.serve_side == 0 else 120.0
            s.ball_y = 80.0
            s.vx = 0.0
            s.vy = 0.0
            return
        if s.variant == "quadrapong":
            s.ball_x = (QX0 + QX1) / 2.0
            s.ball_y = (QY0 + QY1) / 2.0
            ang = rng.uniform(0.35, 1.2)
            sx = 1.0 if rng.randrange(2) else -1.0
            sy = 1.0 if rng.randrange(2) else -1.0
            norm = (1 + ang * ang) ** 0.5
            s.vx = sx * BALL_SPEED0 / norm
            s.vy = sy * ang * BALL_SPEED0 / norm
            return
        s.ball_x = SCREEN_W / 2.0
        s.ball_y = (TOP + BOT) / 2.0
        slope = rng.uniform(-0.7, 0.7)
        norm = (1 + slope * slope) ** 0.5
        sx = -1.0 if s.serve_side == 0 else 1.0  # toward the receiver
        s.vx = sx * BALL_SPEED0 / norm
        s.vy = slope * BALL_SPEED0 / norm

    def _point(self, s, scoring_team, rng):
        s.scores[scoring_team] += 1
        rewards = [1 if self._team(i) == scoring_team else -1
                   for i in range(s.players)]
        if s.scores[scoring_team] >= SCORE_LIMIT:
            s.terminal = True
            s.cause = "score-limit"
        else:
            s.serve_side = 1 - scoring_team
            self._serve(s, rng)
        return rewards

    def step(self, state, acts, rng):
        state.frame += 1
        if state.variant == "pong":
            rewards = self._step_pong(state, acts, rng)
        elif state.variant == "quadrapong":
            rewards = self._step_quadrapong(state, acts, rng)
        else:
            rewards = self._step_volleyball(state, acts, rng)
        if not state.terminal and state.frame >= FRAME_LIMIT:
            state.terminal = True
            state.cause = "time"
        return rewards, []

    # -- classic pong ---------------------------------------------------

    @staticmethod
    def _pong_columns(players):
        """Front-face x per seat (ball-facing edge of each paddle)."""
        if players == 2:
            return {0: 11.0, 1: 149.0}
        return {0: 11.0, 2: 27.0, 1: 149.0, 3: 133.0}

    def _step_pong(self, s, acts, rng):
        for i, a in enumerate(acts):
            dy = A.direction(a)[1]
            if dy:
                s.paddles[i] = min(BOT - PADDLE_H,
                                   max(TOP, s.paddles[i] + dy * PADDLE_SPEED))
        px, py = s.ball_x, s.ball_y
        s.ball_x += s.vx
        s.ball_y += s.vy
        if s.ball_y <= TOP + 1:
            s.ball_y = TOP + 1
            s.vy = abs(s.vy)
        elif s.ball_y >= BOT - 1:
            s.ball_y = BOT - 1
            s.vy = -abs(s.vy)
        cols = self._pong_columns(s.players)
        for seat, face in cols.items():
            left_side = self._team(seat) == 0
            crossing = (
                (left_side and s.vx < 0 and px >= face and s.ball_x < face)
                or (not left_side and s.vx > 0 and px <= face and s.ball_x > face)
            )
            if not crossing:
                continue
            top = s.paddles[seat]
            if top - 1 <= s.ball_y <= top + PADDLE_H + 1:
                speed = min(BALL_SPEED_MAX, (s.vx * s.vx + s.vy * s.vy) ** 0.5 + 0.25)
                off = (s.ball_y - (top + PADDLE_H / 2)) / (PADDLE_H / 2)
                slope = max(-1.2, min(1.2, off * 1.1))
                norm = (1 + slope * slope) ** 0.5
                s.vx = (1.0 if left_side else -1.0) * speed / norm
                s.vy = slope * speed / norm
                s.ball_x = face + (1.0 if left_side else -1.0)
        if s.ball_x < 2:
            return self._point(s, 1, rng)
        if s.ball_x > SCREEN_W - 2:
            return self._point(s, 0, rng)
        return [0] * s.players

    # -- quadrapong -------------------------------------------------------

    def _step_quadrapong(self, s, acts, rng):
        for i, a in enumerate(acts):
            dx, dy = A.direction(a)
            if i < 2:  # vertical paddles on left/right walls
                if dy:
                    s.paddles[i] = min(QY1 - PADDLE_H,
                                       max(QY0, s.paddles[i] + dy * PADDLE_SPEED))
            else:      # horizontal paddles on top/bottom walls
                if dx:
                    s.paddles[i] = min(QX1 - PADDLE_H,
                                       max(QX0, s.paddles[i] + dx * PADDLE_SPEED))
        px, py = s.ball_x, s.ball_y
        s.ball_x += s.vx
        s.ball_y += s.vy
        faces = {0: QX0 + 5.0, 1: QX1 - 5.0, 2: QY0 + 5.0, 3: QY1 - 5.0}
        for seat in range(4):
            face = faces[seat]
            top = s.paddles[seat]
            if seat == 0 and s.vx < 0 and px >= face and s.ball_x < face \
                    and top - 1 <= s.ball_y <= top + PADDLE_H + 1:
                s.vx = abs(s.vx)
                s.ball_x = face + 1
            elif seat == 1 and s.vx > 0 and px <= face and s.ball_x > face \
                    and top - 1 <= s.ball_y <= top + PADDLE_H + 1:
                s.vx = -abs(s.vx)
                s.ball_x = face - 1
            elif seat == 2 and s.vy < 0 and py >= face and s.ball_y < face \
                    and top - 1 <= s.ball_x <= top + PADDLE_H + 1:
                s.vy = abs(s.vy)
                s.ball_y = face + 1
            elif seat == 3 and s.vy > 0 and py <= face and s.ball_y > face \
                    and top - 1 <= s.ball_x <= top + PADDLE_H + 1:
                s.vy = -abs(s.vy)
                s.ball_y = face - 1
        if s.ball_x < QX0 or s.ball_x > QX1:
            return self._point(s, 1, rng)  # vertical team concedes
        if s.ball_y < QY0 or s.ball_y > QY1:
            return self._point(s, 0, rng)
        return [0, 0, 0, 0]

    # -- volleyball -------------------------------------------------------

    def _step_volleyball(self, s, acts, rng):
        pw, ph = 12.0, 6.0
        for i, a in enumerate(acts):
            dx, dy = A.direction(a)
            left_side = self._team(i) == 0
            lo, hi = (VX0, V_NET_X - 1 - pw) if left_side else (V_NET_X + 1, VX1 - pw)
            if dx:
                s.paddles[i] = min(hi, max(lo, s.paddles[i] + dx * PADDLE_SPEED))
            if dy < 0 and s.player_h[i] == 0.0 and s.player_vy[i] == 0.0:
                s.player_vy[i] = 3.5  # jump impulse, height grows then falls
        # jump arcs
        for i in range(s.players):
            if s.player_vy[i] != 0.0 or s.player_h[i] > 0.0:
                s.player_h[i] += s.player_vy[i]
                s.player_vy[i] -= 0.25
                if s.player_h[i] <= 0.0:
                    s.player_h[i] = 0.0
                    s.player_vy[i] = 0.0
        s.vy += 0.12  # ball gravity
        s.ball_x += s.vx
        s.ball_y += s.vy
        if s.ball_x <= VX0:
            s.ball_x = VX0
            s.vx = abs(s.vx)
        elif s.ball_x >= VX1:
            s.ball_x = VX1
            s.vx = -abs(s.vx)
        if s.ball_y <= 25:
            s.ball_y = 25
            s.vy = abs(s.vy)
        # net
        if V_NET_TOP <= s.ball_y <= V_FLOOR and abs(s.ball_x - V_NET_X) <= 2:
            s.vx = -s.vx
            s.ball_x = V_NET_X - 3 if s.ball_x < V_NET_X else V_NET_X + 3
        for i in range(s.players):
            py = V_FLOOR - ph - s.player_h[i]
            px = s.paddles[i]
            if (px - 2 <= s.ball_x <= px + pw + 2
                    and py - 3 <= s.ball_y <= py + ph + 2 and s.vy > -0.5):
                left_side = self._team(i) == 0
                off = (s.ball_x - (px + pw / 2)) / (pw / 2)
                s.vx = (1.6 if left_side else -1.6) + off * 0.5
                s.vy = -3.2
        if s.ball_y >= V_FLOOR - 2:
            scorer = 1 if s.ball_x < V_NET_X else 0
            return self._point(s, scorer, rng)
        return [0] * s.players

    # -- shared -----------------------------------------------------------

    def lives(self, state):
        return [0] * state.players

    def render(self, state, screen):
        screen[:] = BG
        if state.variant == "pong":
            fill_rect(screen, 0, TOP - 4, SCREEN_W, 4, WALL)
            fill_rect(screen, 0, BOT, SCREEN_W, 4, WALL)
            cols = self._pong_columns(state.players)
            for seat, face in cols.items():
                x = face - PADDLE_W if self._team(seat) == 0 else face
                fill_rect(screen, x, state.paddles[seat], PADDLE_W, PADDLE_H,
                          PLAYER_COLORS[seat])
        elif state.variant == "quadrapong":
            fill_rect(screen, QX0 - 3, QY0 - 3, QX1 - QX0 + 6, 3, WALL)
            fill_rect(screen, QX0 - 3, QY1, QX1 - QX0 + 6, 3, WALL)
            fill_rect(screen, QX0 - 3, QY0, 3, QY1 - QY0, WALL)
            fill_rect(screen, QX1, QY0, 3, QY1 - QY0, WALL)
            fill_rect(screen, QX0 + 4, state.paddles[0], PADDLE_W, PADDLE_H,
                      PLAYER_COLORS[0])
            fill_rect(screen, QX1 - 4 - PADDLE_W, state.paddles[1], PADDLE_W,
                      PADDLE_H, PLAYER_COLORS[1])
            fill_rect(screen, state.paddles[2], QY0 + 4, PADDLE_H, PADDLE_W,
                      PLAYER_COLORS[2])
            fill_rect(screen, state.paddles[3], QY1 - 4 - PADDLE_W, PADDLE_H,
                      PADDLE_W, PLAYER_COLORS[3])
        else:
            fill_rect(screen, 0, V_FLOOR + 2, SCREEN_W, 8, WALL)
            fill_rect(screen, V_NET_X - 1, V_NET_TOP, 3, V_FLOOR - V_NET_TOP,
                      WALL)
            for i in range(state.players):
                py = V_FLOOR - 6.0 - state.player_h[i]
                fill_rect(screen, state.paddles[i], py, 12, 6,
                          PLAYER_COLORS[i])
        fill_rect(screen, state.ball_x - 1, state.ball_y - 1, 2, 2, BALL_COLOR)
        # team score pips along the top edge
        for t in range(2):
            n = min(SCORE_LIMIT, state.scores[t])
            for j in range(n):
                x = 4 + j * 6 if t == 0 else SCREEN_W - 8 - j * 6
                fill_rect(screen, x, 4, 4, 4, PLAYER_COLORS[t])

    def ram_features(self, state, player):
        if state.variant != "pong":
            raise NotImplementedError("ram features defined for pong only")
        top = state.paddles[player]
        center = top + PADDLE_H / 2
        dy = state.ball_y - center
        rel = 0 if abs(dy) < 3 else (1 if dy > 0 else -1)
        toward = (state.vx < 0) == (self._team(player) == 0)
        return (
            rel,
            int(toward),
            int((state.ball_y - TOP) / (BOT - TOP) * 10),
            int((top - TOP) / (BOT - TOP) * 10),
            int(state.ball_x / SCREEN_W * 5),
            0 if state.vy < 0 else 1,
        )
