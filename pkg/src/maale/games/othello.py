"""Othello with an arcade cursor interface.

Each player steers a cursor over the 8x8 board; FIRE attempts to place a
disc on the mover's turn (illegal squares are a no-op).  Forced passes
happen automatically.  Disc placement is the progress event the stall
clock watches, and the player to move is blamed for a stall.
"""

from .. import actions as A
from .base import Game, ModeInfo, fill_rect

SIZE = 8
CURSOR_COOLDOWN = 4

RAYS = ((-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1))

BG = (20, 90, 40)
GRID_COLOR = (10, 50, 20)
DISC_COLORS = ((30, 30, 30), (230, 230, 230))  # black = seat 0
CURSOR_COLORS = ((92, 186, 92), (214, 92, 92))

OFF_X, OFF_Y = 16, 40
CELL = 16


def flips_for(board, r, c, disc):
    """Discs flipped by placing `disc` at (r, c); empty if illegal."""
    if board[r * SIZE + c] != 0:
        return []
    other = 3 - disc
    out = []
    for dr, dc in RAYS:
        rr, cc = r + dr, c + dc
        run = []
        while 0 <= rr < SIZE and 0 <= cc < SIZE and board[rr * SIZE + cc] == other:
            run.append((rr, cc))
            rr += dr
            cc += dc
        if run and 0 <= rr < SIZE and 0 <= cc < SIZE \
                and board[rr * SIZE + cc] == disc:
            out.extend(run)
    return out


def legal_moves(board, disc):
    return [(r, c) for r in range(SIZE) for c in range(SIZE)
            if flips_for(board, r, c, disc)]


def has_move(board, disc):
    for r in range(SIZE):
        for c in range(SIZE):
            if flips_for(board, r, c, disc):
                return True
    return False


class _State:
    __slots__ = ("frame", "terminal", "cause", "board", "mover",
                 "cursors", "cooldown", "placements")


class Othello(Game):
    name = "othello"
    group = "long-term-strategy"
    game_theory = "competitive"
    stall_enabled = True
    default_mode = 0

    modes = {0: ModeInfo(2, None, True)}

    def minimal_actions(self, mode):
        return [A.NOOP, A.FIRE, A.UP, A.RIGHT, A.LEFT, A.DOWN]

    def init_state(self, mode, rng):
        s = _State()
        s.frame = 0
        s.terminal = False
        s.cause = ""
        s.board = [0] * 64
        s.board[3 * 8 + 3] = 2
        s.board[4 * 8 + 4] = 2
        s.board[3 * 8 + 4] = 1
        s.board[4 * 8 + 3] = 1
        s.mover = 0  # black moves first
        s.cursors = [[0, 0], [7, 7]]
        s.cooldown = [0, 0]
        s.placements = 0
        return s

    def _finish(self, s, rewards):
        s.terminal = True
        s.cause = "score-limit"
        black = sum(1 for v in s.board if v == 1)
        white = sum(1 for v in s.board if v == 2)
        if black > white:
            rewards[0] += 1
            rewards[1] -= 1
        elif white > black:
            rewards[0] -= 1
            rewards[1] += 1

    def step(self, state, acts, rng):
        s = state
        s.frame += 1
        rewards = [0, 0]
        events = []
        for i, a in enumerate(acts):
            if s.cooldown[i] > 0:
                s.cooldown[i] -= 1
                continue
            dx, dy = A.direction(a)
            if dx or dy:
                r, c = s.cursors[i]
                nr = min(SIZE - 1, max(0, r + dy))
                nc = min(SIZE - 1, max(0, c + dx))
                if (nr, nc) != (r, c):
                    s.cursors[i] = [nr, nc]
                    s.cooldown[i] = CURSOR_COOLDOWN
            if A.has_fire(a) and i == s.mover:
                r, c = s.cursors[i]
                disc = i + 1
                run = flips_for(s.board, r, c, disc)
                if not run:
                    continue
                s.board[r * SIZE + c] = disc
                for rr, cc in run:
                    s.board[rr * SIZE + cc] = disc
                s.placements += 1
                events.append("progress")
                other = 1 - i
                if has_move(s.board, other + 1):
                    s.mover = other
                elif has_move(s.board, disc):
                    pass  # opponent passes, same mover continues
                else:
                    self._finish(s, rewards)
        return rewards, events

    def stall_blame(self, state):
        return state.mover

    def lives(self, state):
        return [0, 0]

    def render(self, state, screen):
        s = state
        screen[:] = BG
        for k in range(SIZE + 1):
            fill_rect(screen, OFF_X, OFF_Y + k * CELL, SIZE * CELL + 1, 1,
                      GRID_COLOR)
            fill_rect(screen, OFF_X + k * CELL, OFF_Y, 1, SIZE * CELL + 1,
                      GRID_COLOR)
        for r in range(SIZE):
            for c in range(SIZE):
                v = s.board[r * SIZE + c]
                if v:
                    fill_rect(screen, OFF_X + c * CELL + 3,
                              OFF_Y + r * CELL + 3, CELL - 5, CELL - 5,
                              DISC_COLORS[v - 1])
        for i in range(2):
            r, c = s.cursors[i]
            x, y = OFF_X + c * CELL, OFF_Y + r * CELL
            color = CURSOR_COLORS[i]
            fill_rect(screen, x, y, CELL, 2, color)
            fill_rect(screen, x, y + CELL - 1, CELL, 2, color)
            fill_rect(screen, x, y, 2, CELL, color)
            fill_rect(screen, x + CELL - 1, y, 2, CELL, color)
        # mover indicator
        fill_rect(screen, 10 if s.mover == 0 else 140, 15, 8, 8,
                  CURSOR_COLORS[s.mover])
