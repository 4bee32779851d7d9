"""Maze Craze: two players race through a randomly carved perfect maze.

Game type n selects race / robbers / capture rules; visibility level k
restricts how much of the maze is drawn (the whole point of the higher k
modes).  Capture mode lets players drop fake walls that render exactly
like real ones but block nothing.
"""

import numpy as np

from .. import actions as A
from ..modes import MAZE_CRAZE_TYPES, decode_maze_craze_mode
from .base import Game, ModeInfo, fill_rect

CELLS_W = 15
CELLS_H = 10
CELL_PW = 10   # pixels per cell, x
CELL_PH = 16   # pixels per cell, y
OFF_X = 5
OFF_Y = 30
MOVE_COOLDOWN = 5
ROBBER_PERIOD = 20
N_ROBBERS = 3
MAX_FAKE_WALLS = 3
FRAME_LIMIT = 5000
VIS_RADIUS = {0: None, 1: 5, 2: 3, 3: -1}

BG = (0, 0, 0)
WALL_COLOR = (66, 158, 130)
EXIT_COLOR = (20, 20, 20)
PLAYER_COLORS = ((92, 186, 92), (214, 92, 92))
ROBBER_COLOR = (220, 220, 90)

START_CELLS = ((3, 0), (6, 0))


class _State:
    __slots__ = (
        "n", "k", "frame", "terminal", "cause", "walls_e", "walls_s",
        "exit_row", "players", "cooldown", "robbers", "robber_timer",
        "captured", "fake_walls", "fakes_placed", "winner", "wall_img",
    )


def _carve_maze(rng):
    """Randomized depth-first carve; returns (east_walls, south_walls)."""
    walls_e = [[True] * CELLS_W for _ in range(CELLS_H)]
    walls_s = [[True] * CELLS_W for _ in range(CELLS_H)]
    visited = [[False] * CELLS_W for _ in range(CELLS_H)]
    stack = [(0, 0)]
    visited[0][0] = True
    while stack:
        r, c = stack[-1]
        nbrs = []
        if r > 0 and not visited[r - 1][c]:
            nbrs.append((r - 1, c, "n"))
        if r < CELLS_H - 1 and not visited[r + 1][c]:
            nbrs.append((r + 1, c, "s"))
        if c > 0 and not visited[r][c - 1]:
            nbrs.append((r, c - 1, "w"))
        if c < CELLS_W - 1 and not visited[r][c + 1]:
            nbrs.append((r, c + 1, "e"))
        if not nbrs:
            stack.pop()
            continue
        nr, nc, side = nbrs[rng.randrange(len(nbrs))]
        if side == "n":
            walls_s[nr][nc] = False
        elif side == "s":
            walls_s[r][c] = False
        elif side == "w":
            walls_e[nr][nc] = False
        else:
            walls_e[r][c] = False
        visited[nr][nc] = True
        stack.append((nr, nc))
    return walls_e, walls_s


class MazeCraze(Game):
    name = "maze_craze"
    group = "competitive-racing"
    game_theory = "competitive"
    default_mode = 0

    modes = {}
    for _n in MAZE_CRAZE_TYPES:
        for _k in range(4):
            modes[4 * _n + _k] = ModeInfo(2, (_n, _k), True,
                                          MAZE_CRAZE_TYPES[_n])
    del _n, _k

    def minimal_actions(self, mode):
        return [A.NOOP, A.FIRE, A.UP, A.RIGHT, A.LEFT, A.DOWN]

    def init_state(self, mode, rng):
        n, k = decode_maze_craze_mode(mode)
        s = _State()
        s.n = n
        s.k = k
        s.frame = 0
        s.terminal = False
        s.cause = ""
        s.winner = None
        s.walls_e, s.walls_s = _carve_maze(rng)
        s.exit_row = rng.randrange(CELLS_H)
        s.walls_e[s.exit_row][CELLS_W - 1] = False
        s.players = [list(START_CELLS[0]), list(START_CELLS[1])]
        s.cooldown = [0, 0]
        s.robbers = []
        s.robber_timer = 0
        s.captured = [set(), set()]
        s.fake_walls = []
        s.fakes_placed = [0, 0]
        if n in (1, 11):
            for _ in range(N_ROBBERS):
                s.robbers.append([rng.randrange(CELLS_H),
                                  rng.randrange(CELLS_W // 2, CELLS_W)])
        s.wall_img = self._build_wall_img(s)
        return s

    @staticmethod
    def _blocked(s, r, c, dr, dc):
        """Is the wall between (r, c) and its neighbor closed?"""
        if dc == 1:
            return c == CELLS_W - 1 or s.walls_e[r][c]
        if dc == -1:
            return c == 0 or s.walls_e[r][c - 1]
        if dr == 1:
            return r == CELLS_H - 1 or s.walls_s[r][c]
        return r == 0 or s.walls_s[r - 1][c]

    def _open_neighbors(self, s, r, c):
        out = []
        for dr, dc in ((-1, 0), (1, 0), (0, -1), (0, 1)):
            if not self._blocked(s, r, c, dr, dc):
                out.append((r + dr, c + dc))
        return out

    def step(self, state, acts, rng):
        s = state
        s.frame += 1
        rewards = [0, 0]
        capture = s.n == 11
        for i, a in enumerate(acts):
            if s.cooldown[i] > 0:
                s.cooldown[i] -= 1
                continue
            r, c = s.players[i]
            if A.has_fire(a):
                if capture and s.fakes_placed[i] < MAX_FAKE_WALLS \
                        and (r, c) not in s.fake_walls:
                    s.fake_walls.append((r, c))
                    s.fakes_placed[i] += 1
                    s.cooldown[i] = MOVE_COOLDOWN
                continue
            dx, dy = A.direction(a)
            if dx == 0 and dy == 0:
                continue
            # exit through the east opening
            if (dx == 1 and r == s.exit_row and c == CELLS_W - 1
                    and not s.walls_e[r][c]
                    and (not capture or len(s.captured[i]) == N_ROBBERS)):
                s.terminal = True
                s.cause = "score-limit"
                s.winner = i
                rewards[i] += 1
                rewards[1 - i] -= 1
                return rewards, []
            if not self._blocked(s, r, c, dy, dx):
                s.players[i] = [r + dy, c + dx]
                s.cooldown[i] = MOVE_COOLDOWN
        # robbers wander
        if s.robbers:
            s.robber_timer += 1
            if s.robber_timer >= ROBBER_PERIOD:
                s.robber_timer = 0
                for rob in s.robbers:
                    nbrs = self._open_neighbors(s, rob[0], rob[1])
                    if nbrs:
                        rob[0], rob[1] = nbrs[rng.randrange(len(nbrs))]
            for ri, rob in enumerate(s.robbers):
                for i in range(2):
                    if s.players[i] == rob:
                        if s.n == 1:
                            s.players[i] = list(START_CELLS[i])
                            s.cooldown[i] = MOVE_COOLDOWN
                        else:
                            s.captured[i].add(ri)
        if s.frame >= FRAME_LIMIT:
            s.terminal = True
            s.cause = "time"
        return rewards, []

    def lives(self, state):
        return [0, 0]

    # -- rendering ------------------------------------------------------

    @staticmethod
    def _build_wall_img(s):
        """Static wall pixels as a boolean (rows, cols) image, cell units."""
        img = np.zeros((CELLS_H * CELL_PH + 2, CELLS_W * CELL_PW + 2),
                       dtype=bool)
        img[0:2, :] = True
        img[-2:, :] = True
        img[:, 0:2] = True
        img[:, -2:] = True
        for r in range(CELLS_H):
            for c in range(CELLS_W):
                x = 2 + c * CELL_PW
                y = 2 + r * CELL_PH
                if s.walls_e[r][c] and c < CELLS_W - 1:
                    img[y:y + CELL_PH, x + CELL_PW - 1:x + CELL_PW + 1] = True
                if s.walls_s[r][c] and r < CELLS_H - 1:
                    img[y + CELL_PH - 1:y + CELL_PH + 1, x:x + CELL_PW] = True
        # exit opening in the east boundary
        if not s.walls_e[s.exit_row][CELLS_W - 1]:
            y = 2 + s.exit_row * CELL_PH
            img[y:y + CELL_PH, -2:] = False
        return img

    @staticmethod
    def _cell_px(r, c):
        return OFF_X + 2 + c * CELL_PW, OFF_Y + 2 + r * CELL_PH

    def render(self, state, screen):
        s = state
        screen[:] = BG
        radius = VIS_RADIUS[s.k]
        img = s.wall_img
        if radius is None:
            mask = img
        elif radius < 0:
            mask = None
        else:
            cell_vis = np.zeros((CELLS_H, CELLS_W), dtype=bool)
            for pr, pc in s.players:
                r0, r1 = max(0, pr - radius), min(CELLS_H, pr + radius + 1)
                c0, c1 = max(0, pc - radius), min(CELLS_W, pc + radius + 1)
                cell_vis[r0:r1, c0:c1] = True
            vis_px = np.zeros_like(img)
            inner = np.repeat(np.repeat(cell_vis, CELL_PH, axis=0),
                              CELL_PW, axis=1)
            vis_px[2:2 + inner.shape[0], 2:2 + inner.shape[1]] = inner
            vis_px[0:2, :] = True
            vis_px[-2:, :] = True
            vis_px[:, 0:2] = True
            vis_px[:, -2:] = True
            mask = img & vis_px
        if mask is not None:
            region = screen[OFF_Y:OFF_Y + img.shape[0],
                            OFF_X:OFF_X + img.shape[1]]
            region[mask] = WALL_COLOR
        for (r, c) in s.fake_walls:
            x, y = self._cell_px(r, c)
            fill_rect(screen, x, y, CELL_PW - 1, CELL_PH - 1, WALL_COLOR)
        for ri, rob in enumerate(s.robbers):
            x, y = self._cell_px(rob[0], rob[1])
            fill_rect(screen, x + 2, y + 4, 5, 7, ROBBER_COLOR)
        for i in range(2):
            r, c = s.players[i]
            x, y = self._cell_px(r, c)
            fill_rect(screen, x + 1 + i * 3, y + 2, 4, 11, PLAYER_COLORS[i])

    # -- analysis helpers (used by tests) --------------------------------

    def reachable_cells(self, state, start):
        """Flood fill over open walls from a (row, col) cell."""
        seen = {tuple(start)}
        frontier = [tuple(start)]
        while frontier:
            r, c = frontier.pop()
            for nr, nc in self._open_neighbors(state, r, c):
                if (nr, nc) not in seen:
                    seen.add((nr, nc))
                    frontier.append((nr, nc))
        return seen
