"""Per-game behavior checks beyond the shared API contract."""

import random

import numpy as np
import pytest

from maale import load_game
from maale.actions import (
    DOWN, DOWNFIRE, FIRE, LEFT, NOOP, RIGHT, UP, UPFIRE,
)
from maale.games import space_invaders as si_mod
from maale.games.combat import HEADINGS
from maale.games.entombed import START_LIVES, VIS_ROWS
from maale.games.space_invaders import POOL_LIVES
from maale.games.warlords import SUDDEN_DEATH_FRAME, _warlord_rect


# -- combat ---------------------------------------------------------------

class TestCombat:
    def _handle(self, mode, seed=0):
        h = load_game("combat")
        h.set_mode(mode)
        h.reset(seed)
        return h

    def _aim_shell_at(self, h, shooter, bounces):
        """Plants an active shell one step away from the target tank."""
        s = h.state
        target = 1 - shooter
        sh = s.shells[shooter]
        sh.active = True
        sh.x = s.x[target] - 2.0
        sh.y = s.y[target]
        sh.dx, sh.dy = 1.0, 0.0
        sh.age = 1
        sh.bounces = bounces
        # park the shooter far away so its own motion stays out of the way
        s.heading[shooter] = 0
        return sh

    def test_direct_hit_scores(self):
        h = self._handle(1)
        self._aim_shell_at(h, 0, bounces=0)
        r = h.act([NOOP, NOOP])
        assert r == [1, -1]

    def test_billiards_needs_a_bounce(self):
        h = self._handle(8)  # billiards on
        self._aim_shell_at(h, 0, bounces=0)
        r = h.act([NOOP, NOOP])
        assert r == [0, 0], "unbounced billiards shell must pass through"
        h2 = self._handle(8)
        self._aim_shell_at(h2, 0, bounces=1)
        r2 = h2.act([NOOP, NOOP])
        assert r2 == [1, -1]

    def test_billiards_shell_reflects_off_walls(self):
        h = self._handle(8)
        s = h.state
        sh = s.shells[0]
        sh.active = True
        sh.x, sh.y = 150.0, 60.0  # heading into the east wall
        sh.dx, sh.dy = 1.0, 0.0
        sh.age = 1
        sh.bounces = 0
        h.act([NOOP, NOOP])
        assert sh.active
        assert sh.dx < 0
        assert sh.bounces == 1

    def test_tank_shells_track_heading(self):
        """Standard tank shells are guided: they follow the shooter's
        current heading every frame."""
        h = self._handle(1)
        s = h.state
        h.act([FIRE, NOOP])
        sh = s.shells[0]
        assert sh.active
        assert (sh.dx, sh.dy) == HEADINGS[s.heading[0]]
        before = s.heading[0]
        h.act([LEFT, NOOP])  # counter-clockwise turn
        assert s.heading[0] == (before + 1) % 16
        assert (sh.dx, sh.dy) == HEADINGS[s.heading[0]]

    def test_billiards_shell_is_unguided(self):
        h = self._handle(8)
        s = h.state
        h.act([FIRE, NOOP])
        sh = s.shells[0]
        d0 = (sh.dx, sh.dy)
        h.act([LEFT, NOOP])
        assert (sh.dx, sh.dy) == d0

    def _tank_region_pixels(self, h, i):
        from maale.games.combat import Combat
        screen = h.screen_rgb()
        x, y, w, bh = Combat.tank_pixel_boxes(h.state)[i]
        x0, y0 = max(0, int(x)), max(0, int(y))
        region = screen[y0:y0 + int(bh), x0:x0 + int(w)]
        color = np.array((200, 72, 72) if i == 0 else (90, 140, 220))
        return int((region == color).all(axis=2).sum())

    def test_invisible_tanks_hidden_until_fire(self):
        h_vis = self._handle(1, seed=3)
        h_inv = self._handle(10, seed=3)
        h_vis.act([NOOP, NOOP])
        h_inv.act([NOOP, NOOP])
        assert self._tank_region_pixels(h_vis, 0) > 0
        assert self._tank_region_pixels(h_inv, 0) == 0
        # firing makes the invisible tank flash into view
        h_inv.act([FIRE, NOOP])
        assert self._tank_region_pixels(h_inv, 0) > 0

    def test_maze_modes_have_obstacles(self):
        assert self._handle(2).state.obstacles
        assert not self._handle(1).state.obstacles

    def test_plane_constant_motion_and_wrap(self):
        h = self._handle(15)
        s = h.state
        x0 = s.x[0]
        h.act([NOOP, NOOP])
        assert s.x[0] != x0, "planes always move forward"

    def test_jet_faster_than_biplane(self):
        hb = self._handle(15)
        hj = self._handle(21)
        xb0, xj0 = hb.state.x[0], hj.state.x[0]
        hb.act([NOOP, NOOP])
        hj.act([NOOP, NOOP])
        db = abs(hb.state.x[0] - xb0)
        dj = abs(hj.state.x[0] - xj0)
        assert dj > db

    def test_match_ends_on_time(self):
        h = self._handle(1)
        h.state.frame = 3598
        h.act([NOOP, NOOP])
        assert not h.game_over()
        h.act([NOOP, NOOP])
        assert h.game_over()
        assert h.terminal_cause() == "time"


# -- space invaders -------------------------------------------------------

class TestSpaceInvaders:
    def _handle(self, mode, seed=0):
        h = load_game("space_invaders")
        h.set_mode(mode)
        h.reset(seed)
        return h

    def test_pooled_lives_split(self):
        h = self._handle(33)
        s = h.state
        game = h.game
        s.deaths = [0, 0]
        assert game.lives(s) == [1, 1]
        s.deaths = [1, 0]
        assert game.lives(s) == [0, 1]
        s.deaths = [0, 1]
        assert game.lives(s) == [1, 0]
        s.deaths = [1, 1]
        assert game.lives(s) == [0, 0]
        s.deaths = [2, 0]
        assert game.lives(s) == [0, 0]

    def test_alternating_turns_blocks_off_turn_fire(self):
        h = self._handle(49)  # 33 + 16: alternating turns only
        s = h.state
        assert s.turn == 0
        h.act([NOOP, FIRE])
        assert s.shots[1] is None, "player 1 must wait for their turn"
        h.act([FIRE, NOOP])
        assert s.shots[0] is not None
        assert s.turn == 1

    def test_turn_rotates_on_timer(self):
        h = self._handle(49)
        s = h.state
        assert s.turn == 0
        for _ in range(120):
            h.act([NOOP, NOOP])
        assert s.turn == 1

    def test_no_turn_restriction_in_base_mode(self):
        h = self._handle(33)
        h.act([FIRE, FIRE])
        s = h.state
        assert s.shots[0] is not None and s.shots[1] is not None

    def test_invisible_invaders_not_rendered(self):
        h_vis = self._handle(33, seed=2)
        h_inv = self._handle(41, seed=2)
        alien = np.array(si_mod.ALIEN_COLOR)
        vis = (h_vis.screen_rgb() == alien).all(axis=2).sum()
        inv = (h_inv.screen_rgb() == alien).all(axis=2).sum()
        assert vis > 0
        assert inv == 0

    def test_moving_shields_oscillate(self):
        h = self._handle(34)
        s = h.state
        offs = set()
        for _ in range(100):
            h.act([NOOP, NOOP])
            offs.add(round(s.shield_off, 2))
        assert len(offs) > 10
        assert max(abs(o) for o in offs) <= 8.25

    def test_fast_bombs_fall_faster(self):
        hs = self._handle(33, seed=1)
        hf = self._handle(37, seed=1)  # 33 + 4: fast bombs
        for h in (hs, hf):
            h.state.bombs.append([80.0, 100.0])
        hs.act([NOOP, NOOP])
        hf.act([NOOP, NOOP])
        assert hs.state.bombs[-1][1] == 101.0
        assert hf.state.bombs[-1][1] == 102.0

    def test_shooting_alien_pays_shooter(self):
        h = self._handle(33)
        s = h.state
        # drop a shot directly under the bottom-left alien
        col = 0
        row = 5
        x = s.gx + col * 14 + 4
        s.shots[0] = [x, s.gy + row * 12 + 20]
        r = [0, 0]
        for _ in range(10):
            r = h.act([NOOP, NOOP])
            if r != [0, 0]:
                break
        assert r[0] == 10 and r[1] == 0
        assert not s.alive[row][col]

    def test_survivor_reward_and_pool_exhaustion(self):
        h = self._handle(33)
        s = h.state
        s.deaths = [1, 1]  # one pooled life left
        s.bombs.append([s.players_x[0] + 4, 193.0])
        r = h.act([NOOP, NOOP])
        assert r == [0, 20]
        assert h.game_over()
        assert h.terminal_cause() == "lives"

    def test_wave_respawns_after_clear(self):
        h = self._handle(33)
        s = h.state
        for r in range(6):
            for c in range(6):
                s.alive[r][c] = False
        s.alive[0][0] = True
        x = s.gx + 4
        s.shots[0] = [x, s.gy + 4 + 4]
        for _ in range(5):
            h.act([NOOP, NOOP])
            if s.wave == 1:
                break
        assert s.wave == 1
        assert all(all(row) for row in s.alive)

    def test_invasion_terminates(self):
        h = self._handle(33)
        s = h.state
        s.gy = 185.0
        h.act([NOOP, NOOP])
        assert h.game_over()
        assert h.terminal_cause() == "lives"


# -- entombed -------------------------------------------------------------

class TestEntombed:
    def _handle(self, mode, seed=0):
        h = load_game("entombed")
        h.set_mode(mode)
        h.reset(seed)
        return h

    def test_cooperative_rewards_identical(self):
        h = self._handle(3, seed=5)
        rng = random.Random(8)
        legal = h.minimal_action_set()
        saw_positive = False
        for _ in range(4000):
            if h.game_over():
                break
            r = h.act([legal[rng.randrange(len(legal))] for _ in range(2)])
            assert r[0] == r[1]
            if r[0] > 0:
                saw_positive = True
        assert saw_positive

    def test_competitive_zero_sum(self):
        h = self._handle(2, seed=6)
        rng = random.Random(9)
        legal = h.minimal_action_set()
        for _ in range(4000):
            if h.game_over():
                break
            r = h.act([legal[rng.randrange(len(legal))] for _ in range(2)])
            assert r[0] + r[1] == 0

    def test_crush_costs_a_life(self):
        h = self._handle(2)
        s = h.state
        assert s.lives == [START_LIVES, START_LIVES]
        s.players[0][0] = 0
        s.scroll_timer = 39  # next frame scrolls
        r = h.act([NOOP, NOOP])
        assert s.lives[0] == START_LIVES - 1
        assert r == [-1, 1]

    def test_final_death_terminates(self):
        h = self._handle(2)
        s = h.state
        s.lives = [0, 2]
        s.players[0][0] = 0
        s.scroll_timer = 39
        r = h.act([NOOP, NOOP])
        assert h.game_over()
        assert h.terminal_cause() == "lives"
        assert r == [-1, 1]

    def test_make_break_needs_charge(self):
        h = self._handle(2)
        s = h.state
        r, c = s.players[0]
        target = (r + 1, c)
        s.walls[target[0]][target[1]] = 1
        s.charges[0] = 0
        h.act([DOWNFIRE, NOOP])
        assert s.walls[target[0]][target[1]] == 1
        s.charges[0] = 1
        s.cooldown[0] = 0
        h.act([DOWNFIRE, NOOP])
        assert s.walls[target[0]][target[1]] == 0
        assert s.charges[0] == 0

    def test_guaranteed_channel_exists(self):
        """Every generated row keeps at least one open cell, so the maze
        never becomes impassable."""
        h = self._handle(2, seed=13)
        s = h.state
        for _ in range(2000):
            if h.game_over():
                break
            h.act([NOOP, NOOP])
        for row in s.walls:
            assert 0 in row


# -- warlords -------------------------------------------------------------

class TestWarlords:
    def _handle(self, seed=0):
        h = load_game("warlords")
        h.reset(seed)
        return h

    def _aim_at_warlord(self, s, seat):
        x, y, w, hh = _warlord_rect(seat)
        s.bricks[seat] = []
        s.ball_x = x + w / 2.0
        s.ball_y = y + hh / 2.0
        s.vx, s.vy = 0.5, 0.5
        s.paddle_t[seat] = 0.0 if s.paddle_t[seat] > 0.5 else 1.0

    def test_elimination_reward_and_lives(self):
        h = self._handle()
        s = h.state
        self._aim_at_warlord(s, 0)
        r = h.act([NOOP] * 4)
        assert r[0] == -1
        assert not s.alive[0]
        assert h.all_lives() == [0, 1, 1, 1]
        assert not h.game_over()

    def test_last_standing_wins(self):
        h = self._handle()
        s = h.state
        rewards = []
        for seat in (0, 1, 2):
            self._aim_at_warlord(s, seat)
            rewards.append(h.act([NOOP] * 4))
        assert h.game_over()
        assert h.terminal_cause() == "score-limit"
        assert rewards[-1][3] == 1
        total = [sum(r[i] for r in rewards) for i in range(4)]
        assert sum(total) == -2  # three eliminations, one survivor bonus

    def test_sudden_death_clears_bricks(self):
        h = self._handle()
        s = h.state
        assert all(len(b) == 9 for b in s.bricks)
        s.frame = SUDDEN_DEATH_FRAME - 1
        h.act([NOOP] * 4)
        assert all(len(b) == 0 for b in s.bricks)

    def test_bricks_absorb_one_hit(self):
        h = self._handle()
        s = h.state
        brick = s.bricks[0][0]
        bx, by, bw, bh = brick
        s.ball_x = bx + bw / 2.0
        s.ball_y = by + bh + 2.5
        s.vx, s.vy = 0.0, -1.5
        s.paddle_t[0] = 1.0  # park the paddle away from the vertical leg
        n0 = len(s.bricks[0])
        h.act([NOOP] * 4)
        assert len(s.bricks[0]) == n0 - 1
        assert s.vy > 0


# -- video olympics -------------------------------------------------------

class TestVideoOlympics:
    def _handle(self, mode, seed=0):
        h = load_game("video_olympics")
        h.set_mode(mode)
        h.reset(seed)
        return h

    def test_pong_point_rewards_by_team(self):
        h = self._handle(6)  # four-player pong
        s = h.state
        s.ball_x, s.ball_y = 3.0, 100.0
        s.vx, s.vy = -2.0, 0.0
        s.paddles = [20.0, 20.0, 20.0, 20.0]  # paddles out of the way
        r = h.act([NOOP] * 4)
        assert r == [-1, 1, -1, 1]
        assert s.scores == [0, 1]

    def test_pong_score_limit_terminates(self):
        h = self._handle(4)
        s = h.state
        s.scores = [9, 0]
        s.ball_x, s.ball_y = 157.5, 100.0
        s.vx, s.vy = 2.0, 0.0
        s.paddles = [20.0, 170.0]
        r = h.act([NOOP, NOOP])
        assert r == [1, -1]
        assert h.game_over()
        assert h.terminal_cause() == "score-limit"

    def test_pong_paddle_returns_ball(self):
        h = self._handle(4)
        s = h.state
        s.paddles = [100.0, 100.0]
        s.ball_x, s.ball_y = 12.5, 108.0
        s.vx, s.vy = -2.0, 0.0
        h.act([NOOP, NOOP])
        assert s.vx > 0, "left paddle must reflect the ball"

    def test_quadrapong_team_structure(self):
        h = self._handle(33)
        s = h.state
        s.ball_x = 18.0  # past the left edge
        s.ball_y = 100.0
        s.vx, s.vy = -1.0, 0.0
        r = h.act([NOOP] * 4)
        # vertical-wall team (seats 0, 1) concedes together
        assert r == [-1, 1, -1, 1]

    def test_volleyball_floor_point(self):
        h = self._handle(39)
        s = h.state
        s.ball_x, s.ball_y = 40.0, 187.5
        s.vx, s.vy = 0.0, 2.0
        s.paddles = [8.0, 120.0]
        r = h.act([NOOP, NOOP])
        assert r == [-1, 1], "ball grounded on the left court"

    def test_volleyball_jump(self):
        h = self._handle(39)
        s = h.state
        h.act([UP, NOOP])
        assert s.player_h[0] > 0
        for _ in range(40):
            h.act([NOOP, NOOP])
        assert s.player_h[0] == 0.0

    def test_ram_features_shape_and_range(self):
        h = self._handle(4)
        feats = h.game.ram_features(h.state, 0)
        assert len(feats) == 6
        assert all(isinstance(v, int) for v in feats)
        with pytest.raises(NotImplementedError):
            hq = self._handle(33)
            hq.game.ram_features(hq.state, 0)
