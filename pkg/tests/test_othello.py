"""Othello rules against an independent brute-force move scanner, plus the
stall-forfeit behavior."""

import random

import pytest

from maale import StallConfig, load_game
from maale.actions import DOWN, FIRE, LEFT, NOOP, RIGHT, UP
from maale.games.othello import flips_for, has_move, legal_moves

DIRS = ((-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1))


def oracle_flips(board, r, c, disc):
    """Straightforward re-derivation of the flip set for a move."""
    if board[r * 8 + c] != 0:
        return []
    other = 3 - disc
    flips = []
    for dr, dc in DIRS:
        run = []
        rr, cc = r + dr, c + dc
        while 0 <= rr < 8 and 0 <= cc < 8 and board[rr * 8 + cc] == other:
            run.append((rr, cc))
            rr += dr
            cc += dc
        if run and 0 <= rr < 8 and 0 <= cc < 8 and board[rr * 8 + cc] == disc:
            flips.extend(run)
    return flips


def random_board(rng, fill):
    board = [0] * 64
    for i in range(64):
        if rng.random() < fill:
            board[i] = rng.choice((1, 2))
    return board


def test_initial_position_moves():
    board = [0] * 64
    board[3 * 8 + 3] = 2
    board[4 * 8 + 4] = 2
    board[3 * 8 + 4] = 1
    board[4 * 8 + 3] = 1
    moves = sorted(legal_moves(board, 1))
    assert moves == [(2, 3), (3, 2), (4, 5), (5, 4)]
    assert sorted(legal_moves(board, 2)) == [(2, 4), (3, 5), (4, 2), (5, 3)]


def test_flips_match_oracle_on_random_positions():
    rng = random.Random(31337)
    checked = 0
    for _ in range(1000):
        board = random_board(rng, rng.uniform(0.1, 0.9))
        disc = rng.choice((1, 2))
        r, c = rng.randrange(8), rng.randrange(8)
        assert sorted(flips_for(board, r, c, disc)) == \
            sorted(oracle_flips(board, r, c, disc))
        expect_legal = {(rr, cc) for rr in range(8) for cc in range(8)
                        if oracle_flips(board, rr, cc, disc)}
        assert set(legal_moves(board, disc)) == expect_legal
        assert has_move(board, disc) == bool(expect_legal)
        checked += 1
    assert checked == 1000


def _drive_and_place(h, r, c):
    """Walks the mover's cursor to (r, c) and fires until the disc lands."""
    mover = h.state.mover
    disc = mover + 1
    for _ in range(400):
        if h.state.board[r * 8 + c] == disc:
            return
        cr, cc = h.state.cursors[mover]
        if (cr, cc) == (r, c):
            a = FIRE
        elif cr < r:
            a = DOWN
        elif cr > r:
            a = UP
        elif cc < c:
            a = RIGHT
        else:
            a = LEFT
        h.act([a if mover == 0 else NOOP, a if mover == 1 else NOOP])
    pytest.fail(f"never placed at {(r, c)}")


def _play_scripted(moves, seed=0):
    h = load_game("othello", stall=StallConfig(enabled=False))
    h.reset(seed)
    for r, c in moves:
        _drive_and_place(h, r, c)
    return h


def test_scripted_opening_flips():
    h = _play_scripted([(2, 3)])
    board = h.state.board
    assert board[2 * 8 + 3] == 1
    assert board[3 * 8 + 3] == 1, "d4 must flip to black"
    assert h.state.mover == 1


def test_full_random_game_is_zero_sum_and_terminates():
    rng = random.Random(4)
    h = load_game("othello", stall=StallConfig(enabled=False))
    h.reset(9)
    legal = h.minimal_action_set()
    totals = [0.0, 0.0]
    for _ in range(100_000):
        if h.game_over():
            break
        r = h.act([legal[rng.randrange(len(legal))] for _ in range(2)])
        totals[0] += r[0]
        totals[1] += r[1]
    assert h.game_over()
    assert totals[0] + totals[1] == 0.0
    black = sum(1 for v in h.state.board if v == 1)
    white = sum(1 for v in h.state.board if v == 2)
    if black > white:
        assert totals == [1.0, -1.0]
    elif white > black:
        assert totals == [-1.0, 1.0]
    else:
        assert totals == [0.0, 0.0]


class TestStallForfeit:
    def test_never_placing_mover_forfeits(self):
        h = load_game("othello")  # default threshold 300
        h.reset(1)
        frames = 0
        rewards = None
        while not h.game_over():
            rewards = h.act([NOOP, NOOP])
            frames += 1
            assert frames <= 301, "stall must trigger at the threshold"
        assert frames == 300
        assert h.terminal_cause() == "stall"
        assert rewards == [-1, 1]

    def test_progress_resets_counter(self):
        h = load_game("othello", stall=StallConfig(threshold_frames=50))
        h.reset(2)
        # place at (2, 3) within the threshold; the clock restarts
        _drive_and_place(h, 2, 3)
        assert not h.game_over()
        frames = 0
        while not h.game_over():
            h.act([NOOP, NOOP])
            frames += 1
        assert frames == 50
        assert h.terminal_cause() == "stall"
        # blame falls on the player to move, now white
        assert h.game.stall_blame(h.state) == 1

    def test_disabled_stall_never_fires(self):
        h = load_game("othello", stall=StallConfig(enabled=False))
        h.reset(3)
        for _ in range(400):
            h.act([NOOP, NOOP])
        assert not h.game_over()
