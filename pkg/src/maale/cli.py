"""Command-line surface: catalog queries, rollouts, training, evaluation,
tournaments, and throughput benchmarks.

Exit codes: 0 success, 2 invalid flags, 3 unknown game/mode.
"""

import argparse
import csv
import os
import random
import sys
import time

from . import actions as A
from .checkpoint import load_policy, save_policy
from .core import load_game
from .errors import InvalidModeError, MaaleError, UnknownGameError, \
    UnplayableModeError
from .games import catalog
from .harness import (
    RandomPolicy, TrainConfig, evaluate_vs_random, run_episode,
    tournament as run_tournament, train_self_play,
)
from .preprocessing import PipelineConfig, resize_area, sticky, to_grayscale

EXIT_OK = 0
EXIT_FLAGS = 2
EXIT_UNKNOWN = 3


def _default_seed():
    try:
        return int(os.environ.get("MAALE_SEED", "0"))
    except ValueError:
        return 0


def write_pgm(path, img):
    with open(path, "wb") as f:
        f.write(b"P5\n%d %d\n255\n" % (img.shape[1], img.shape[0]))
        f.write(img.tobytes())


def write_ppm(path, img):
    with open(path, "wb") as f:
        f.write(b"P6\n%d %d\n255\n" % (img.shape[1], img.shape[0]))
        f.write(img.tobytes())


def _resolve_policy(spec, game, mode):
    if spec == "random":
        return RandomPolicy()
    policy, _cfg, _game, _mode = load_policy(spec)
    return policy


# -- commands ------------------------------------------------------------

def cmd_list_games(args):
    rows = catalog()
    if args.format == "csv":
        w = csv.writer(sys.stdout)
        w.writerow(["name", "category", "players", "modes"])
        for r in rows:
            w.writerow([r["name"], r["game_theory"], r["players"],
                        " ".join(str(m) for m in r["modes"])])
    else:
        for r in rows:
            print(f"{r['name']:<16} {r['game_theory']:<12} {r['players']:<4} "
                  f"modes={','.join(str(m) for m in r['modes'])}")
    return EXIT_OK


def cmd_modes(args):
    handle = load_game(args.game)
    modes = handle.available_modes(args.players)
    if args.format == "csv":
        w = csv.writer(sys.stdout)
        w.writerow(["mode", "players", "label"])
        for m in modes:
            info = handle.game.modes[m]
            w.writerow([m, info.players, info.label])
    else:
        for m in modes:
            info = handle.game.modes[m]
            extra = "" if info.playable else " (unplayable)"
            print(f"{m:<4} players={info.players} {info.label}{extra}")
    return EXIT_OK


def cmd_rollout(args):
    handle = load_game(args.game)
    if args.mode is not None:
        handle.set_mode(args.mode)
    policy = _resolve_policy(args.policy, args.game, handle.mode)
    cfg = PipelineConfig(clip=False)
    rng = random.Random(args.seed)
    handle.reset(args.seed)
    legal = handle.minimal_action_set()
    players = handle.players
    prev = [A.NOOP] * players
    record = args.record
    log_rows = []
    if record:
        os.makedirs(record, exist_ok=True)
    from .preprocessing import agent_indicator
    frame_idx = 0
    step_idx = 0
    stack = None
    policy.begin_episode(args.seed, 0)
    while frame_idx < args.steps and not handle.game_over():
        if getattr(policy, "needs_pixels", False) or record:
            frame = resize_area(to_grayscale(handle.screen_rgb()))
            if stack is None:
                stack = [frame] * cfg.stack
        obs = None
        feats = None
        if getattr(policy, "needs_pixels", False):
            import numpy as np
            obs = agent_indicator(np.stack(stack, axis=2), 0, players)
        if getattr(policy, "needs_features", False):
            feats = handle.game.ram_features(handle.state, 0)
        chosen = [policy.act(obs, feats, legal, rng)]
        for i in range(1, players):
            chosen.append(legal[rng.randrange(len(legal))])
        actions = [sticky(a, p, cfg.sticky_p, rng)
                   for a, p in zip(chosen, prev)]
        prev = list(actions)
        for _ in range(cfg.skip):
            if frame_idx >= args.steps or handle.game_over():
                break
            rewards = handle.act(actions)
            log_rows.append([frame_idx] + list(actions) + list(rewards))
            frame_idx += 1
        if record:
            raw = handle.screen_rgb()
            frame = resize_area(to_grayscale(raw))
            stack = stack[1:] + [frame]
            write_ppm(os.path.join(record, f"frame_{frame_idx:06d}.ppm"), raw)
            write_pgm(os.path.join(record, f"frame_{frame_idx:06d}.pgm"),
                      frame)
        step_idx += 1
    if record:
        with open(os.path.join(record, "log.csv"), "w", newline="") as f:
            w = csv.writer(f)
            w.writerow(["frame"]
                       + [f"a{i}" for i in range(players)]
                       + [f"r{i}" for i in range(players)])
            w.writerows(log_rows)
    print(f"frames={frame_idx} steps={step_idx} game_over={handle.game_over()}")
    return EXIT_OK


def _report_line(report):
    return (f"mean_reward_per_step={report.mean:.6f} "
            f"stderr={report.stderr:.6f} episodes={report.episodes} "
            f"opponent={report.opponent}")


def _write_metric_csv(path, rows):
    with open(path, "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["step", "mean_reward_per_step", "stderr", "episodes"])
        w.writerows(rows)


def cmd_train(args):
    config = TrainConfig(
        gamma=args.gamma, lr=args.lr, final_epsilon=args.final_epsilon,
        epsilon_timesteps=args.epsilon_timesteps, train_steps=args.steps,
        seed=args.seed, feature_mode=args.feature_mode)
    curve = [] if args.curve else None
    policy = train_self_play(args.game, args.mode, config, curve=curve,
                             eval_every=args.eval_every)
    save_policy(args.out, policy, config, args.game, args.mode)
    if args.curve:
        _write_metric_csv(args.curve, curve or [])
    report = evaluate_vs_random(policy, args.game, args.mode,
                                args.eval_episodes, args.seed + 1)
    print(_report_line(report))
    return EXIT_OK


def cmd_eval(args):
    policy = _resolve_policy(args.policy, args.game, args.mode)
    report = evaluate_vs_random(policy, args.game, args.mode, args.episodes,
                                args.seed)
    if args.out:
        _write_metric_csv(args.out, [(0, report.mean, report.stderr,
                                      report.episodes)])
    print(_report_line(report))
    return EXIT_OK


def cmd_tournament(args):
    if len(args.policy) < 2:
        print("tournament needs at least two --policy flags", file=sys.stderr)
        return EXIT_FLAGS
    policies = [_resolve_policy(p, args.game, args.mode) for p in args.policy]
    result = run_tournament(policies, args.game, args.mode,
                            args.episodes_per_pair, args.seed)
    for rank, idx in enumerate(result["ranking"], 1):
        print(f"{rank}. policy[{idx}]={args.policy[idx]} "
              f"mean={result['means'][idx]:.6f}")
    if args.out:
        with open(args.out, "w", newline="") as f:
            w = csv.writer(f)
            w.writerow(["policy_a", "policy_b", "mean_reward_per_step"])
            for (i, j), v in sorted(result["pairwise"].items()):
                w.writerow([args.policy[i], args.policy[j], v])
    return EXIT_OK


def cmd_bench(args):
    handle = load_game(args.game)
    if args.mode is not None:
        handle.set_mode(args.mode)
    legal = handle.minimal_action_set()
    players = handle.players
    rng = random.Random(0)

    def random_joint():
        return [legal[rng.randrange(len(legal))] for _ in range(players)]

    handle.reset(0)
    deadline = time.monotonic() + args.seconds / 2
    env_steps = 0
    t0 = time.monotonic()
    while time.monotonic() < deadline:
        if handle.game_over():
            handle.reset(env_steps)
        handle.act(random_joint())
        handle.screen_rgb()
        env_steps += 1
    env_sps = env_steps / (time.monotonic() - t0)

    from .preprocessing import PipelinedEnv
    env = PipelinedEnv(handle, PipelineConfig(clip=False), rng=rng)
    env.reset(1)
    deadline = time.monotonic() + args.seconds / 2
    pipe_steps = 0
    t0 = time.monotonic()
    while time.monotonic() < deadline:
        _, done = env.step(random_joint())
        env.observe(0)
        pipe_steps += 1
        if done:
            env.reset(pipe_steps)
    pipe_sps = pipe_steps / (time.monotonic() - t0)
    print(f"env_sps={int(env_sps)} pipeline_sps={int(pipe_sps)}")
    return EXIT_OK


# -- argument wiring ------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="maale",
                                description="multi-agent arcade environments")
    sub = p.add_subparsers(dest="command", required=True)
    seed = _default_seed()

    sp = sub.add_parser("list-games", help="print the game catalog")
    sp.add_argument("--format", choices=["table", "csv"], default="table")
    sp.set_defaults(fn=cmd_list_games)

    sp = sub.add_parser("modes", help="list a game's modes")
    sp.add_argument("--game", required=True)
    sp.add_argument("--players", type=int, default=None)
    sp.add_argument("--format", choices=["table", "csv"], default="table")
    sp.set_defaults(fn=cmd_modes)

    sp = sub.add_parser("rollout", help="run one episode, optionally recorded")
    sp.add_argument("--game", required=True)
    sp.add_argument("--mode", type=int, default=None)
    sp.add_argument("--seed", type=int, default=seed)
    sp.add_argument("--steps", type=int, default=1000,
                    help="raw frame cap")
    sp.add_argument("--record", default=None, metavar="DIR")
    sp.add_argument("--policy", default="random",
                    help="'random' or a checkpoint path")
    sp.set_defaults(fn=cmd_rollout)

    sp = sub.add_parser("train", help="self-play Q-learning")
    sp.add_argument("--game", required=True)
    sp.add_argument("--mode", type=int, required=True)
    sp.add_argument("--steps", type=int, default=100_000)
    sp.add_argument("--seed", type=int, default=seed)
    sp.add_argument("--lr", type=float, default=0.0001)
    sp.add_argument("--gamma", type=float, default=0.99)
    sp.add_argument("--final-epsilon", type=float, default=0.01)
    sp.add_argument("--epsilon-timesteps", type=int, default=200_000)
    sp.add_argument("--feature-mode", default="ram-like-state",
                    choices=["ram-like-state", "downsampled-pixels"])
    sp.add_argument("--out", default="policy.maq")
    sp.add_argument("--curve", default=None, metavar="CSV")
    sp.add_argument("--eval-every", type=int, default=0)
    sp.add_argument("--eval-episodes", type=int, default=20)
    sp.set_defaults(fn=cmd_train)

    sp = sub.add_parser("eval", help="evaluate a policy against random")
    sp.add_argument("--game", required=True)
    sp.add_argument("--mode", type=int, required=True)
    sp.add_argument("--policy", default="random")
    sp.add_argument("--episodes", type=int, default=100)
    sp.add_argument("--seed", type=int, default=seed)
    sp.add_argument("--out", default=None, metavar="CSV")
    sp.set_defaults(fn=cmd_eval)

    sp = sub.add_parser("tournament", help="round-robin between policies")
    sp.add_argument("--game", required=True)
    sp.add_argument("--mode", type=int, required=True)
    sp.add_argument("--policy", action="append", default=[])
    sp.add_argument("--episodes-per-pair", type=int, default=10)
    sp.add_argument("--seed", type=int, default=seed)
    sp.add_argument("--out", default=None, metavar="CSV")
    sp.set_defaults(fn=cmd_tournament)

    sp = sub.add_parser("bench", help="steps-per-second throughput")
    sp.add_argument("--game", required=True)
    sp.add_argument("--mode", type=int, default=None)
    sp.add_argument("--seconds", type=float, default=5.0)
    sp.set_defaults(fn=cmd_bench)

    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_FLAGS if e.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except (UnknownGameError, InvalidModeError, UnplayableModeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_UNKNOWN
    except MaaleError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FLAGS
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FLAGS


if __name__ == "__main__":
    sys.exit(main())
