"""Evaluation and desk-scale training.

Episodes run through the full preprocessing pipeline (clipping off for
evaluation).  The trained baseline is a parameter-shared tabular
Q-learner over compact per-player features; evaluation follows the
trained-vs-random protocol with the average total reward per step metric.
"""

import math
import random
from dataclasses import dataclass, field

import numpy as np

from .core import load_game
from .errors import MaaleError, WrongArityError
from .preprocessing import PipelineConfig, PipelinedEnv, resize_area


@dataclass
class TrainConfig:
    gamma: float = 0.99
    lr: float = 0.0001
    final_epsilon: float = 0.01
    epsilon_timesteps: int = 200_000
    train_steps: int = 100_000
    seed: int = 0
    feature_mode: str = "ram-like-state"  # or "downsampled-pixels"
    # accepted for config compatibility, unused by the tabular learner
    extras: dict = field(default_factory=dict)

    def __post_init__(self):
        if not 0.0 < self.gamma <= 1.0:
            raise ValueError("gamma must be in (0, 1]")
        if not 0.0 <= self.final_epsilon <= 1.0:
            raise ValueError("final_epsilon must be in [0, 1]")
        if self.feature_mode not in ("ram-like-state", "downsampled-pixels"):
            raise ValueError(f"unknown feature mode {self.feature_mode!r}")


@dataclass
class EpisodeResult:
    totals: list
    length: int
    cause: str


@dataclass
class MetricReport:
    mean: float
    stderr: float
    episodes: int
    opponent: str
    seed: int

    def row(self):
        return {"mean_reward_per_step": self.mean, "stderr": self.stderr,
                "episodes": self.episodes, "opponent": self.opponent,
                "seed": self.seed}


def epsilon_at(step, final_epsilon, epsilon_timesteps):
    """Linear anneal from 1.0 at step 0 to final_epsilon at and after
    epsilon_timesteps."""
    if epsilon_timesteps <= 0 or step >= epsilon_timesteps:
        return final_epsilon
    return 1.0 + (final_epsilon - 1.0) * (step / epsilon_timesteps)


def _downsample_key(frame):
    # 84x84 -> 21x16-ish coarse grid, thresholded at the frame median
    coarse = frame[::4, ::5]
    return (coarse > 40).tobytes()


class Policy:
    """Action chooser for one seat; never leaves the minimal action set."""

    kind = "base"
    needs_pixels = False
    needs_features = False

    def begin_episode(self, seed, player_index):
        pass

    def act(self, obs, features, legal_actions, rng):
        raise NotImplementedError


class RandomPolicy(Policy):
    kind = "random"

    def act(self, obs, features, legal_actions, rng):
        return legal_actions[rng.randrange(len(legal_actions))]


class ScriptedPolicy(Policy):
    """Fixed action function of (step index, player index)."""

    kind = "scripted"

    def __init__(self, fn):
        self.fn = fn
        self._step = 0
        self._player = 0

    def begin_episode(self, seed, player_index):
        self._step = 0
        self._player = player_index

    def act(self, obs, features, legal_actions, rng):
        a = self.fn(self._step, self._player)
        self._step += 1
        return a


class TabularQPolicy(Policy):
    """Shared Q-table over discrete state keys; greedy ties break toward
    the lowest action id."""

    kind = "tabular-Q"

    def __init__(self, actions, feature_mode="ram-like-state", epsilon=0.0,
                 stack_depth=4):
        self.actions = list(actions)
        self.feature_mode = feature_mode
        self.epsilon = epsilon
        self.stack_depth = stack_depth
        self.table = {}

    @property
    def needs_pixels(self):
        return self.feature_mode == "downsampled-pixels"

    @property
    def needs_features(self):
        return self.feature_mode == "ram-like-state"

    def state_key(self, obs, features):
        if self.feature_mode == "ram-like-state":
            return features
        return _downsample_key(obs[:, :, self.stack_depth - 1])

    def qvalues(self, key):
        q = self.table.get(key)
        if q is None:
            q = np.zeros(len(self.actions))
            self.table[key] = q
        return q

    def greedy(self, key):
        q = self.table.get(key)
        if q is None:
            return self.actions[0]
        return self.actions[int(np.argmax(q))]  # argmax takes the first max

    def act(self, obs, features, legal_actions, rng):
        if self.epsilon > 0.0 and rng.random() < self.epsilon:
            return legal_actions[rng.randrange(len(legal_actions))]
        return self.greedy(self.state_key(obs, features))


def _features_for(env, policy, player):
    if not getattr(policy, "needs_features", False):
        return None
    return env.handle.game.ram_features(env.handle.state, player)


def run_episode(game, mode, policies, seed, max_steps=3000,
                pipeline=None, stall=None):
    """One full episode; returns per-player totals over unclipped rewards.

    Policies see their own indicator-tagged observation each pipeline
    step.  Pixel work is skipped entirely when no policy needs pixels.
    """
    handle = load_game(game, stall=stall)
    handle.set_mode(mode)
    if len(policies) != handle.players:
        raise WrongArityError(handle.players, len(policies))
    cfg = pipeline if pipeline is not None else PipelineConfig(clip=False)
    rng = random.Random((seed * 0x9E3779B1 + 0x5BD1E995) & 0xFFFFFFFFFFFF)
    env = PipelinedEnv(handle, cfg, rng=rng)
    env.reset(seed)
    legal = handle.minimal_action_set()
    want_obs = any(getattr(p, "needs_pixels", False) for p in policies)
    for i, p in enumerate(policies):
        p.begin_episode(seed, i)
    totals = [0.0] * handle.players
    steps = 0
    cause = "time"
    while steps < max_steps:
        joint = []
        for i, p in enumerate(policies):
            obs = env.observe(i) if getattr(p, "needs_pixels", False) else None
            feats = _features_for(env, p, i)
            joint.append(p.act(obs, feats, legal, rng))
        rewards, done = env.step(joint, want_obs=want_obs)
        for i, r in enumerate(rewards):
            totals[i] += r
        steps += 1
        if done:
            cause = handle.terminal_cause() or "time"
            break
    return EpisodeResult(totals, steps, cause)


def evaluate_vs_random(policy, game, mode, episodes, seed, max_steps=3000):
    """Seat 0 plays `policy` against fresh random opponents; reports the
    mean per-episode reward-per-step of seat 0."""
    if episodes < 1:
        raise ValueError("episodes must be >= 1")
    handle = load_game(game)
    handle.set_mode(mode)
    seats = handle.players
    per_step = []
    for e in range(episodes):
        policies = [policy] + [RandomPolicy() for _ in range(seats - 1)]
        result = run_episode(game, mode, policies, seed + e,
                             max_steps=max_steps)
        per_step.append(result.totals[0] / result.length)
    mean = float(np.mean(per_step))
    stderr = float(np.std(per_step, ddof=1) / math.sqrt(episodes)) \
        if episodes > 1 else 0.0
    return MetricReport(mean, stderr, episodes, "random", seed)


def random_baseline(game, mode, episodes, seed, max_steps=3000):
    return evaluate_vs_random(RandomPolicy(), game, mode, episodes, seed,
                              max_steps=max_steps)


def train_self_play(game, mode, config, curve=None, eval_every=0,
                    eval_episodes=20, max_episode_steps=3000):
    """Parameter-shared Q-learning: one table drives every seat.

    Training runs with reward clipping on, per the preprocessing rules.
    Returns the greedy policy over the shared table.
    """
    handle = load_game(game)
    handle.set_mode(mode)
    seats = handle.players
    legal = handle.minimal_action_set()
    policy = TabularQPolicy(legal, feature_mode=config.feature_mode)
    a_index = {a: i for i, a in enumerate(legal)}
    rng = random.Random(config.seed)
    cfg = PipelineConfig(clip=True)
    env = PipelinedEnv(handle, cfg, rng=rng)
    need_pixels = config.feature_mode == "downsampled-pixels"

    step = 0
    episode = 0
    while step < config.train_steps:
        env.reset(config.seed + episode * 10_007 + 1)
        episode += 1
        keys = [None] * seats
        ep_steps = 0
        done = False
        while not done and step < config.train_steps \
                and ep_steps < max_episode_steps:
            eps = epsilon_at(step, config.final_epsilon,
                             config.epsilon_timesteps)
            joint = []
            for i in range(seats):
                if need_pixels:
                    obs = env.observe(i)
                    keys[i] = policy.state_key(obs, None)
                else:
                    keys[i] = handle.game.ram_features(handle.state, i)
                if rng.random() < eps:
                    joint.append(legal[rng.randrange(len(legal))])
                else:
                    joint.append(policy.greedy(keys[i]))
            rewards, done = env.step(joint, want_obs=need_pixels)
            step += 1
            ep_steps += 1
            for i in range(seats):
                if need_pixels:
                    nkey = policy.state_key(env.observe(i), None)
                else:
                    nkey = handle.game.ram_features(handle.state, i)
                q = policy.qvalues(keys[i])
                ai = a_index[joint[i]]
                target = rewards[i]
                if not done:
                    target += config.gamma * float(np.max(policy.qvalues(nkey)))
                q[ai] += config.lr * (target - q[ai])
            if curve is not None and eval_every and step % eval_every == 0:
                report = evaluate_vs_random(policy, game, mode,
                                            eval_episodes, config.seed + 777)
                curve.append((step, report.mean, report.stderr,
                              report.episodes))
    policy.epsilon = 0.0
    return policy


def tournament(policies, game, mode, episodes_per_pair, seed):
    """Round-robin over all ordered pairs of a 2-player zero-sum game."""
    handle = load_game(game)
    handle.set_mode(mode)
    if handle.players != 2:
        raise MaaleError("tournament requires a 2-player game mode")
    if len(policies) < 2:
        raise MaaleError("tournament requires at least 2 policies")
    n = len(policies)
    sums = [0.0] * n
    counts = [0] * n
    pairwise = {}
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            vals = []
            for e in range(episodes_per_pair):
                res = run_episode(game, mode, [policies[i], policies[j]],
                                  seed + 1_000 * (i * n + j) + e)
                vals.append(res.totals[0] / res.length)
                sums[i] += vals[-1]
                counts[i] += 1
                sums[j] += -vals[-1]
                counts[j] += 1
            pairwise[(i, j)] = float(np.mean(vals))
    means = [sums[k] / counts[k] for k in range(n)]
    ranking = sorted(range(n), key=lambda k: -means[k])
    return {"ranking": ranking, "means": means, "pairwise": pairwise}
