"""Observation and reward pipeline: sticky actions, grayscale, 84x84 area
resize, frame skip, frame stack, per-player indicator channels, and
train-only reward clipping.

The stacked tensor is channel-last uint8: stack_depth grayscale frames
oldest to newest, then one constant indicator channel per player (255 on
the observing player's channel, 0 elsewhere).
"""

import struct
from collections import deque
from dataclasses import dataclass

import numpy as np

OUT_H = OUT_W = 84
INDICATOR_HOT = 255

_LUMA = np.array([0.299, 0.587, 0.114])


@dataclass
class PipelineConfig:
    sticky_p: float = 0.25
    skip: int = 4
    stack: int = 4
    clip: bool = False  # True during training only
    resize: tuple = (OUT_H, OUT_W)

    def __post_init__(self):
        if not 0.0 <= self.sticky_p < 1.0:
            raise ValueError("sticky_p must be in [0, 1)")
        if self.skip < 1 or self.stack < 1:
            raise ValueError("skip and stack must be >= 1")


def sticky(action, prev, sticky_p, rng):
    """Repeat the previous action with probability sticky_p."""
    if sticky_p > 0.0 and rng.random() < sticky_p:
        return prev
    return action


def to_grayscale(screen):
    """Luma conversion, rounded half-up to uint8."""
    return np.floor(screen @ _LUMA + 0.5).astype(np.uint8)


_weight_cache = {}


def _area_weights(src, dst):
    """Row-weight matrix W (dst x src): W @ v is the exact box average."""
    key = (src, dst)
    w = _weight_cache.get(key)
    if w is None:
        scale = src / dst
        w = np.zeros((dst, src))
        for o in range(dst):
            lo = o * scale
            hi = (o + 1) * scale
            i0 = int(np.floor(lo))
            i1 = int(np.ceil(hi))
            for i in range(i0, min(i1, src)):
                overlap = min(hi, i + 1) - max(lo, i)
                if overlap > 0:
                    w[o, i] = overlap / scale
        _weight_cache[key] = w
    return w


def resize_area(img, out_h=OUT_H, out_w=OUT_W):
    """Area-interpolated resize; each output pixel is the mean of its
    fractional source box, rounded half-up."""
    h, w = img.shape
    wr = _area_weights(h, out_h)
    wc = _area_weights(w, out_w)
    out = wr @ img.astype(np.float64) @ wc.T
    return np.floor(out + 0.5).astype(np.uint8)


def clip_reward(r):
    return min(1.0, max(-1.0, float(r)))


def agent_indicator(stacked, player_index, num_players):
    """Append num_players constant channels; only the observer's is hot."""
    if not 0 <= player_index < num_players:
        raise ValueError("player_index out of range")
    h, w, _ = stacked.shape
    ind = np.zeros((h, w, num_players), dtype=np.uint8)
    ind[:, :, player_index] = INDICATOR_HOT
    return np.concatenate([stacked, ind], axis=2)


class FrameStack:
    """Sliding window of the last `stack` processed frames."""

    def __init__(self, stack):
        self.stack = stack
        self.frames = deque(maxlen=stack)

    def reset(self, frame):
        self.frames.clear()
        for _ in range(self.stack):
            self.frames.append(frame)

    def push(self, frame):
        self.frames.append(frame)

    def tensor(self):
        return np.stack(self.frames, axis=2)


def obs_to_bytes(tensor):
    """Raw binary export: int32-LE height/width/channels header, then
    row-major channel-last bytes."""
    h, w, c = tensor.shape
    return struct.pack("<iii", h, w, c) + tensor.tobytes()


def obs_from_bytes(data):
    h, w, c = struct.unpack_from("<iii", data)
    arr = np.frombuffer(data, dtype=np.uint8, offset=12)
    return arr.reshape(h, w, c)


class PipelinedEnv:
    """Joint-action wrapper running the full pipeline over one handle.

    Sticky-action state is tracked per player; the processed frame stack
    is shared because every player sees the same screen.  Observations are
    computed lazily: step(..., want_obs=False) skips all pixel work, which
    random-policy evaluation exploits.
    """

    def __init__(self, handle, config=None, rng=None):
        self.handle = handle
        self.config = config if config is not None else PipelineConfig()
        self.rng = rng
        self.prev_actions = None
        self.stack = FrameStack(self.config.stack)
        self.steps = 0
        self._stack_seeded = False

    @property
    def num_players(self):
        return self.handle.players

    def _processed_frame(self):
        return resize_area(to_grayscale(self.handle.screen_rgb()),
                           *self.config.resize)

    def reset(self, seed, rng=None):
        if rng is not None:
            self.rng = rng
        self.handle.reset(seed)
        self.prev_actions = [0] * self.num_players
        self.steps = 0
        self._stack_seeded = False

    def _ensure_stack(self):
        if not self._stack_seeded:
            self.stack.reset(self._processed_frame())
            self._stack_seeded = True

    def observe(self, player_index):
        self._ensure_stack()
        return agent_indicator(self.stack.tensor(), player_index,
                               self.num_players)

    def step(self, actions, want_obs=True):
        """Apply sticky actions, repeat for `skip` frames, sum rewards.

        Returns (rewards, terminal).  Rewards are clipped per player when
        the config says so.
        """
        cfg = self.config
        if want_obs:
            self._ensure_stack()  # seed from the pre-step frame
        if cfg.sticky_p > 0.0:
            actions = [sticky(a, p, cfg.sticky_p, self.rng)
                       for a, p in zip(actions, self.prev_actions)]
        self.prev_actions = list(actions)
        totals = [0] * self.num_players
        terminal = False
        for _ in range(cfg.skip):
            rewards = self.handle.act(actions)
            for i, r in enumerate(rewards):
                totals[i] += r
            if self.handle.game_over():
                terminal = True
                break
        self.steps += 1
        if want_obs:
            self.stack.push(self._processed_frame())
        if cfg.clip:
            totals = [clip_reward(r) for r in totals]
        return totals, terminal
