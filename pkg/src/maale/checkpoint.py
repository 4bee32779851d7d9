"""Versioned binary checkpoints for trained policies.

Layout: magic bytes "MAQ1", uint32-LE payload length, then a JSON payload
echoing the training config and carrying the Q-table (state keys are
JSON-encoded tuples or hex strings for pixel keys).
"""

import json
import struct

import numpy as np

from .harness import TabularQPolicy, TrainConfig

MAGIC = b"MAQ1"


def _encode_key(key):
    if isinstance(key, bytes):
        return "px:" + key.hex()
    return "ft:" + json.dumps(list(key))


def _decode_key(s):
    tag, body = s[:3], s[3:]
    if tag == "px:":
        return bytes.fromhex(body)
    return tuple(json.loads(body))


def save_policy(path, policy, config, game, mode):
    payload = {
        "game": game,
        "mode": mode,
        "actions": policy.actions,
        "feature_mode": policy.feature_mode,
        "config": {
            "gamma": config.gamma,
            "lr": config.lr,
            "final_epsilon": config.final_epsilon,
            "epsilon_timesteps": config.epsilon_timesteps,
            "train_steps": config.train_steps,
            "seed": config.seed,
            "feature_mode": config.feature_mode,
            "extras": config.extras,
        },
        "table": {_encode_key(k): [float(v) for v in q]
                  for k, q in policy.table.items()},
    }
    blob = json.dumps(payload).encode()
    with open(path, "wb") as f:
        f.write(MAGIC)
        f.write(struct.pack("<I", len(blob)))
        f.write(blob)


def load_policy(path):
    """Returns (policy, config, game, mode)."""
    with open(path, "rb") as f:
        magic = f.read(4)
        if magic != MAGIC:
            raise ValueError(f"not a policy checkpoint: bad magic {magic!r}")
        (length,) = struct.unpack("<I", f.read(4))
        payload = json.loads(f.read(length).decode())
    policy = TabularQPolicy(payload["actions"],
                            feature_mode=payload["feature_mode"])
    for k, q in payload["table"].items():
        policy.table[_decode_key(k)] = np.array(q)
    config = TrainConfig(**payload["config"])
    return policy, config, payload["game"], payload["mode"]
