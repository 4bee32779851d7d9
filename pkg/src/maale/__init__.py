"""maale: multi-agent arcade learning environments.

Seven deterministic, seed-reproducible recreations of classic two- and
four-player arcade games behind a single stepping API, plus the standard
observation pipeline, evaluation harness, and tabular self-play trainer.
"""

from . import actions
from .checkpoint import load_policy, save_policy
from .core import GameHandle, StallConfig, load_game
from .errors import (
    InvalidModeError, MaaleError, NotResetError, TerminalStateError,
    UnknownGameError, UnplayableModeError, WrongArityError,
)
from .games import REGISTRY, catalog, get_game
from .harness import (
    EpisodeResult, MetricReport, Policy, RandomPolicy, ScriptedPolicy,
    TabularQPolicy, TrainConfig, epsilon_at, evaluate_vs_random,
    random_baseline, run_episode, tournament, train_self_play,
)
from .preprocessing import (
    FrameStack, PipelineConfig, PipelinedEnv, agent_indicator, clip_reward,
    obs_from_bytes, obs_to_bytes, resize_area, sticky, to_grayscale,
)

__version__ = "0.1.0"

__all__ = [
    "GameHandle", "StallConfig", "load_game", "REGISTRY", "catalog",
    "get_game", "actions",
    "MaaleError", "UnknownGameError", "InvalidModeError",
    "UnplayableModeError", "NotResetError", "WrongArityError",
    "TerminalStateError",
    "PipelineConfig", "PipelinedEnv", "FrameStack", "sticky", "to_grayscale",
    "resize_area", "clip_reward", "agent_indicator", "obs_to_bytes",
    "obs_from_bytes",
    "TrainConfig", "EpisodeResult", "MetricReport", "Policy", "RandomPolicy",
    "ScriptedPolicy", "TabularQPolicy", "epsilon_at", "run_episode",
    "evaluate_vs_random", "random_baseline", "train_self_play", "tournament",
    "save_policy", "load_policy",
    "__version__",
]
