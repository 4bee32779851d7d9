import random

import pytest

from maale import REGISTRY, load_game


def playable_modes():
    """Yields (game_name, mode) for every playable registered mode."""
    for name in sorted(REGISTRY):
        game = REGISTRY[name]
        for mode in sorted(game.modes):
            if game.modes[mode].playable:
                yield name, mode


def all_modes():
    for name in sorted(REGISTRY):
        for mode in sorted(REGISTRY[name].modes):
            yield name, mode


def random_rollout(name, mode, seed, steps, collect_screens=False):
    """Plays uniform-random actions; returns a trace dict for comparisons."""
    handle = load_game(name)
    handle.set_mode(mode)
    handle.reset(seed)
    legal = handle.minimal_action_set()
    rng = random.Random(seed ^ 0xA5A5A5)
    rewards, lives, screens = [], [], []
    for _ in range(steps):
        if handle.game_over():
            break
        joint = [legal[rng.randrange(len(legal))]
                 for _ in range(handle.players)]
        rewards.append(tuple(handle.act(joint)))
        lives.append(tuple(handle.all_lives()))
        if collect_screens:
            screens.append(handle.screen_rgb().tobytes())
    if collect_screens and not screens:
        screens.append(handle.screen_rgb().tobytes())
    return {"rewards": rewards, "lives": lives, "screens": screens,
            "over": handle.game_over(), "cause": handle.terminal_cause()}


@pytest.fixture
def rng():
    return random.Random(1234)
