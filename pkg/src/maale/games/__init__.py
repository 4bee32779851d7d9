"""Game registry and the machine-readable catalog."""

from .base import Game, ModeInfo, SCREEN_W, SCREEN_H
from .combat import Combat
from .entombed import Entombed
from .maze_craze import MazeCraze
from .othello import Othello
from .space_invaders import SpaceInvaders
from .video_olympics import VideoOlympics
from .warlords import Warlords

REGISTRY = {
    g.name: g for g in (
        Combat(), Entombed(), MazeCraze(), Othello(),
        SpaceInvaders(), VideoOlympics(), Warlords(),
    )
}


def get_game(name):
    return REGISTRY.get(name)


def catalog():
    """Per-game metadata rows: name, grouping, game theory, players, modes."""
    rows = []
    for name in sorted(REGISTRY):
        game = REGISTRY[name]
        players = sorted({info.players for info in game.modes.values()})
        rows.append({
            "name": name,
            "group": game.group,
            "game_theory": game.game_theory,
            "players": "/".join(str(p) for p in players),
            "modes": sorted(game.modes),
        })
    return rows


__all__ = [
    "Game", "ModeInfo", "REGISTRY", "get_game", "catalog",
    "SCREEN_W", "SCREEN_H",
    "Combat", "Entombed", "MazeCraze", "Othello", "SpaceInvaders",
    "VideoOlympics", "Warlords",
]
