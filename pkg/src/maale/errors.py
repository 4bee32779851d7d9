"""Exception types raised by the engine."""


class MaaleError(Exception):
    """Base class for all engine errors."""


class UnknownGameError(MaaleError):
    """Requested game name is not registered."""

    def __init__(self, name, valid_names):
        self.name = name
        self.valid_names = sorted(valid_names)
        super().__init__(
            f"unknown game {name!r}; valid games: {', '.join(self.valid_names)}"
        )


class InvalidModeError(MaaleError):
    """Mode value is not in the game's mode registry."""

    def __init__(self, game, mode, valid_modes=None):
        self.game = game
        self.mode = mode
        msg = f"invalid mode {mode} for game {game!r}"
        if valid_modes is not None:
            msg += f"; valid modes: {sorted(valid_modes)}"
        super().__init__(msg)


class UnplayableModeError(MaaleError):
    """Mode is registered in the catalog but its dynamics are not implemented."""

    def __init__(self, game, mode):
        self.game = game
        self.mode = mode
        super().__init__(
            f"mode {mode} of game {game!r} is registered but not playable"
        )


class NotResetError(MaaleError):
    """Operation requires reset() to have been called."""


class WrongArityError(MaaleError):
    """Joint action length does not match the mode's player count."""

    def __init__(self, expected, got):
        self.expected = expected
        self.got = got
        super().__init__(f"expected {expected} actions, got {got}")


class TerminalStateError(MaaleError):
    """act() called after the episode terminated."""
