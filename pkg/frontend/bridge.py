"""Line-delimited JSON bridge exposing the installed maale engine.

One request per stdin line: {"id": n, "op": name, "args": {...}}.
One response per stdout line: {"id": n, "ok": true, "result": ...} or
{"id": n, "ok": false, "error": {"type": ..., "message": ...}}.
Screens travel base64-encoded with explicit dimensions.
"""

import base64
import json
import sys

import maale


class Server:
    def __init__(self):
        self.handle = None

    # -- ops --------------------------------------------------------------

    def op_ping(self, args):
        return "pong"

    def op_load_game(self, args):
        name = args["name"]
        # accept ROM-style paths for drop-in familiarity
        if "/" in name or name.endswith(".bin"):
            name = name.rsplit("/", 1)[-1].rsplit(".", 1)[0]
        self.handle = maale.load_game(name)
        return {"game": self.handle.game.name, "mode": self.handle.mode}

    def _require_handle(self):
        if self.handle is None:
            raise maale.MaaleError("no game loaded")
        return self.handle

    def op_available_modes(self, args):
        return self._require_handle().available_modes(args.get("num_players"))

    def op_set_mode(self, args):
        self._require_handle().set_mode(args["mode"])
        return None

    def op_reset(self, args):
        self._require_handle().reset(args.get("seed", 0))
        return None

    def op_act(self, args):
        rewards = self._require_handle().act(args["actions"])
        return [float(r) for r in rewards]

    def op_game_over(self, args):
        return self._require_handle().game_over()

    def op_all_lives(self, args):
        return self._require_handle().all_lives()

    def op_minimal_action_set(self, args):
        return self._require_handle().minimal_action_set()

    def op_screen_rgb(self, args):
        screen = self._require_handle().screen_rgb()
        h, w, c = screen.shape
        return {"height": h, "width": w, "channels": c,
                "data": base64.b64encode(screen.tobytes()).decode("ascii")}

    # -- loop -------------------------------------------------------------

    def dispatch(self, req):
        op = getattr(self, "op_" + req["op"], None)
        if op is None:
            raise ValueError(f"unknown op {req['op']!r}")
        return op(req.get("args", {}))

    def run(self):
        out = sys.stdout
        for line in sys.stdin:
            line = line.strip()
            if not line:
                continue
            req = json.loads(line)
            try:
                resp = {"id": req["id"], "ok": True,
                        "result": self.dispatch(req)}
            except Exception as exc:
                resp = {"id": req.get("id"), "ok": False,
                        "error": {"type": type(exc).__name__,
                                  "message": str(exc)}}
            out.write(json.dumps(resp) + "\n")
            out.flush()


if __name__ == "__main__":
    Server().run()
