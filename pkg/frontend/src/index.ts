/**
 * TypeScript binding for the maale multi-agent arcade engine.
 *
 * Each ALEInterface owns one Python subprocess running bridge.py and
 * speaks line-delimited JSON over its stdio. Method names mirror the
 * engine's camelCase scripting surface verbatim.
 */

import { spawn, ChildProcessWithoutNullStreams } from "node:child_process";
import { existsSync } from "node:fs";
import { createInterface, Interface } from "node:readline";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

export interface ScreenRGB {
  height: number;
  width: number;
  channels: number;
  /** Row-major RGB bytes, height * width * channels long. */
  data: Uint8Array;
}

export class EngineError extends Error {
  readonly kind: string;

  constructor(kind: string, message: string) {
    super(message);
    this.name = "EngineError";
    this.kind = kind;
  }
}

interface BridgeResponse {
  id: number;
  ok: boolean;
  result?: unknown;
  error?: { type: string; message: string };
}

interface Pending {
  resolve: (value: unknown) => void;
  reject: (err: Error) => void;
}

const HERE = dirname(fileURLToPath(import.meta.url));
const BRIDGE_CANDIDATES = [
  join(HERE, "..", "bridge.py"),
  join(HERE, "..", "..", "bridge.py"),
];

function bridgePath(): string {
  // dist/ and src/ both sit one level below the package root
  for (const p of BRIDGE_CANDIDATES) {
    if (existsSync(p)) return p;
  }
  return BRIDGE_CANDIDATES[0];
}

export interface ALEInterfaceOptions {
  /** Python executable used to host the engine; default "python3". */
  python?: string;
}

export class ALEInterface {
  private proc: ChildProcessWithoutNullStreams;
  private reader: Interface;
  private pending = new Map<number, Pending>();
  private nextId = 1;
  private closed = false;

  constructor(options: ALEInterfaceOptions = {}) {
    const python = options.python ?? "python3";
    this.proc = spawn(python, [bridgePath()], {
      stdio: ["pipe", "pipe", "pipe"],
    });
    this.reader = createInterface({ input: this.proc.stdout });
    this.reader.on("line", (line) => this.onLine(line));
    this.proc.on("exit", () => {
      this.closed = true;
      const err = new EngineError("BridgeExit", "engine process exited");
      for (const p of this.pending.values()) p.reject(err);
      this.pending.clear();
    });
  }

  private onLine(line: string): void {
    let resp: BridgeResponse;
    try {
      resp = JSON.parse(line) as BridgeResponse;
    } catch {
      return; // stray diagnostics on stdout are ignored
    }
    const pending = this.pending.get(resp.id);
    if (!pending) return;
    this.pending.delete(resp.id);
    if (resp.ok) {
      pending.resolve(resp.result);
    } else {
      const e = resp.error ?? { type: "Unknown", message: "unknown error" };
      pending.reject(new EngineError(e.type, e.message));
    }
  }

  private call<T>(op: string, args: Record<string, unknown> = {}): Promise<T> {
    if (this.closed) {
      return Promise.reject(
        new EngineError("BridgeExit", "engine process exited"),
      );
    }
    const id = this.nextId++;
    const promise = new Promise<T>((resolve, reject) => {
      this.pending.set(id, {
        resolve: resolve as (v: unknown) => void,
        reject,
      });
    });
    this.proc.stdin.write(JSON.stringify({ id, op, args }) + "\n");
    return promise;
  }

  /** Opens a built-in game by name. */
  load_game(name: string): Promise<void> {
    return this.call("load_game", { name }).then(() => undefined);
  }

  /** ROM-path alias for load_game: "ROMS/space_invaders.bin" works. */
  loadROM(path: string): Promise<void> {
    return this.load_game(path);
  }

  getAvailableModes(numPlayers?: number): Promise<number[]> {
    return this.call("available_modes", { num_players: numPlayers ?? null });
  }

  setMode(mode: number): Promise<void> {
    return this.call("set_mode", { mode }).then(() => undefined);
  }

  reset_game(seed = 0): Promise<void> {
    return this.call("reset", { seed }).then(() => undefined);
  }

  /** Joint action for every player; returns one reward per player. */
  act(actions: number[]): Promise<number[]> {
    return this.call("act", { actions });
  }

  game_over(): Promise<boolean> {
    return this.call("game_over");
  }

  allLives(): Promise<number[]> {
    return this.call("all_lives");
  }

  getMinimalActionSet(): Promise<number[]> {
    return this.call("minimal_action_set");
  }

  async getScreenRGB(): Promise<ScreenRGB> {
    const raw = await this.call<{
      height: number;
      width: number;
      channels: number;
      data: string;
    }>("screen_rgb");
    return {
      height: raw.height,
      width: raw.width,
      channels: raw.channels,
      data: new Uint8Array(Buffer.from(raw.data, "base64")),
    };
  }

  close(): void {
    if (!this.closed) {
      this.closed = true;
      this.proc.stdin.end();
      this.proc.kill();
    }
  }
}

export default ALEInterface;
