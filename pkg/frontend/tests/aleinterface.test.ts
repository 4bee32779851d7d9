/**
 * Binding tests: the two-player episode loop runs to completion, the API
 * delegates errors, and a replayed action log byte-matches the native
 * CLI rollout's recorded screens and rewards.
 */

import { execFileSync } from "node:child_process";
import { mkdtempSync, readFileSync, readdirSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, describe, expect, it } from "vitest";

import { ALEInterface, EngineError } from "../src/index.js";

const open: ALEInterface[] = [];

function makeALE(): ALEInterface {
  const ale = new ALEInterface();
  open.push(ale);
  return ale;
}

afterAll(() => {
  for (const ale of open) ale.close();
});

/** Deterministic xorshift so the episode loop needs no engine RNG. */
function makeRng(seed: number): () => number {
  let s = seed >>> 0 || 1;
  return () => {
    s ^= s << 13;
    s ^= s >>> 17;
    s ^= s << 5;
    s >>>= 0;
    return s / 0x100000000;
  };
}

describe("episode loop", () => {
  it("runs the two-player space invaders loop to completion", async () => {
    const ale = makeALE();
    await ale.loadROM("ROMS/space_invaders.bin");
    const minimalActions = await ale.getMinimalActionSet();
    expect(minimalActions).toContain(0);
    const modes = await ale.getAvailableModes(2);
    expect(modes.length).toBeGreaterThan(0);
    await ale.setMode(modes[0]);
    await ale.reset_game(7);

    const rng = makeRng(99);
    const policy = (_obs: Uint8Array) =>
      minimalActions[Math.floor(rng() * minimalActions.length)];

    let frames = 0;
    while (!(await ale.game_over())) {
      const observation = (await ale.getScreenRGB()).data;
      const a1 = policy(observation);
      const a2 = policy(observation);
      const rewards = await ale.act([a1, a2]);
      expect(rewards).toHaveLength(2);
      frames += 1;
      expect(frames).toBeLessThan(200_000);
    }
    expect(frames).toBeGreaterThan(0);
  }, 120_000);
});

describe("API delegation", () => {
  it("reports the screen as 210x160x3", async () => {
    const ale = makeALE();
    await ale.load_game("video_olympics");
    await ale.reset_game(0);
    const screen = await ale.getScreenRGB();
    expect([screen.height, screen.width, screen.channels]).toEqual(
      [210, 160, 3],
    );
    expect(screen.data.length).toBe(210 * 160 * 3);
  });

  it("rejects wrong-arity act calls", async () => {
    const ale = makeALE();
    await ale.load_game("warlords");
    await ale.reset_game(0);
    await expect(ale.act([0, 0])).rejects.toBeInstanceOf(EngineError);
  });

  it("surfaces unknown game names with the engine message", async () => {
    const ale = makeALE();
    await expect(ale.load_game("pitfall")).rejects.toThrow(/unknown game/);
  });

  it("filters modes by player count", async () => {
    const ale = makeALE();
    await ale.load_game("video_olympics");
    const two = await ale.getAvailableModes(2);
    const four = await ale.getAvailableModes(4);
    expect(two).toContain(4);
    expect(four).toContain(6);
    expect(two).not.toContain(6);
  });

  it("reports lives per player", async () => {
    const ale = makeALE();
    await ale.load_game("space_invaders");
    await ale.reset_game(3);
    expect(await ale.allLives()).toEqual([1, 1]);
  });
});

interface LogRow {
  frame: number;
  actions: number[];
  rewards: number[];
}

function parseLog(path: string, players: number): LogRow[] {
  const lines = readFileSync(path, "utf8").trim().split("\n").slice(1);
  return lines.map((line) => {
    const cells = line.split(",").map(Number);
    return {
      frame: cells[0],
      actions: cells.slice(1, 1 + players),
      rewards: cells.slice(1 + players, 1 + 2 * players),
    };
  });
}

function readPPM(path: string): Uint8Array {
  const buf = readFileSync(path);
  // P6 header: magic, dimensions, maxval, each newline-terminated
  let off = 0;
  for (let fields = 0; fields < 3; ) {
    if (buf[off] === 0x0a) fields += 1;
    off += 1;
  }
  return new Uint8Array(buf.subarray(off));
}

describe("byte equality with the native rollout", () => {
  it("replaying the CLI action log reproduces screens and rewards", async () => {
    const rec = mkdtempSync(join(tmpdir(), "maale-rec-"));
    try {
      execFileSync("python3", [
        "-m", "maale.cli", "rollout",
        "--game", "space_invaders", "--mode", "49",
        "--seed", "11", "--steps", "120",
        "--record", rec,
      ]);
      const rows = parseLog(join(rec, "log.csv"), 2);
      expect(rows.length).toBeGreaterThan(0);
      const screenFiles = new Set(
        readdirSync(rec).filter((f) => f.endsWith(".ppm")),
      );

      const ale = makeALE();
      await ale.load_game("space_invaders");
      await ale.setMode(49);
      await ale.reset_game(11);
      for (const row of rows) {
        const rewards = await ale.act(row.actions);
        expect(rewards).toEqual(row.rewards);
        const name = `frame_${String(row.frame + 1).padStart(6, "0")}.ppm`;
        if (screenFiles.has(name)) {
          const native = readPPM(join(rec, name));
          const bound = (await ale.getScreenRGB()).data;
          expect(Buffer.from(bound).equals(Buffer.from(native))).toBe(true);
        }
      }
    } finally {
      rmSync(rec, { recursive: true, force: true });
    }
  }, 120_000);
});
