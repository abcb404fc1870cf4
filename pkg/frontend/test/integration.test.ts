/** End-to-end tests against the real Python review service.
 *
 * A fixture server (small trained model + match scores + text corpus) is
 * spawned per suite; "reload" is a fresh controller, and "restart" kills the
 * process and starts a new one over the same review log.
 */

import { ChildProcess, spawn } from "node:child_process";
import { mkdtempSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { AppController } from "../src/controller.js";
import { renderEvidencePane, renderExplanation } from "../src/render.js";

const PORT = 8791;
const BASE = `http://127.0.0.1:${PORT}`;
const SCRIPT = join(dirname(fileURLToPath(import.meta.url)), "fixture_server.py");

let workdir: string;
let server: ChildProcess | null = null;

function startServer(): Promise<ChildProcess> {
  const child = spawn("python3", [SCRIPT, String(PORT), workdir], {
    stdio: ["ignore", "pipe", "inherit"],
  });
  return new Promise((resolve, reject) => {
    child.on("error", reject);
    child.on("exit", (code) =>
      reject(new Error(`fixture server exited early (${code})`)),
    );
    void (async () => {
      const deadline = Date.now() + 120_000;
      while (Date.now() < deadline) {
        try {
          const res = await fetch(`${BASE}/health`);
          if (res.status === 200) {
            child.removeAllListeners("exit");
            resolve(child);
            return;
          }
        } catch {
          /* not up yet */
        }
        await new Promise((r) => setTimeout(r, 300));
      }
      reject(new Error("fixture server never became healthy"));
    })();
  });
}

function stopServer(child: ChildProcess): Promise<void> {
  return new Promise((resolve) => {
    child.once("exit", () => resolve());
    child.kill("SIGTERM");
  });
}

beforeAll(async () => {
  workdir = mkdtempSync(join(tmpdir(), "steward-ui-"));
  server = await startServer();
}, 180_000);

afterAll(async () => {
  if (server) await stopServer(server);
  rmSync(workdir, { recursive: true, force: true });
});

function makeController(): AppController {
  return new AppController(new ApiClient(BASE, { stewardId: "it-steward" }));
}

describe("steward UI against the live service", () => {
  it("decides 3 fixture predictions and they persist across a reload", async () => {
    const controller = makeController();
    const enqueued = await controller.addWatchlist([0], 5);
    expect(enqueued).toBeGreaterThanOrEqual(3);
    await controller.refresh();
    const [a, b, c] = controller.state.page.predictions;
    expect(a && b && c).toBeTruthy();

    await controller.decide(a!.id, "accept", "clear household overlap");
    await controller.decide(b!.id, "reject", "no shared context");
    await controller.decide(c!.id, "accept");

    // reload: a brand new client and controller, no shared state
    const reloaded = makeController();
    await reloaded.refresh();
    const pendingIds = reloaded.state.page.predictions.map((p) => p.id);
    expect(pendingIds).not.toContain(a!.id);
    expect(pendingIds).not.toContain(b!.id);
    expect(pendingIds).not.toContain(c!.id);

    await reloaded.setFilter("");
    const byId = new Map(
      reloaded.state.page.predictions.map((p) => [p.id, p]),
    );
    expect(byId.get(a!.id)?.status).toBe("Accepted");
    expect(byId.get(b!.id)?.status).toBe("Rejected");
    expect(byId.get(c!.id)?.status).toBe("Accepted");
    expect(byId.get(a!.id)?.note).toBe("clear household overlap");
    expect(byId.get(a!.id)?.steward_id).toBe("it-steward");
  }, 60_000);

  it("decisions survive a full service restart (log replay)", async () => {
    const before = makeController();
    await before.setFilter("");
    const decided = before.state.page.predictions.filter(
      (p) => p.status !== "Pending",
    );
    expect(decided.length).toBeGreaterThanOrEqual(3);

    await stopServer(server!);
    server = await startServer();

    const after = makeController();
    await after.setFilter("");
    const byId = new Map(after.state.page.predictions.map((p) => [p.id, p]));
    for (const p of decided) {
      expect(byId.get(p.id)?.status).toBe(p.status);
      expect(byId.get(p.id)?.note).toBe(p.note);
    }
  }, 180_000);

  it("a second decision on the same prediction surfaces a conflict banner", async () => {
    const controller = makeController();
    await controller.setFilter("");
    const decided = controller.state.page.predictions.find(
      (p) => p.status === "Accepted",
    );
    expect(decided).toBeTruthy();
    await controller.decide(decided!.id, "reject");
    expect(controller.state.banner).toContain("Already decided");
  }, 60_000);

  it("renders the live explanation bundle, including non-empty evidence", async () => {
    const controller = makeController();
    await controller.setFilter("");
    const record = controller.state.page.predictions.find(
      (p) => p.source === 0,
    );
    expect(record).toBeTruthy();
    await controller.select(record!.id);
    const bundle = controller.state.bundle!;
    const html = renderExplanation(bundle);
    expect(html).toContain("Connecting paths");
    expect(html).toContain("Attribute comparison");
    expect(html).toContain("Neighbor Jaccard");
    // node 0 is alice smith; the corpus mentions her, so evidence is non-empty
    expect(bundle.evidence.snippets.length).toBeGreaterThan(0);
    expect(html).toContain("<mark>");
    expect(html).toContain(bundle.evidence.snippets[0]!.source_record_id);
  }, 60_000);

  it("renders empty evidence explicitly for a pair the corpus never mentions", async () => {
    const controller = makeController();
    // node 8 (iris novak) never appears in the 3-line corpus; its candidate
    // targets include others the corpus also never names
    await controller.addWatchlist([8], 6);
    await controller.setFilter("");
    for (const p of controller.state.page.predictions) {
      if (p.source !== 8 && p.target !== 8) continue;
      await controller.select(p.id);
      if (controller.state.bundle!.evidence.snippets.length === 0) {
        const html = renderEvidencePane(controller.state.bundle!);
        expect(html).toContain("No verification evidence found");
        return;
      }
    }
    throw new Error("expected at least one empty-evidence prediction");
  }, 60_000);

  it("threshold recounts come from the server and inverted drafts never PUT", async () => {
    const controller = makeController();
    await controller.refresh();
    // fixture scores: 30, 18, 5
    controller.setDraft({ autolink: 20, review: 10 });
    await controller.applyThresholds();
    expect(controller.state.thresholds?.counts).toEqual({
      link: 1,
      review: 1,
      nolink: 1,
    });

    controller.setDraft({ autolink: 5, review: 25 });
    await controller.applyThresholds();
    expect(controller.state.banner).toContain("must not exceed");
    const fresh = makeController();
    await fresh.refresh();
    // server still holds the last valid setting: the inverted PUT was blocked
    expect(fresh.state.thresholds?.autolink).toBe(20);
    expect(fresh.state.thresholds?.review).toBe(10);

    // monotonic sweep matched against the server recount
    let previousLink = Infinity;
    for (const autolink of [4, 17, 25, 40]) {
      controller.setDraft({ autolink, review: 2 });
      await controller.applyThresholds();
      const counts = controller.state.thresholds!.counts;
      expect(counts.link).toBeLessThanOrEqual(previousLink);
      expect(counts.link + counts.review + counts.nolink).toBe(3);
      previousLink = counts.link;
    }
  }, 60_000);
});
