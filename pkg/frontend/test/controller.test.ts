import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { AppController, thresholdsValid } from "../src/controller.js";
import { FakeServer, FixtureScore } from "./fakeServer.js";

const SCORES: FixtureScore[] = [
  { pair: ["a", "b"], total: 30 },
  { pair: ["c", "d"], total: 18 },
  { pair: ["e", "f"], total: 5 },
];

function makeController(server: FakeServer): AppController {
  return new AppController(
    new ApiClient("http://fake", { fetchImpl: server.fetch }),
  );
}

describe("review flow", () => {
  let log: Parameters<typeof FakeServer.prototype.append>[0][];
  let server: FakeServer;
  let controller: AppController;

  beforeEach(async () => {
    log = [];
    server = new FakeServer(log, SCORES);
    server.enqueue(0, 7, 0.91);
    server.enqueue(1, 8, 0.84);
    server.enqueue(2, 9, 0.77);
    controller = makeController(server);
    await controller.refresh();
  });

  it("lists pending predictions in server order", () => {
    expect(controller.state.page.predictions.map((p) => p.probability)).toEqual(
      [0.91, 0.84, 0.77],
    );
  });

  it("decided items leave the pending filter", async () => {
    await controller.decide("p000000-000007", "accept", "looks right");
    expect(controller.state.page.total).toBe(2);
    expect(
      controller.state.page.predictions.some((p) => p.id === "p000000-000007"),
    ).toBe(false);
  });

  it("decisions persist across a reload (fresh controller, same log)", async () => {
    await controller.decide("p000000-000007", "accept");
    await controller.decide("p000001-000008", "reject");
    await controller.decide("p000002-000009", "accept");

    const reloadedServer = new FakeServer(log, SCORES);
    const reloaded = makeController(reloadedServer);
    await reloaded.refresh();
    expect(reloaded.state.page.total).toBe(0); // nothing pending anymore

    await reloaded.setFilter("");
    const statuses = new Map(
      reloaded.state.page.predictions.map((p) => [p.id, p.status]),
    );
    expect(statuses.get("p000000-000007")).toBe("Accepted");
    expect(statuses.get("p000001-000008")).toBe("Rejected");
    expect(statuses.get("p000002-000009")).toBe("Accepted");
  });

  it("a conflicting second decision shows a banner and rolls back", async () => {
    // another steward decides first, directly against the server
    server.append({
      type: "feedback",
      prediction_id: "p000000-000007",
      status: "Rejected",
      note: "",
    });
    await controller.decide("p000000-000007", "accept");
    expect(controller.state.banner).toContain("Already decided");
    const record = controller.state.page.predictions.find(
      (p) => p.id === "p000000-000007",
    );
    expect(record?.status).toBe("Pending"); // optimistic flip rolled back
  });

  it("selecting a prediction loads its validated explanation bundle", async () => {
    await controller.select("p000000-000007");
    expect(controller.state.bundle?.source).toBe(0);
    expect(controller.state.bundle?.target).toBe(7);
    expect(controller.state.bundle?.paths.paths.length).toBeGreaterThan(0);
  });
});

describe("threshold panel", () => {
  let server: FakeServer;
  let controller: AppController;

  beforeEach(async () => {
    server = new FakeServer([], SCORES);
    controller = makeController(server);
    await controller.refresh();
  });

  it("validates review <= autolink", () => {
    expect(thresholdsValid({ autolink: 24, review: 12 })).toBe(true);
    expect(thresholdsValid({ autolink: 12, review: 12 })).toBe(true);
    expect(thresholdsValid({ autolink: 11, review: 12 })).toBe(false);
    expect(thresholdsValid({ autolink: NaN, review: 12 })).toBe(false);
  });

  it("blocks inverted sliders client-side: no request is sent", async () => {
    controller.setDraft({ autolink: 10, review: 20 });
    expect(controller.canApplyThresholds).toBe(false);
    await controller.applyThresholds();
    expect(controller.state.banner).toContain("must not exceed");
    // server thresholds unchanged: no PUT went through
    expect(server.thresholds).toEqual({ autolink: 24, review: 12 });
  });

  it("applying valid thresholds updates the server recount", async () => {
    controller.setDraft({ autolink: 17, review: 4 });
    await controller.applyThresholds();
    expect(controller.state.thresholds?.counts).toEqual({
      link: 2,
      review: 1,
      nolink: 0,
    });
  });

  it("raising autolink never grows the auto-link set", async () => {
    let previous = Infinity;
    for (const autolink of [5, 18, 30, 40]) {
      controller.setDraft({ autolink, review: 2 });
      await controller.applyThresholds();
      const link = controller.state.thresholds!.counts.link;
      expect(link).toBeLessThanOrEqual(previous);
      previous = link;
    }
  });
});
