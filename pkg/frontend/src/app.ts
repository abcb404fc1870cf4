/** Browser entry point: wires the controller and renderers into the page. */

import { ApiClient } from "./api.js";
import { AppController } from "./controller.js";
import {
  renderBanner,
  renderExplanation,
  renderQueue,
  renderThresholdPanel,
} from "./render.js";

function byId(id: string): HTMLElement {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el;
}

function draw(controller: AppController): void {
  const s = controller.state;
  byId("banner").innerHTML = renderBanner(s.banner);
  byId("queue").innerHTML = renderQueue(s.page, s.selectedId);
  byId("explanation").innerHTML = renderExplanation(s.bundle);
  byId("thresholds").innerHTML = renderThresholdPanel(s);
  bindThresholdInputs(controller);
}

function bindThresholdInputs(controller: AppController): void {
  for (const key of ["autolink", "review"] as const) {
    const input = byId(key) as HTMLInputElement;
    input.addEventListener("input", () => {
      controller.setDraft({ [key]: Number(input.value) });
      // re-render only the panel so slider focus is preserved elsewhere
      byId("thresholds").innerHTML = renderThresholdPanel(controller.state);
      bindThresholdInputs(controller);
    });
  }
  byId("apply-thresholds").addEventListener("click", () => {
    void controller.applyThresholds().then(() => draw(controller));
  });
}

export function main(): void {
  const api = new ApiClient("", {
    stewardId: localStorage.getItem("stewardId") ?? "steward",
  });
  const controller = new AppController(api);

  byId("queue").addEventListener("click", (event) => {
    const target = event.target as HTMLElement;
    const action = target.dataset["action"];
    const id = target.dataset["id"];
    if (!action || !id) return;
    event.preventDefault();
    const run =
      action === "select"
        ? controller.select(id)
        : controller.decide(id, action === "accept" ? "accept" : "reject");
    void run.then(() => draw(controller));
  });

  byId("filter").addEventListener("change", (event) => {
    const value = (event.target as HTMLSelectElement).value;
    void controller.setFilter(value).then(() => draw(controller));
  });

  byId("watchlist-form").addEventListener("submit", (event) => {
    event.preventDefault();
    const raw = (byId("watchlist-ids") as HTMLInputElement).value;
    const ids = raw
      .split(/[\s,]+/)
      .filter((s) => s.length > 0)
      .map(Number);
    if (ids.length === 0 || ids.some((n) => !Number.isInteger(n))) {
      controller.state.banner = "Watchlist must be comma-separated node ids.";
      draw(controller);
      return;
    }
    void controller.addWatchlist(ids, 25).then(
      () => draw(controller),
      (err) => {
        controller.state.banner = String(err);
        draw(controller);
      },
    );
  });

  void controller.refresh().then(() => draw(controller));
}

main();
