/** Explorer app: load a framework, inspect the layered grounded solution,
 * pick stable solutions and their critical attack sets, and suspend edges in
 * what-if mode. All semantics come from the server; this file only routes
 * payloads into the scene builder and DOM events into state transitions.
 */

import { ApiClient, ApiRequestError } from "./api.js";
import { groundedScene, overlayScene, Scene } from "./scene.js";
import {
  ViewState,
  clearSelection,
  initialState,
  selectDelta,
  selectSolution,
  sessionLoaded,
  setHover,
  toggleWhatIf,
} from "./state.js";
import { renderSvg } from "./svg.js";
import type {
  CriticalResponse,
  GroundedResponse,
  OverlayResponse,
  StableResponse,
  SuspendResponse,
} from "./types.js";
import { edgeKey } from "./types.js";

const EXAMPLE_APX = [
  "arg(A). arg(B). arg(C). arg(D).",
  "att(A,B). att(B,C). att(C,D). att(D,C).",
].join("\n");

interface ServerData {
  grounded: GroundedResponse | null;
  stable: StableResponse | null;
  critical: Map<number, CriticalResponse>;
  overlay: OverlayResponse | null; // for the current (i, j)
  suspended: SuspendResponse | null; // for the current what-if set
}

class ExplorerApp {
  private state: ViewState = initialState;
  private data: ServerData = {
    grounded: null,
    stable: null,
    critical: new Map(),
    overlay: null,
    suspended: null,
  };

  constructor(
    private api: ApiClient,
    private root: Document,
  ) {}

  start(): void {
    const input = this.el<HTMLTextAreaElement>("#af-input");
    input.value = EXAMPLE_APX;
    this.el("#load-btn").addEventListener("click", () => {
      void this.loadFramework();
    });
    this.el("#clear-selection").addEventListener("click", () => {
      this.state = clearSelection(this.state);
      void this.refresh();
    });
    this.render(null);
  }

  private el<T extends Element = HTMLElement>(selector: string): T {
    const found = this.root.querySelector<T>(selector);
    if (!found) throw new Error(`missing element ${selector}`);
    return found;
  }

  private banner(message: string | null): void {
    const box = this.el("#error-banner");
    box.textContent = message ?? "";
    box.classList.toggle("visible", message !== null);
  }

  private async guard<T>(work: () => Promise<T>): Promise<T | null> {
    try {
      const result = await work();
      this.banner(null);
      return result;
    } catch (err) {
      if (err instanceof ApiRequestError) {
        this.banner(`${err.code}: ${err.message}`);
      } else {
        this.banner(String(err));
      }
      return null;
    }
  }

  private async loadFramework(): Promise<void> {
    const content = this.el<HTMLTextAreaElement>("#af-input").value;
    const format = this.el<HTMLSelectElement>("#format-select").value;
    const created = await this.guard(() => this.api.createSession(format, content));
    if (!created) return;
    this.state = sessionLoaded(this.state, created.id);
    this.data = {
      grounded: null,
      stable: null,
      critical: new Map(),
      overlay: null,
      suspended: null,
    };
    const sid = created.id;
    const grounded = await this.guard(() => this.api.grounded(sid));
    const stable = await this.guard(() => this.api.stable(sid));
    if (!grounded || !stable) return;
    this.data.grounded = grounded;
    this.data.stable = stable;
    for (const entry of stable.stable) {
      const critical = await this.guard(() => this.api.critical(sid, entry.index));
      if (critical) this.data.critical.set(entry.index, critical);
    }
    await this.refresh();
  }

  async refresh(): Promise<void> {
    const sid = this.state.sessionId;
    if (!sid || !this.data.grounded) {
      this.render(null);
      return;
    }
    if (this.state.stableIndex !== null && this.state.deltaIndex !== null) {
      const { stableIndex, deltaIndex } = this.state;
      const overlay = await this.guard(() =>
        this.api.overlay(sid, stableIndex, deltaIndex),
      );
      this.data.overlay = overlay;
      this.data.suspended = null;
    } else if (this.state.whatIf.length > 0) {
      // resolve keys against the attack list; names themselves may contain "->"
      const attacks = this.data.grounded.af.attacks;
      const edges = attacks.filter(([a, t]) =>
        this.state.whatIf.includes(edgeKey(a, t)),
      );
      this.data.suspended = await this.guard(() => this.api.suspend(sid, edges));
      this.data.overlay = null;
    } else {
      this.data.overlay = null;
      this.data.suspended = null;
    }
    this.render(this.buildScene());
  }

  buildScene(): Scene | null {
    const hover = this.state.hover
      ? { target: this.state.hover, actual: this.state.hoverActual }
      : null;
    if (this.state.stableIndex !== null && this.data.overlay?.layout) {
      return overlayScene(this.data.overlay.overlay, this.data.overlay.layout, hover);
    }
    if (this.state.whatIf.length > 0 && this.data.suspended) {
      return groundedScene(
        this.data.suspended.grounded,
        this.data.suspended.layout,
        hover,
      );
    }
    if (this.data.grounded?.layout) {
      return groundedScene(this.data.grounded.grounded, this.data.grounded.layout, hover);
    }
    return null;
  }

  private render(scene: Scene | null): void {
    const canvas = this.el("#canvas");
    if (!scene || scene.nodes.length === 0) {
      canvas.innerHTML =
        '<p class="hint">Load a framework to see its layered grounded solution.</p>';
    } else {
      canvas.innerHTML = renderSvg(scene);
      this.wireHover(canvas);
    }
    this.renderSolutionPicker();
    this.renderWhatIfPanel();
  }

  private wireHover(canvas: Element): void {
    for (const node of canvas.querySelectorAll<SVGGElement>("g.node")) {
      const id = node.dataset.id as string;
      node.addEventListener("mouseenter", (ev) => {
        this.state = setHover(this.state, id, (ev as MouseEvent).altKey);
        this.render(this.buildScene());
      });
      node.addEventListener("mouseleave", () => {
        this.state = setHover(this.state, null);
        this.render(this.buildScene());
      });
    }
  }

  private renderSolutionPicker(): void {
    const list = this.el("#solution-list");
    list.innerHTML = "";
    if (!this.data.stable) return;
    for (const entry of this.data.stable.stable) {
      const item = this.root.createElement("li");
      const button = this.root.createElement("button");
      const sets = this.data.critical.get(entry.index)?.sets ?? [];
      button.textContent = `S${entry.index} = {${entry.extension.join(", ")}} (${sets.length} Δ)`;
      button.classList.toggle("active", this.state.stableIndex === entry.index);
      button.addEventListener("click", () => {
        this.state =
          this.state.stableIndex === entry.index
            ? clearSelection(this.state)
            : selectSolution(this.state, entry.index);
        void this.refresh();
      });
      item.appendChild(button);
      if (this.state.stableIndex === entry.index && sets.length > 1) {
        for (const cs of sets) {
          const deltaBtn = this.root.createElement("button");
          deltaBtn.textContent = `Δ${entry.index},${cs.delta_index}`;
          deltaBtn.classList.add("delta");
          deltaBtn.classList.toggle("active", this.state.deltaIndex === cs.delta_index);
          deltaBtn.addEventListener("click", () => {
            this.state = selectDelta(this.state, cs.delta_index);
            void this.refresh();
          });
          item.appendChild(deltaBtn);
        }
      }
      list.appendChild(item);
    }
  }

  private renderWhatIfPanel(): void {
    const list = this.el("#whatif-list");
    list.innerHTML = "";
    const af = this.data.grounded?.af;
    if (!af) return;
    for (const [attacker, target] of af.attacks) {
      const key = edgeKey(attacker, target);
      const item = this.root.createElement("li");
      const box = this.root.createElement("input");
      box.type = "checkbox";
      box.id = `suspend-${key}`;
      box.checked = this.state.whatIf.includes(key);
      box.addEventListener("change", () => {
        this.state = toggleWhatIf(this.state, key);
        void this.refresh();
      });
      const label = this.root.createElement("label");
      label.htmlFor = box.id;
      label.textContent = `${attacker} → ${target}`;
      item.appendChild(box);
      item.appendChild(label);
      list.appendChild(item);
    }
  }
}

export function startApp(doc: Document = document): ExplorerApp {
  const app = new ExplorerApp(new ApiClient(""), doc);
  app.start();
  return app;
}
