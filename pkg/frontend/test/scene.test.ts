import { describe, expect, it } from "vitest";

import { groundedScene, overlayScene } from "../src/scene.js";
import { COLOR_CRITICAL, COLOR_IN, COLOR_IN_PALE, COLOR_UNDEC } from "../src/styles.js";
import type { GroundedResponse, OverlayResponse } from "../src/types.js";

import groundedFixture from "./fixtures/grounded.json";
import overlayFixture from "./fixtures/overlay_2_1.json";

const grounded = groundedFixture as unknown as GroundedResponse;
const overlay = overlayFixture as unknown as OverlayResponse;

describe("grounded scene", () => {
  const scene = groundedScene(grounded.grounded, grounded.layout!);

  it("places Fig.1 rows: layer 0, layer 1, band on top", () => {
    const byId = new Map(scene.nodes.map((n) => [n.id, n]));
    expect(byId.get("A")!.row).toBe(0);
    expect(byId.get("B")!.row).toBe(1);
    expect(byId.get("C")!.row).toBe(2);
    expect(byId.get("D")!.row).toBe(2);
    expect(scene.bandRow).toBe(2);
    expect(scene.rowCount).toBe(3);
  });

  it("labels and colors come straight from the payload", () => {
    const byId = new Map(scene.nodes.map((n) => [n.id, n]));
    expect(byId.get("A")!.label).toBe("A.0");
    expect(byId.get("A")!.fill).toBe(COLOR_IN);
    expect(byId.get("C")!.label).toBe("C.∞");
    expect(byId.get("C")!.fill).toBe(COLOR_UNDEC);
    for (const node of scene.nodes) {
      expect(node.kind).toBe(grounded.grounded.labels[node.id]);
      expect(node.length).toEqual(grounded.grounded.lengths[node.id]);
    }
  });

  it("carries one edge per payload row with matching types", () => {
    expect(scene.edges).toHaveLength(grounded.grounded.edge_types.length);
    for (const [attacker, target, type] of grounded.grounded.edge_types) {
      const edge = scene.edges.find((e) => e.from === attacker && e.to === target);
      expect(edge, `${attacker}->${target}`).toBeDefined();
      expect(edge!.type).toBe(type);
    }
  });

  it("dims everything outside the hovered provenance", () => {
    const hovered = groundedScene(grounded.grounded, grounded.layout!, {
      target: "B",
      actual: false,
    });
    const byId = new Map(hovered.nodes.map((n) => [n.id, n]));
    expect(byId.get("A")!.dimmed).toBe(false);
    expect(byId.get("B")!.dimmed).toBe(false);
    expect(byId.get("C")!.dimmed).toBe(true);
    expect(byId.get("D")!.dimmed).toBe(true);
    const ab = hovered.edges.find((e) => e.from === "A" && e.to === "B")!;
    const bc = hovered.edges.find((e) => e.from === "B" && e.to === "C")!;
    expect(ab.dimmed).toBe(false);
    expect(bc.dimmed).toBe(true);
  });
});

describe("overlay scene for S2 with delta {C->D}", () => {
  const scene = overlayScene(overlay.overlay, overlay.layout!);
  const byId = new Map(scene.nodes.map((n) => [n.id, n]));

  it("renders D with in-primed styling and primed label", () => {
    const d = byId.get("D")!;
    expect(d.kind).toBe("in_primed");
    expect(d.fill).toBe(COLOR_IN_PALE);
    expect(d.dashedOutline).toBe(true);
    expect(d.label).toBe("D.0′");
  });

  it("renders the critical edge dashed red", () => {
    const cd = scene.edges.find((e) => e.from === "C" && e.to === "D")!;
    expect(cd.type).toBe("critical");
    expect(cd.color).toBe(COLOR_CRITICAL);
    expect(cd.dash).toBe("dashed");
  });

  it("keeps unchanged arguments unprimed", () => {
    expect(byId.get("A")!.label).toBe("A.0");
    expect(byId.get("A")!.dashedOutline).toBe(false);
  });

  it("has no band and every label from the payload", () => {
    expect(scene.bandRow).toBeNull();
    for (const node of scene.nodes) {
      const payload = overlay.overlay.nodes[node.id];
      expect(node.kind).toBe(payload.effective);
      expect(node.length).toEqual(payload.effective_length);
    }
  });

  it("marks edges touching base-undecided endpoints as primed", () => {
    const dc = scene.edges.find((e) => e.from === "D" && e.to === "C")!;
    const ab = scene.edges.find((e) => e.from === "A" && e.to === "B")!;
    expect(dc.primed).toBe(true);
    expect(ab.primed).toBe(false);
  });
});

describe("re-render purity", () => {
  it("building the same scene twice gives deep-equal results", () => {
    const a = groundedScene(grounded.grounded, grounded.layout!);
    const b = groundedScene(grounded.grounded, grounded.layout!);
    expect(a).toEqual(b);
    const oa = overlayScene(overlay.overlay, overlay.layout!);
    const ob = overlayScene(overlay.overlay, overlay.layout!);
    expect(oa).toEqual(ob);
  });
});
