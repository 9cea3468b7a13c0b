/** Pure scene construction: server payloads + view state in, a flat list of
 * positioned node/edge specs out. Rendering and event wiring live elsewhere;
 * every label, length, and type below is copied verbatim from the payload.
 */

import { EDGE_STROKE, INFINITY_SIGN, NODE_FILL, PRIME_SIGN } from "./styles.js";
import { provenanceSelection } from "./provenance.js";
import type {
  EdgeTypeName,
  EdgeTypeRow,
  GroundedPayload,
  LayoutPayload,
  LengthValue,
  OverlayPayload,
} from "./types.js";
import { edgeKey } from "./types.js";

export interface SceneNode {
  id: string;
  row: number; // 0 = bottom layer; the undec band is the top row
  slot: number;
  kind: string; // in | out | undec | in_primed | out_primed
  length: LengthValue;
  label: string;
  fill: string;
  dashedOutline: boolean;
  dimmed: boolean;
}

export interface SceneEdge {
  from: string;
  to: string;
  type: EdgeTypeName;
  color: string;
  dash: "solid" | "dashed" | "dotted";
  width: number;
  primed: boolean;
  dimmed: boolean;
}

export interface Scene {
  nodes: SceneNode[];
  edges: SceneEdge[];
  rowCount: number;
  slotCount: number;
  bandRow: number | null;
}

export interface HoverSpec {
  target: string;
  actual: boolean;
}

function rowOf(layout: LayoutPayload, name: string, bandRow: number): number {
  const pos = layout.positions[name];
  return pos.layer === "undec" ? bandRow : pos.layer;
}

function buildScene(
  layout: LayoutPayload,
  edgeTypes: EdgeTypeRow[],
  nodeSpec: (name: string) => Omit<SceneNode, "row" | "slot" | "dimmed">,
  primedEdge: (attacker: string, target: string) => boolean,
  hover: HoverSpec | null,
): Scene {
  const layerValues = Object.keys(layout.layers).map((k) => Number(k));
  const maxLayer = layerValues.length > 0 ? Math.max(...layerValues) : -1;
  const hasBand = layout.undec_band.length > 0;
  const bandRow = hasBand ? maxLayer + 1 : -1;

  const selection = hover
    ? provenanceSelection(edgeTypes, hover.target, hover.actual)
    : null;

  const names = Object.keys(layout.positions).sort();
  const nodes: SceneNode[] = names.map((name) => ({
    ...nodeSpec(name),
    row: rowOf(layout, name, bandRow),
    slot: layout.positions[name].slot,
    dimmed: selection !== null && !selection.nodes.has(name),
  }));

  const edges: SceneEdge[] = edgeTypes.map(([attacker, target, type]) => {
    const stroke = EDGE_STROKE[type];
    return {
      from: attacker,
      to: target,
      type,
      color: stroke.color,
      dash: stroke.dash,
      width: stroke.width,
      primed: primedEdge(attacker, target),
      dimmed: selection !== null && !selection.edges.has(edgeKey(attacker, target)),
    };
  });

  const slotCount = Math.max(
    1,
    ...nodes.map((n) => n.slot + 1),
  );
  return {
    nodes,
    edges,
    rowCount: Math.max(maxLayer + 1, 0) + (hasBand ? 1 : 0),
    slotCount,
    bandRow: hasBand ? bandRow : null,
  };
}

export function groundedScene(
  grounded: GroundedPayload,
  layout: LayoutPayload,
  hover: HoverSpec | null = null,
): Scene {
  return buildScene(
    layout,
    grounded.edge_types,
    (name) => {
      const label = grounded.labels[name];
      const length = grounded.lengths[name];
      const text =
        length === "inf" ? `${name}.${INFINITY_SIGN}` : `${name}.${length}`;
      return {
        id: name,
        kind: label,
        length,
        label: text,
        fill: NODE_FILL[label],
        dashedOutline: false,
      };
    },
    () => false,
    hover,
  );
}

export function overlayScene(
  overlay: OverlayPayload,
  layout: LayoutPayload,
  hover: HoverSpec | null = null,
): Scene {
  const baseUndec = new Set(
    Object.entries(overlay.nodes)
      .filter(([, n]) => n.base === "undec")
      .map(([name]) => name),
  );
  return buildScene(
    layout,
    overlay.edge_types,
    (name) => {
      const node = overlay.nodes[name];
      const length = node.effective_length;
      const text = node.length_changed
        ? `${name}.${length}${PRIME_SIGN}`
        : `${name}.${length}`;
      return {
        id: name,
        kind: node.effective,
        length,
        label: text,
        fill: NODE_FILL[node.effective],
        dashedOutline:
          node.effective === "in_primed" || node.effective === "out_primed",
      };
    },
    (attacker, target) => baseUndec.has(attacker) || baseUndec.has(target),
    hover,
  );
}
