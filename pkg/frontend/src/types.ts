/** Payload shapes served by the af-prov HTTP API (schema af-prov/1). */

export type NodeLabel = "in" | "out" | "undec";
export type EffectiveLabel = "in" | "out" | "in_primed" | "out_primed";

export type EdgeTypeName =
  | "successful_primary"
  | "successful_secondary"
  | "failed"
  | "undecided"
  | "blunder_b1"
  | "blunder_b2"
  | "blunder_b3"
  | "critical";

/** Lengths are natural numbers, or "inf" for undecided arguments. */
export type LengthValue = number | "inf";

/** [attacker, target, type] rows, sorted. */
export type EdgeTypeRow = [string, string, EdgeTypeName];

export interface AfPayload {
  arguments: string[];
  attacks: [string, string][];
}

export interface GroundedPayload {
  labels: Record<string, NodeLabel>;
  lengths: Record<string, LengthValue>;
  edge_types: EdgeTypeRow[];
}

export interface LayoutPayload {
  subject: "grounded" | "overlay";
  layers: Record<string, string[]>;
  undec_band: string[];
  positions: Record<string, { layer: number | "undec"; slot: number }>;
  stable_index?: number;
  delta_index?: number;
}

export interface GroundedResponse {
  af: AfPayload;
  grounded: GroundedPayload;
  layout?: LayoutPayload;
}

export interface StableEntry {
  index: number;
  extension: string[];
  labels: Record<string, "in" | "out">;
}

export interface StableResponse {
  stable: StableEntry[];
}

export interface CriticalSetEntry {
  delta_index: number;
  edges: [string, string][];
}

export interface CriticalResponse {
  stable_index: number;
  minimality: "cardinality" | "subset";
  sets: CriticalSetEntry[];
}

export interface OverlayNodePayload {
  base: NodeLabel;
  effective: EffectiveLabel;
  base_length: LengthValue;
  effective_length: LengthValue;
  length_changed: boolean;
}

export interface OverlayPayload {
  stable_index: number;
  delta_index: number;
  minimality: string;
  delta_edges: [string, string][];
  nodes: Record<string, OverlayNodePayload>;
  edge_types: EdgeTypeRow[];
}

export interface OverlayResponse {
  overlay: OverlayPayload;
  layout?: LayoutPayload;
}

export interface SuspendResponse {
  suspended: [string, string][];
  af: AfPayload;
  grounded: GroundedPayload;
  layout: LayoutPayload;
}

export interface ApiError {
  code: string;
  detail: string;
}

export const edgeKey = (attacker: string, target: string): string =>
  `${attacker}->${target}`;
