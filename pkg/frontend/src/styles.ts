/** Color and stroke conventions, identical to the DOT export palette. */

import type { EdgeTypeName, EffectiveLabel, NodeLabel } from "./types.js";

export const COLOR_IN = "#4A90D9";
export const COLOR_OUT = "#F5A623";
export const COLOR_UNDEC = "#F8E71C";
export const COLOR_IN_PALE = "#A0BCD9";
export const COLOR_OUT_PALE = "#F5D5A1";
export const COLOR_CRITICAL = "#D0021B";
export const COLOR_BLUNDER = "#9B9B9B";
export const COLOR_FAILED = "#000000";

export const NODE_FILL: Record<NodeLabel | EffectiveLabel, string> = {
  in: COLOR_IN,
  out: COLOR_OUT,
  undec: COLOR_UNDEC,
  in_primed: COLOR_IN_PALE,
  out_primed: COLOR_OUT_PALE,
};

export interface EdgeStroke {
  color: string;
  dash: "solid" | "dashed" | "dotted";
  width: number;
}

export const EDGE_STROKE: Record<EdgeTypeName, EdgeStroke> = {
  successful_primary: { color: COLOR_IN, dash: "solid", width: 2 },
  successful_secondary: { color: COLOR_IN, dash: "dashed", width: 2 },
  failed: { color: COLOR_FAILED, dash: "solid", width: 1 },
  undecided: { color: COLOR_UNDEC, dash: "solid", width: 2 },
  blunder_b1: { color: COLOR_BLUNDER, dash: "dotted", width: 1 },
  blunder_b2: { color: COLOR_BLUNDER, dash: "dotted", width: 1 },
  blunder_b3: { color: COLOR_BLUNDER, dash: "dotted", width: 1 },
  critical: { color: COLOR_CRITICAL, dash: "dashed", width: 2.5 },
};

export const INFINITY_SIGN = "∞";
export const PRIME_SIGN = "′";
