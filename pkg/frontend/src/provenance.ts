/** Provenance subgraph traversal over server-provided edge types.
 *
 * This walks the attacked-to-attacker direction from a root, keeping only
 * explanation-relevant edges. No semantics are recomputed here: labels,
 * lengths, and edge types all come from the server payload.
 */

import type { EdgeTypeName, EdgeTypeRow } from "./types.js";
import { edgeKey } from "./types.js";

const BLUNDERS: ReadonlySet<EdgeTypeName> = new Set([
  "blunder_b1",
  "blunder_b2",
  "blunder_b3",
]);

export interface ProvenanceSelection {
  nodes: Set<string>;
  edges: Set<string>; // edgeKey(attacker, target)
}

export function provenanceSelection(
  edgeTypes: EdgeTypeRow[],
  root: string,
  includeSecondary: boolean,
): ProvenanceSelection {
  const incoming = new Map<string, EdgeTypeRow[]>();
  for (const row of edgeTypes) {
    const list = incoming.get(row[1]) ?? [];
    list.push(row);
    incoming.set(row[1], list);
  }
  const keep = (type: EdgeTypeName): boolean => {
    if (BLUNDERS.has(type) || type === "critical") return false;
    if (!includeSecondary && type === "successful_secondary") return false;
    return true;
  };
  const nodes = new Set<string>([root]);
  const edges = new Set<string>();
  const frontier = [root];
  while (frontier.length > 0) {
    const current = frontier.pop() as string;
    for (const [attacker, target, type] of incoming.get(current) ?? []) {
      if (!keep(type)) continue;
      edges.add(edgeKey(attacker, target));
      if (!nodes.has(attacker)) {
        nodes.add(attacker);
        frontier.push(attacker);
      }
    }
  }
  return { nodes, edges };
}
