/** View state and its transitions.
 *
 * Overlay selection (stable index + delta index) and what-if suspension are
 * mutually exclusive: entering one mode leaves the other. All transitions
 * return fresh state objects so re-rendering stays a pure function of state
 * plus server data.
 */

export interface ViewState {
  sessionId: string | null;
  stableIndex: number | null;
  deltaIndex: number | null;
  whatIf: string[]; // sorted edge keys
  hover: string | null;
  hoverActual: boolean;
}

export const initialState: ViewState = {
  sessionId: null,
  stableIndex: null,
  deltaIndex: null,
  whatIf: [],
  hover: null,
  hoverActual: false,
};

export function sessionLoaded(state: ViewState, sessionId: string): ViewState {
  return { ...initialState, sessionId };
}

export function selectSolution(state: ViewState, index: number): ViewState {
  return {
    ...state,
    stableIndex: index,
    deltaIndex: 1,
    whatIf: [],
    hover: null,
  };
}

export function selectDelta(state: ViewState, deltaIndex: number): ViewState {
  if (state.stableIndex === null) return state;
  return { ...state, deltaIndex, whatIf: [] };
}

export function clearSelection(state: ViewState): ViewState {
  return { ...state, stableIndex: null, deltaIndex: null, hover: null };
}

export function toggleWhatIf(state: ViewState, edge: string): ViewState {
  const next = state.whatIf.includes(edge)
    ? state.whatIf.filter((e) => e !== edge)
    : [...state.whatIf, edge].sort();
  return {
    ...state,
    whatIf: next,
    stableIndex: null,
    deltaIndex: null,
  };
}

export function setHover(
  state: ViewState,
  target: string | null,
  actual = false,
): ViewState {
  return { ...state, hover: target, hoverActual: actual };
}

export const inOverlayMode = (s: ViewState): boolean =>
  s.stableIndex !== null && s.deltaIndex !== null;

export const inWhatIfMode = (s: ViewState): boolean => s.whatIf.length > 0;

/** Invariant helper used by tests and debug assertions. */
export const modesExclusive = (s: ViewState): boolean =>
  !(inOverlayMode(s) && inWhatIfMode(s));
