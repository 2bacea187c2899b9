/** Application state: panel mode follows the server's selection
 * classification, and staleness tracks the event stream so a render
 * never lags the announced revision by more than one fetch. */

import type { ChangeEvent, DocumentPayload, SelectionKind } from "./types.js";

export type PanelMode = "Creator" | "ModifierButton" | "ModifierMenu" | "Disabled";

export interface AppState {
  mode: PanelMode;
  selectedId: string | null;
  document: DocumentPayload | null;
  /** Revision of the document currently rendered. */
  revision: number;
  /** Highest revision announced by the event stream. */
  announcedRevision: number;
  notice: string | null;
}

export const initialState: AppState = {
  mode: "Disabled",
  selectedId: null,
  document: null,
  revision: -1,
  announcedRevision: -1,
  notice: null,
};

export type Action =
  | { type: "selection"; kind: SelectionKind; nodeId: string | null }
  | { type: "open-creator" }
  | { type: "document-loaded"; document: DocumentPayload }
  | { type: "stream-event"; event: ChangeEvent }
  | { type: "notice"; message: string }
  | { type: "clear-notice" };

/** The server told us what the id is; never guess client-side. */
function modeForSelection(kind: SelectionKind): PanelMode {
  switch (kind) {
    case "menu":
      return "ModifierMenu";
    case "button":
      return "ModifierButton";
    case "none":
      return "Disabled";
  }
}

export function reduce(state: AppState, action: Action): AppState {
  switch (action.type) {
    case "selection":
      return {
        ...state,
        mode: modeForSelection(action.kind),
        selectedId: action.kind === "none" ? null : action.nodeId,
      };
    case "open-creator":
      return { ...state, mode: "Creator", selectedId: null };
    case "document-loaded": {
      const revision = action.document.revision;
      return {
        ...state,
        document: action.document,
        revision,
        announcedRevision: Math.max(state.announcedRevision, revision),
      };
    }
    case "stream-event":
      return {
        ...state,
        announcedRevision: Math.max(state.announcedRevision, action.event.revision),
      };
    case "notice":
      return { ...state, notice: action.message };
    case "clear-notice":
      return { ...state, notice: null };
  }
}

/** True when the event stream has announced a revision we have not
 * fetched yet; the shell reacts by reloading the document. */
export function isStale(state: AppState): boolean {
  return state.announcedRevision > state.revision;
}
