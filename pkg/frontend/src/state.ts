// Client-side mirror of one session. The selection mirror is only ever
// written from server responses, so it always matches the server after each
// round trip.

import type {
  SelectionJson,
  ShiftChannel,
  StateJson,
} from "./types";

export type HoverTarget =
  | { view: "theme" | "palette"; color: string }
  | { view: "elements"; elementId: string };

export type PendingEdit = {
  channel: ShiftChannel;
  value: number;
};

export class UiStore {
  sessionId: string | null = null;
  state: StateJson | null = null;
  playhead = 0;
  zoom = 50;
  hover: HoverTarget | null = null;
  selection: SelectionJson = null;
  pendingEdit: PendingEdit | null = null;

  private listeners = new Set<() => void>();

  subscribe(listener: () => void): () => void {
    this.listeners.add(listener);
    return () => this.listeners.delete(listener);
  }

  private emit(): void {
    for (const listener of this.listeners) listener();
  }

  /** Absorb a full GET /state response. */
  syncState(state: StateJson): void {
    this.sessionId = state.session_id;
    this.state = state;
    this.selection = state.selection;
    if (state.playhead !== null) this.playhead = state.playhead;
    this.emit();
  }

  /** Absorb a POST /selection response. */
  syncSelection(selection: SelectionJson): void {
    this.selection = selection;
    if (this.state) this.state.selection = selection;
    this.emit();
  }

  setHover(hover: HoverTarget | null): void {
    this.hover = hover;
    this.emit();
  }

  setZoom(zoom: number): void {
    this.zoom = Math.min(100, Math.max(0, zoom));
    this.emit();
  }

  setPlayhead(frame: number): void {
    this.playhead = frame;
    this.emit();
  }

  selectionSize(): number {
    return this.selection ? this.selection.members.length : 0;
  }
}
