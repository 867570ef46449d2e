// Cross-view hover linkage. Hovering a color asks the server for its
// similar-color set (a transient auto selection), outlines exactly that set
// in all three views, and restores the previous selection on leave. The
// client never decides similarity itself.

import type { SessionApi } from "./api";
import type { UiStore } from "./state";

export class HoverLinkage {
  private api: SessionApi;
  private store: UiStore;
  private root: HTMLElement;
  private threshold: number | undefined;
  private restoreMembers: string[] | null = null;
  private hovering = false;
  private queue: Promise<void> = Promise.resolve();

  constructor(
    api: SessionApi,
    store: UiStore,
    root: HTMLElement,
    threshold?: number,
  ) {
    this.api = api;
    this.store = store;
    this.root = root;
    this.threshold = threshold;
  }

  /** Serialize hover operations so leave never overtakes enter. */
  private enqueue(op: () => Promise<void>): Promise<void> {
    this.queue = this.queue.then(op, op);
    return this.queue;
  }

  hoverColor(color: string, view: "theme" | "palette"): Promise<void> {
    return this.enqueue(async () => {
      if (!this.hovering) {
        this.restoreMembers = this.store.selection
          ? [...this.store.selection.members]
          : null;
        this.hovering = true;
      }
      const body =
        this.threshold === undefined
          ? { auto: { theme: color } }
          : { auto: { theme: color, threshold: this.threshold } };
      const selection = await this.api.setSelection(body);
      this.store.syncSelection(selection);
      this.store.setHover({ view, color });
      this.clearOutlines();
      if (selection) {
        this.outline(new Set(selection.members), new Set(selection.elements));
      }
    });
  }

  hoverElement(elementId: string): Promise<void> {
    return this.enqueue(async () => {
      let entry: HTMLElement | null = null;
      for (const node of this.root.querySelectorAll<HTMLElement>(
        ".element-entry",
      )) {
        if (node.dataset.elementId === elementId) {
          entry = node;
          break;
        }
      }
      const colors = new Set<string>();
      for (const dot of entry?.querySelectorAll<HTMLElement>(".color-bubble") ??
        []) {
        if (dot.dataset.color) colors.add(dot.dataset.color);
      }
      this.store.setHover({ view: "elements", elementId });
      this.clearOutlines();
      this.outline(colors, new Set([elementId]));
    });
  }

  leave(): Promise<void> {
    return this.enqueue(async () => {
      this.clearOutlines();
      this.store.setHover(null);
      if (!this.hovering) return;
      this.hovering = false;
      const restored = this.restoreMembers
        ? await this.api.setSelection({ manual: this.restoreMembers })
        : await this.api.setSelection({ clear: true });
      this.restoreMembers = null;
      this.store.syncSelection(restored);
    });
  }

  /** Wait for all pending hover traffic; test hook. */
  settled(): Promise<void> {
    return this.queue;
  }

  private outline(colors: Set<string>, elementIds: Set<string>): void {
    for (const node of this.root.querySelectorAll<HTMLElement>(
      ".theme-swatch, .palette-block",
    )) {
      if (colors.has(node.dataset.color ?? "")) node.classList.add("linked");
    }
    for (const node of this.root.querySelectorAll<HTMLElement>(
      ".element-entry",
    )) {
      if (elementIds.has(node.dataset.elementId ?? "")) {
        node.classList.add("linked");
      }
    }
  }

  private clearOutlines(): void {
    for (const node of this.root.querySelectorAll<HTMLElement>(".linked")) {
      node.classList.remove("linked");
    }
  }
}
