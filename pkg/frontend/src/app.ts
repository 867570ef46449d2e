// Composition root: one Studio instance per session, wiring the three
// synchronized views, the picker panel, playback, and hover linkage.

import { SessionApi } from "./api";
import { clear, el } from "./dom";
import { HoverLinkage } from "./linkage";
import { AnimationEngine, Player } from "./player";
import { makeSliderPanel, SliderPanel } from "./sliders";
import { UiStore } from "./state";
import type { BlockJson, EditResponse } from "./types";
import { patchElementColors, renderElements } from "./views/elements";
import { applyZoom, patchPaletteColors, renderPalette } from "./views/palette";
import { renderTheme } from "./views/theme";

export type StudioOptions = {
  playerEngine?: AnimationEngine;
  hoverThreshold?: number;
  previewThrottleMs?: number;
};

export class Studio {
  readonly api: SessionApi;
  readonly store: UiStore;
  readonly linkage: HoverLinkage;
  readonly sliders: SliderPanel;
  readonly player: Player;

  readonly root: HTMLElement;
  readonly themeEl: HTMLElement;
  readonly paletteEl: HTMLElement;
  readonly elementsEl: HTMLElement;
  readonly playerEl: HTMLElement;

  private playheadSync: Promise<void> = Promise.resolve();
  private playbackSync: Promise<void> = Promise.resolve();
  private editSync: Promise<void> = Promise.resolve();

  constructor(root: HTMLElement, api: SessionApi, options: StudioOptions = {}) {
    this.root = root;
    this.api = api;
    this.store = new UiStore();

    clear(root);
    this.playerEl = el("div", "player-pane");
    this.themeEl = el("div", "theme-view");
    this.paletteEl = el("div", "palette-view");
    this.elementsEl = el("div", "elements-view");
    const views = el(
      "div",
      "views",
      this.themeEl,
      this.paletteEl,
      this.elementsEl,
    );

    this.linkage = new HoverLinkage(
      api,
      this.store,
      root,
      options.hoverThreshold,
    );
    this.sliders = makeSliderPanel(api, this.store, {
      throttleMs: options.previewThrottleMs,
      onPreview: (response) => this.applyPreview(response),
      onCommit: () => this.refresh(),
    });
    this.player = new Player(this.playerEl, options.playerEngine);

    const undoButton = el("button", "undo-button");
    undoButton.textContent = "Undo";
    undoButton.onclick = () => {
      void this.undo();
    };

    const zoom = el("input") as HTMLInputElement;
    zoom.type = "range";
    zoom.min = "0";
    zoom.max = "100";
    zoom.value = String(this.store.zoom);
    zoom.className = "zoom-slider";
    zoom.oninput = () => this.setZoom(Number(zoom.value));

    const toolbar = el("div", "toolbar", undoButton, zoom);
    root.append(this.playerEl, views, toolbar, this.sliders.root);
  }

  async open(documentJson: unknown): Promise<void> {
    await this.api.createSession(documentJson);
    await this.refresh();
  }

  /** Pull the full state and re-render everything from it. */
  async refresh(): Promise<void> {
    const state = await this.api.getState();
    this.store.syncState(state);
    this.renderViews();
    await this.reloadPlayback();
  }

  renderViews(): void {
    const state = this.store.state;
    if (!state) return;
    renderTheme(this.themeEl, state.theme, {
      onHoverSwatch: (color) => void this.linkage.hoverColor(color, "theme"),
      onLeaveSwatch: () => void this.linkage.leave(),
      onClickSwatch: (color) => void this.selectAround(color),
    });
    renderPalette(this.paletteEl, state.palette, this.store.zoom, {
      onHoverBlock: (color, frame) => {
        void this.linkage.hoverColor(color, "palette");
        this.movePlayhead(frame);
      },
      onLeaveBlock: () => void this.linkage.leave(),
      onDoubleClickBlock: (block, frame) => {
        this.editSync = this.editSync.then(() =>
          this.isolateAtFrame(block, frame),
        );
      },
    });
    renderElements(this.elementsEl, state.elements, {
      onHoverEntry: (id) => void this.linkage.hoverElement(id),
      onLeaveEntry: () => void this.linkage.leave(),
      onClickBubble: (color) => void this.selectExactly(color),
    });
  }

  private applyPreview(response: EditResponse): void {
    patchPaletteColors(this.paletteEl, response.mapping);
    patchElementColors(this.elementsEl, response.mapping);
    for (const node of this.themeEl.querySelectorAll<HTMLElement>(
      ".theme-swatch",
    )) {
      const next = response.mapping[node.dataset.color ?? ""];
      if (next !== undefined) {
        node.dataset.color = next;
        node.style.background = next;
      }
    }
    void this.reloadPlayback();
  }

  private reloadPlayback(): Promise<void> {
    this.playbackSync = this.playbackSync.then(async () => {
      const text = await this.api.exportDocument();
      await this.player.load(JSON.parse(text));
    });
    return this.playbackSync;
  }

  async selectAround(color: string): Promise<void> {
    const selection = await this.api.setSelection({ auto: { theme: color } });
    this.store.syncSelection(selection);
  }

  async selectExactly(color: string): Promise<void> {
    const selection = await this.api.setSelection({ manual: [color] });
    this.store.syncSelection(selection);
  }

  /** Seek locally at once; persist the playhead on the session behind it. */
  movePlayhead(frame: number): void {
    this.store.setPlayhead(frame);
    this.player.seek(frame);
    this.playheadSync = this.playheadSync.then(async () => {
      const state = await this.api.getState({ playhead: frame });
      this.store.syncSelection(state.selection);
    });
  }

  async isolateAtFrame(block: BlockJson, frame: number): Promise<void> {
    const address = block.occurrences[0];
    if (!address) return;
    await this.api.applyEdit({
      kind: "frame_isolated",
      address,
      frame,
      color: this.sliders.rgbInput.value,
    });
    await this.refresh();
  }

  async undo(): Promise<void> {
    await this.api.undo();
    await this.refresh();
  }

  setZoom(zoom: number): void {
    this.store.setZoom(zoom);
    applyZoom(this.paletteEl, this.store.zoom);
  }

  /** Test hook: wait for every queued server interaction. */
  async settled(): Promise<void> {
    await this.playheadSync;
    await this.editSync;
    await this.linkage.settled();
    for (const flow of this.sliders.flows.values()) {
      await flow.settled();
    }
    await this.playbackSync;
  }
}
