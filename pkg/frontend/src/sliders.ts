// HSL shift sliders and the RGB picker.
//
// While a slider is dragged the flow posts throttled preview edits (at most
// one per throttleMs) against the server selection, undoing the previous
// preview first, so the server document always shows "drag-start state plus
// the current slider delta". Releasing undoes the last preview and posts a
// single commit edit: only that commit stays in the undo log.

import type { SessionApi } from "./api";
import type { EditResponse } from "./types";
import type { UiStore } from "./state";
import type { ShiftChannel } from "./types";
import { el } from "./dom";

export type SliderFlowOptions = {
  throttleMs?: number;
  onPreview?(response: EditResponse): void;
  onCommit?(response: EditResponse): void | Promise<void>;
};

const DEFAULT_THROTTLE_MS = 100; // 10 previews per second, tops

export class SliderEditFlow {
  readonly channel: ShiftChannel;
  previewCount = 0;

  private api: SessionApi;
  private options: SliderFlowOptions;
  private throttleMs: number;
  private previewOnServer = false;
  private lastSentAt = Number.NEGATIVE_INFINITY;
  private pendingValue: number | null = null;
  private timer: ReturnType<typeof setTimeout> | null = null;
  private chain: Promise<void> = Promise.resolve();

  constructor(api: SessionApi, channel: ShiftChannel, options: SliderFlowOptions = {}) {
    this.api = api;
    this.channel = channel;
    this.options = options;
    this.throttleMs = options.throttleMs ?? DEFAULT_THROTTLE_MS;
  }

  /** Queue server work; one in-flight request chain per slider. */
  private enqueue(op: () => Promise<void>): Promise<void> {
    this.chain = this.chain.then(op, op);
    return this.chain;
  }

  drag(value: number): void {
    this.pendingValue = value;
    const wait = this.lastSentAt + this.throttleMs - Date.now();
    if (wait <= 0) {
      this.flushPreview();
    } else if (this.timer === null) {
      this.timer = setTimeout(() => {
        this.timer = null;
        this.flushPreview();
      }, wait);
    }
  }

  private flushPreview(): void {
    if (this.pendingValue === null) return;
    const value = this.pendingValue;
    this.pendingValue = null;
    this.lastSentAt = Date.now();
    void this.enqueue(async () => {
      if (this.previewOnServer) await this.api.undo();
      const response = await this.api.applyEdit({
        kind: "group_shift",
        [this.channel]: value,
      });
      this.previewOnServer = true;
      this.previewCount += 1;
      this.options.onPreview?.(response);
    });
  }

  release(value: number): Promise<void> {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
    this.pendingValue = null;
    return this.enqueue(async () => {
      if (this.previewOnServer) {
        await this.api.undo();
        this.previewOnServer = false;
      }
      if (value === 0) return; // nothing to commit
      const response = await this.api.applyEdit({
        kind: "group_shift",
        [this.channel]: value,
      });
      await this.options.onCommit?.(response);
    });
  }

  /** Wait for all pending slider traffic; test hook. */
  settled(): Promise<void> {
    return this.chain;
  }
}

type SliderSpec = {
  channel: ShiftChannel;
  label: string;
  min: number;
  max: number;
  step: number;
};

const SLIDERS: SliderSpec[] = [
  { channel: "hue", label: "Hue", min: -360, max: 360, step: 1 },
  { channel: "saturation", label: "Saturation", min: -1, max: 1, step: 0.01 },
  { channel: "lightness", label: "Lightness", min: -1, max: 1, step: 0.01 },
];

export type SliderPanel = {
  root: HTMLElement;
  flows: Map<ShiftChannel, SliderEditFlow>;
  rgbInput: HTMLInputElement;
};

export function makeSliderPanel(
  api: SessionApi,
  store: UiStore,
  flowOptions: SliderFlowOptions = {},
): SliderPanel {
  const root = el("div", "edit-panel");
  const flows = new Map<ShiftChannel, SliderEditFlow>();

  for (const spec of SLIDERS) {
    const flow = new SliderEditFlow(api, spec.channel, flowOptions);
    flows.set(spec.channel, flow);

    const row = el("label", "slider-row");
    const caption = el("span", "slider-label");
    caption.textContent = spec.label;
    const input = el("input") as HTMLInputElement;
    input.type = "range";
    input.min = String(spec.min);
    input.max = String(spec.max);
    input.step = String(spec.step);
    input.value = "0";
    input.dataset.channel = spec.channel;
    input.oninput = () => flow.drag(Number(input.value));
    const done = () => {
      const value = Number(input.value);
      input.value = "0";
      void flow.release(value);
    };
    input.addEventListener("pointerup", done);
    input.onchange = done;
    row.append(caption, input);
    root.append(row);
  }

  // The RGB picker targets exactly one color; it switches off whenever the
  // selection has any other size.
  const rgbRow = el("label", "slider-row rgb-row");
  const rgbCaption = el("span", "slider-label");
  rgbCaption.textContent = "RGB";
  const rgbInput = el("input") as HTMLInputElement;
  rgbInput.type = "color";
  rgbInput.className = "rgb-picker";
  const syncRgbEnabled = () => {
    rgbInput.disabled = store.selectionSize() !== 1;
  };
  syncRgbEnabled();
  store.subscribe(syncRgbEnabled);
  rgbInput.onchange = () => {
    void (async () => {
      const response = await api.applyEdit({ kind: "set_rgb", to: rgbInput.value });
      await flowOptions.onCommit?.(response);
    })();
  };
  rgbRow.append(rgbCaption, rgbInput);
  root.append(rgbRow);

  return { root, flows, rgbInput };
}
