// Scene Palette mosaic: columns of stacked blocks. Block order inside a
// column is exactly the server's order; the only client-side geometry is the
// zoom rescale, which multiplies every height by alpha(zoom)/alpha(served).

import { clear, el } from "../dom";
import type { BlockJson, PaletteJson } from "../types";
import { zoomToAlpha } from "../types";

export type PaletteHandlers = {
  onHoverBlock(color: string, frame: number): void;
  onLeaveBlock(color: string): void;
  onDoubleClickBlock(block: BlockJson, frame: number): void;
};

export function renderPalette(
  container: HTMLElement,
  palette: PaletteJson,
  zoom: number,
  handlers: PaletteHandlers,
): void {
  clear(container);
  const scale = zoomToAlpha(zoom) / palette.alpha;
  for (const column of palette.columns) {
    const col = el("div", "palette-column");
    col.dataset.frame = String(column.frame);
    for (const block of column.blocks) {
      const cell = el("div", "palette-block");
      cell.dataset.color = block.color;
      cell.dataset.area = String(block.area);
      cell.style.background = block.color;
      cell.style.height = `${block.height * scale}px`;
      cell.title = `${block.color} @ frame ${column.frame}`;
      cell.addEventListener("pointerenter", () =>
        handlers.onHoverBlock(block.color, column.frame),
      );
      cell.addEventListener("pointerleave", () =>
        handlers.onLeaveBlock(block.color),
      );
      cell.ondblclick = () => handlers.onDoubleClickBlock(block, column.frame);
      col.append(cell);
    }
    container.append(col);
  }
}

/** Rescale heights in place for a new zoom value; structure untouched. */
export function applyZoom(container: HTMLElement, zoom: number): void {
  const alpha = zoomToAlpha(zoom);
  for (const cell of container.querySelectorAll<HTMLElement>(".palette-block")) {
    const area = Number(cell.dataset.area ?? "0");
    cell.style.height = `${alpha * Math.sqrt(area)}px`;
  }
}

/** Recolor blocks in place from an edit's old->new hex mapping. */
export function patchPaletteColors(
  container: HTMLElement,
  mapping: Record<string, string>,
): void {
  for (const cell of container.querySelectorAll<HTMLElement>(".palette-block")) {
    const next = mapping[cell.dataset.color ?? ""];
    if (next !== undefined) {
      cell.dataset.color = next;
      cell.style.background = next;
    }
  }
}
