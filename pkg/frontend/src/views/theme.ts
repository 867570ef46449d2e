// Video Theme strip: one swatch per dominant color, width from proportion.

import { clear, el } from "../dom";
import type { SwatchJson } from "../types";

export type ThemeHandlers = {
  onHoverSwatch(color: string): void;
  onLeaveSwatch(color: string): void;
  onClickSwatch(color: string): void;
};

export function renderTheme(
  container: HTMLElement,
  swatches: SwatchJson[],
  handlers: ThemeHandlers,
): void {
  clear(container);
  for (const swatch of swatches) {
    const tile = el("div", "theme-swatch");
    tile.dataset.color = swatch.color;
    tile.style.background = swatch.color;
    tile.style.flexGrow = String(Math.max(swatch.proportion, 0.02));
    tile.title = `${swatch.color}  ${(swatch.proportion * 100).toFixed(1)}%`;
    const label = el("span", "swatch-label");
    label.textContent = `${(swatch.proportion * 100).toFixed(0)}%`;
    tile.append(label);
    tile.addEventListener("pointerenter", () =>
      handlers.onHoverSwatch(swatch.color),
    );
    tile.addEventListener("pointerleave", () =>
      handlers.onLeaveSwatch(swatch.color),
    );
    tile.onclick = () => handlers.onClickSwatch(swatch.color);
    container.append(tile);
  }
}
