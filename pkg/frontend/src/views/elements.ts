// Element List: the document's named shape tree, each entry carrying the
// color bubbles it owns.

import { clear, el } from "../dom";
import type { ElementJson } from "../types";

export type ElementHandlers = {
  onHoverEntry(elementId: string): void;
  onLeaveEntry(elementId: string): void;
  onClickBubble(color: string): void;
};

function renderEntry(entry: ElementJson, handlers: ElementHandlers): HTMLLIElement {
  const item = el("li", "element-entry");
  item.dataset.elementId = entry.element_id;

  const row = el("div", "element-row");
  const name = el("span", "element-name");
  name.textContent = entry.display_name;
  row.append(name);
  for (const bubble of entry.colors) {
    const dot = el("span", "color-bubble");
    dot.dataset.color = bubble.color;
    dot.style.background = bubble.color;
    dot.title = `${bubble.color} (${bubble.address.slot})`;
    dot.onclick = (ev) => {
      ev.stopPropagation();
      handlers.onClickBubble(bubble.color);
    };
    row.append(dot);
  }
  row.addEventListener("pointerenter", () =>
    handlers.onHoverEntry(entry.element_id),
  );
  row.addEventListener("pointerleave", () =>
    handlers.onLeaveEntry(entry.element_id),
  );
  item.append(row);

  if (entry.children.length) {
    const nest = el("ul", "element-children");
    for (const child of entry.children) {
      nest.append(renderEntry(child, handlers));
    }
    item.append(nest);
  }
  return item;
}

export function renderElements(
  container: HTMLElement,
  entries: ElementJson[],
  handlers: ElementHandlers,
): void {
  clear(container);
  const root = el("ul", "element-tree");
  for (const entry of entries) {
    root.append(renderEntry(entry, handlers));
  }
  container.append(root);
}

/** Recolor bubbles in place from an edit's old->new hex mapping. */
export function patchElementColors(
  container: HTMLElement,
  mapping: Record<string, string>,
): void {
  for (const dot of container.querySelectorAll<HTMLElement>(".color-bubble")) {
    const next = mapping[dot.dataset.color ?? ""];
    if (next !== undefined) {
      dot.dataset.color = next;
      dot.style.background = next;
    }
  }
}
