// The three shipping criteria for the studio UI, run against a live
// session-service instance with the four-scene retarget fixture.

import { describe, expect, it } from "vitest";

import { SessionApi } from "../src/api";
import {
  blockColors,
  fourSceneDoc,
  linkedColors,
  mountStudio,
  serverUrl,
} from "./helpers";

describe("secondary criteria", () => {
  it("hovering a theme swatch outlines exactly the server's similar-color set", async () => {
    const { studio, container } = await mountStudio(fourSceneDoc());
    const swatch = container.querySelector<HTMLElement>(".theme-swatch");
    expect(swatch).not.toBeNull();
    const hovered = swatch!.dataset.color!;

    // Independent truth: a second session answers what "similar to this
    // swatch" means, using the same server-side default threshold.
    const oracle = new SessionApi(serverUrl());
    await oracle.createSession(fourSceneDoc());
    const expected = await oracle.setSelection({ auto: { theme: hovered } });
    expect(expected).not.toBeNull();
    const wantColors = new Set(expected!.members);
    const wantElements = new Set(expected!.elements);

    swatch!.dispatchEvent(new Event("pointerenter"));
    await studio.settled();

    expect(linkedColors(container, ".palette-block")).toEqual(wantColors);

    const swatchColors = new Set(
      [...container.querySelectorAll<HTMLElement>(".theme-swatch")].map(
        (node) => node.dataset.color ?? "",
      ),
    );
    const wantSwatches = new Set(
      [...wantColors].filter((color) => swatchColors.has(color)),
    );
    expect(linkedColors(container, ".theme-swatch")).toEqual(wantSwatches);

    const linkedEntries = new Set(
      [...container.querySelectorAll<HTMLElement>(".element-entry.linked")].map(
        (node) => node.dataset.elementId ?? "",
      ),
    );
    expect(linkedEntries).toEqual(wantElements);

    // Leaving clears every outline and restores the previous selection.
    swatch!.dispatchEvent(new Event("pointerleave"));
    await studio.settled();
    expect(container.querySelectorAll(".linked").length).toBe(0);
    const after = await studio.api.getState();
    expect(after.selection).toBeNull();
  });

  it("dragging hue +360 and releasing leaves the export byte-identical", async () => {
    const { studio, api, container } = await mountStudio(fourSceneDoc());
    const anchor = studio.store.state!.theme[0]!.color;
    await studio.selectAround(anchor);
    expect(studio.store.selectionSize()).toBeGreaterThan(0);

    const before = await api.exportDocument();
    const depthBefore = (await api.getState()).log_depth;

    const slider = container.querySelector<HTMLInputElement>(
      'input[data-channel="hue"]',
    )!;
    for (const step of [90, 180, 270, 360]) {
      slider.value = String(step);
      slider.dispatchEvent(new Event("input"));
    }
    slider.value = "360";
    slider.dispatchEvent(new Event("change"));
    await studio.settled();

    const after = await api.exportDocument();
    expect(after).toBe(before);

    // Previews were all undone: only the release commit entered the log.
    const depthAfter = (await api.getState()).log_depth;
    expect(depthAfter).toBe(depthBefore + 1);
  });

  it("palette DOM order equals server order for every column", async () => {
    const { studio, api, container } = await mountStudio(fourSceneDoc());

    const compareAgainstServer = async () => {
      const server = await api.getState();
      const domColumns = [...container.querySelectorAll(".palette-column")];
      expect(domColumns.length).toBe(server.palette.columns.length);
      server.palette.columns.forEach((column, i) => {
        const dom = domColumns[i]!;
        expect(Number((dom as HTMLElement).dataset.frame)).toBe(column.frame);
        expect(blockColors(dom)).toEqual(column.blocks.map((b) => b.color));
      });
    };

    await compareAgainstServer();

    // Still true after an edit reorders nothing but recolors blocks.
    const members = studio.store.state!.theme.map((s) => s.color).slice(0, 2);
    await api.applyEdit({ kind: "group_shift", members, hue: -40 });
    await studio.refresh();
    await compareAgainstServer();
  });
});
