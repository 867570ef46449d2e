import { inject } from "vitest";

import { SessionApi } from "../src/api";
import { Studio, type StudioOptions } from "../src/app";
import type { AnimationEngine } from "../src/player";
import fourScene from "./fixtures/four-scene.json";

export function serverUrl(): string {
  return inject("serverUrl");
}

export function fourSceneDoc(): unknown {
  // Deep copy so tests can never cross-contaminate the fixture.
  return JSON.parse(JSON.stringify(fourScene));
}

export type FakeEngine = AnimationEngine & {
  loads: unknown[];
  seeks: number[];
};

export function fakeEngine(): FakeEngine {
  const engine: FakeEngine = {
    loads: [],
    seeks: [],
    loadAnimation(params) {
      engine.loads.push(params.animationData);
      return {
        destroy() {},
        goToAndStop(value: number) {
          engine.seeks.push(value);
        },
      };
    },
  };
  return engine;
}

export type Mounted = {
  studio: Studio;
  api: SessionApi;
  container: HTMLElement;
  engine: FakeEngine;
};

export async function mountStudio(
  documentJson: unknown,
  options: StudioOptions = {},
): Promise<Mounted> {
  const container = document.createElement("div");
  document.body.append(container);
  const api = new SessionApi(serverUrl());
  const engine = fakeEngine();
  const studio = new Studio(container, api, {
    playerEngine: engine,
    previewThrottleMs: 0,
    ...options,
  });
  await studio.open(documentJson);
  return { studio, api, container, engine };
}

export function blockColors(column: Element): string[] {
  return [...column.querySelectorAll<HTMLElement>(".palette-block")].map(
    (node) => node.dataset.color ?? "",
  );
}

export function linkedColors(container: HTMLElement, selector: string): Set<string> {
  const out = new Set<string>();
  for (const node of container.querySelectorAll<HTMLElement>(selector)) {
    if (node.classList.contains("linked")) out.add(node.dataset.color ?? "");
  }
  return out;
}
