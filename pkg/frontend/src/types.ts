// Payload shapes of the session service, mirrored field for field.

export type AddressJson = {
  layer: number;
  path: number[];
  slot: string;
};

export type SwatchJson = {
  color: string;
  proportion: number;
  members: number;
};

export type BlockJson = {
  color: string;
  height: number;
  area: number;
  sort_key: number;
  occurrences: AddressJson[];
};

export type ColumnJson = {
  frame: number;
  blocks: BlockJson[];
};

export type PaletteJson = {
  alpha: number;
  step: number;
  in_point: number;
  out_point: number;
  columns: ColumnJson[];
};

export type BubbleJson = {
  color: string;
  address: AddressJson;
  area: number;
};

export type ElementJson = {
  element_id: string;
  display_name: string;
  colors: BubbleJson[];
  children: ElementJson[];
};

export type SelectionJson = {
  members: string[];
  origin: string;
  elements: string[];
} | null;

export type DocumentMeta = {
  frame_rate: number;
  in_point: number;
  out_point: number;
  width: number;
  height: number;
  layers: number;
};

export type StateJson = {
  session_id: string;
  document: DocumentMeta;
  theme: SwatchJson[];
  palette: PaletteJson;
  elements: ElementJson[];
  selection: SelectionJson;
  playhead: number | null;
  log_depth: number;
  warnings: string[];
};

export type SummaryJson = {
  session_id: string;
  layers: number;
  occurrences: number;
  distinct_colors: number;
  theme: SwatchJson[];
  log_depth: number;
};

export type EditResponse = {
  mapping: Record<string, string>;
  changed_addresses: AddressJson[];
  log_depth: number;
};

export type SelectionBody =
  | { auto: { theme: string; threshold?: number } }
  | { manual: string[] }
  | { edit: { add?: string[]; remove?: string[] } }
  | { clear: true };

export type ShiftChannel = "hue" | "saturation" | "lightness";

export type EditBody =
  | { kind: "set_rgb"; from?: string; to: string }
  | ({ kind: "group_shift"; members?: string[] } & Partial<
      Record<ShiftChannel, number>
    >)
  | {
      kind: "frame_isolated";
      address: AddressJson;
      frame: number;
      color: string;
      ramp?: number;
    };

// Zoom slider endpoints of the server's block-height scale.
export const ZOOM_ALPHA_MIN = 0.2;
export const ZOOM_ALPHA_MAX = 4.0;

export function zoomToAlpha(zoomPercent: number): number {
  const z = Math.min(100, Math.max(0, zoomPercent));
  return ZOOM_ALPHA_MIN + (z / 100) * (ZOOM_ALPHA_MAX - ZOOM_ALPHA_MIN);
}
