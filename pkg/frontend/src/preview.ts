/** Preview scene built from the service layout payload. Every shape
 * carries the service transform verbatim; drawing parameters are read
 * straight off those fields, never recomputed from menu structure. */

import type {
  LayoutPayload,
  MenuType,
  TransformPayload,
  UsabilityPayload,
} from "./types.js";

export interface ShapeBase {
  id: string;
  label: string;
  /** The service transform, field-for-field. */
  transform: TransformPayload;
  color: string | null;
  role: "title" | "button";
}

/** Flat panel item drawn in the x/y plane (list and matrix). */
export interface RectShape extends ShapeBase {
  kind: "rect";
  x: number;
  y: number;
  width: number;
  height: number;
}

/** Pie sector on the touchpad disc. */
export interface SectorShape extends ShapeBase {
  kind: "sector";
  /** Bisector direction, radians clockwise from straight up. */
  bisector: number;
  /** Angle covered by the sector. */
  span: number;
  radius: number;
}

/** Ring item drawn top-down around the user dot. */
export interface ArcShape extends ShapeBase {
  kind: "arc";
  x: number;
  z: number;
  yaw: number;
  width: number;
  height: number;
}

export type Shape = RectShape | SectorShape | ArcShape;

export interface PreviewScene {
  frame: LayoutPayload["frame"] | null;
  title: Shape | null;
  buttons: Shape[];
  notice: string | null;
}

function rect(
  id: string,
  label: string,
  transform: TransformPayload,
  role: "title" | "button",
  color: string | null
): RectShape {
  return {
    kind: "rect",
    id,
    label,
    transform,
    role,
    color,
    x: transform.position[0],
    y: transform.position[1],
    width: transform.size[0],
    height: transform.size[1],
  };
}

function sector(
  id: string,
  label: string,
  transform: TransformPayload,
  color: string | null
): SectorShape {
  const radius = transform.size[1];
  const span = radius > 0 ? transform.size[0] / radius : 0;
  return {
    kind: "sector",
    id,
    label,
    transform,
    role: "button",
    color,
    bisector: Math.atan2(transform.position[0], transform.position[1]),
    span,
    radius,
  };
}

function arc(
  id: string,
  label: string,
  transform: TransformPayload,
  color: string | null
): ArcShape {
  return {
    kind: "arc",
    id,
    label,
    transform,
    role: "button",
    color,
    x: transform.position[0],
    z: transform.position[2],
    yaw: transform.yaw,
    width: transform.size[0],
    height: transform.size[1],
  };
}

/** Equal movement times map to identical colors; the scale runs green
 * (fastest) to red (slowest). */
export function colorScale(times: number[]): (time: number) => string {
  const finite = times.filter((t) => Number.isFinite(t));
  const min = Math.min(...finite);
  const max = Math.max(...finite);
  return (time: number) => {
    const t = max > min ? (time - min) / (max - min) : 0;
    const hue = Math.round(120 * (1 - t));
    return `hsl(${hue}, 70%, 50%)`;
  };
}

export interface PreviewInputs {
  menuType: MenuType;
  title: string;
  buttonIds: string[];
  buttonLabels: string[];
  layout: LayoutPayload | null;
  report?: UsabilityPayload | null;
}

export function buildPreview(inputs: PreviewInputs): PreviewScene {
  const { layout } = inputs;
  if (layout === null) {
    return {
      frame: null,
      title: null,
      buttons: [],
      notice: "layout unavailable: service error",
    };
  }
  let colorOf: ((time: number) => string) | null = null;
  const timeById = new Map<string, number>();
  if (inputs.report) {
    for (const row of inputs.report.perButton) {
      timeById.set(row.buttonId, row.MT);
    }
    colorOf = colorScale(inputs.report.perButton.map((row) => row.MT));
  }
  const colorFor = (id: string): string | null => {
    if (colorOf === null || !timeById.has(id)) {
      return null;
    }
    return colorOf(timeById.get(id)!);
  };

  const buttons = layout.buttonTransforms.map((transform, index) => {
    const id = inputs.buttonIds[index] ?? `#${index}`;
    const label = inputs.buttonLabels[index] ?? "";
    const color = colorFor(id);
    switch (inputs.menuType) {
      case "Pie":
        return sector(id, label, transform, color);
      case "Ring":
        return arc(id, label, transform, color);
      default:
        return rect(id, label, transform, "button", color);
    }
  });
  return {
    frame: layout.frame,
    title: rect("title", inputs.title, layout.titleTransform, "title", null),
    buttons,
    notice: null,
  };
}
