import { describe, expect, it } from "vitest";

import { buildPreview, colorScale } from "../src/preview.js";
import type {
  DocumentPayload,
  LayoutPayload,
  UsabilityPayload,
} from "../src/types.js";
import { fixture } from "./helpers.js";

const listDoc = fixture<DocumentPayload>("list4_document.json");
const listLayout = fixture<LayoutPayload>("list4_layout.json");
const listReport = fixture<UsabilityPayload>("list4_usability.json");
const emptyLayout = fixture<LayoutPayload>("list0_layout.json");
const ringLayout = fixture<LayoutPayload>("ring8_layout.json");
const ringReport = fixture<UsabilityPayload>("ring8_usability.json");
const pieLayout = fixture<LayoutPayload>("pie4_layout.json");

function listInputs(layout: LayoutPayload | null) {
  const menu = listDoc.menus[0]!;
  return {
    menuType: menu.menuType,
    title: menu.title,
    buttonIds: menu.buttons,
    buttonLabels: menu.buttons,
    layout,
  };
}

describe("transform passthrough", () => {
  it("every list shape carries the service transform field-for-field", () => {
    const scene = buildPreview(listInputs(listLayout));
    expect(scene.title?.transform).toEqual(listLayout.titleTransform);
    expect(scene.buttons).toHaveLength(listLayout.buttonTransforms.length);
    scene.buttons.forEach((shape, index) => {
      expect(shape.transform).toEqual(listLayout.buttonTransforms[index]);
    });
  });

  it("ring and pie shapes carry their transforms verbatim too", () => {
    for (const [type, layout] of [
      ["Ring", ringLayout],
      ["Pie", pieLayout],
    ] as const) {
      const ids = layout.buttonTransforms.map((_, i) => `b${i}`);
      const scene = buildPreview({
        menuType: type,
        title: "t",
        buttonIds: ids,
        buttonLabels: ids,
        layout,
      });
      scene.buttons.forEach((shape, index) => {
        expect(shape.transform).toEqual(layout.buttonTransforms[index]);
      });
    }
  });

  it("rect drawing params are plain reads of the transform fields", () => {
    const scene = buildPreview(listInputs(listLayout));
    scene.buttons.forEach((shape, index) => {
      const transform = listLayout.buttonTransforms[index]!;
      expect(shape.kind).toBe("rect");
      if (shape.kind === "rect") {
        expect(shape.x).toBe(transform.position[0]);
        expect(shape.y).toBe(transform.position[1]);
        expect(shape.width).toBe(transform.size[0]);
        expect(shape.height).toBe(transform.size[1]);
      }
    });
  });
});

describe("menu-type shapes", () => {
  it("list renders stacked rects under a title", () => {
    const scene = buildPreview(listInputs(listLayout));
    expect(scene.frame).toBe("world");
    expect(scene.title?.kind).toBe("rect");
    expect(scene.buttons.every((shape) => shape.kind === "rect")).toBe(true);
  });

  it("ring renders top-down arcs with yaw from the payload", () => {
    const ids = ringLayout.buttonTransforms.map((_, i) => `b${i}`);
    const scene = buildPreview({
      menuType: "Ring",
      title: "Ring",
      buttonIds: ids,
      buttonLabels: ids,
      layout: ringLayout,
    });
    expect(scene.buttons.every((shape) => shape.kind === "arc")).toBe(true);
    scene.buttons.forEach((shape, index) => {
      if (shape.kind === "arc") {
        expect(shape.yaw).toBe(ringLayout.buttonTransforms[index]!.yaw);
        expect(shape.x).toBe(ringLayout.buttonTransforms[index]!.position[0]);
        expect(shape.z).toBe(ringLayout.buttonTransforms[index]!.position[2]);
      }
    });
  });

  it("pie sectors cover the whole disc without overlap", () => {
    const ids = pieLayout.buttonTransforms.map((_, i) => `b${i}`);
    const scene = buildPreview({
      menuType: "Pie",
      title: "Pie",
      buttonIds: ids,
      buttonLabels: ids,
      layout: pieLayout,
    });
    let total = 0;
    for (const shape of scene.buttons) {
      expect(shape.kind).toBe("sector");
      if (shape.kind === "sector") {
        total += shape.span;
      }
    }
    expect(total).toBeCloseTo(2 * Math.PI, 9);
  });

  it("an empty menu previews as title only", () => {
    const scene = buildPreview({
      menuType: "List",
      title: "Bare",
      buttonIds: [],
      buttonLabels: [],
      layout: emptyLayout,
    });
    expect(scene.title).not.toBeNull();
    expect(scene.buttons).toHaveLength(0);
    expect(scene.notice).toBeNull();
  });

  it("a service failure renders nothing but a notice", () => {
    const scene = buildPreview(listInputs(null));
    expect(scene.title).toBeNull();
    expect(scene.buttons).toHaveLength(0);
    expect(scene.notice).toMatch(/service error/);
  });
});

describe("movement-time heatmap", () => {
  it("equal times share one color, slower is redder", () => {
    const scale = colorScale([1, 1, 3]);
    expect(scale(1)).toBe(scale(1));
    expect(scale(1)).toBe("hsl(120, 70%, 50%)");
    expect(scale(3)).toBe("hsl(0, 70%, 50%)");
  });

  it("a flat distribution is a single color", () => {
    const scale = colorScale([2, 2, 2]);
    expect(new Set([scale(2), scale(2), scale(2)]).size).toBe(1);
  });

  it("ring buttons at mirrored azimuths share a color", () => {
    const menu = { buttons: ringReport.perButton.map((row) => row.buttonId) };
    const scene = buildPreview({
      menuType: "Ring",
      title: "Ring",
      buttonIds: menu.buttons,
      buttonLabels: menu.buttons,
      layout: ringLayout,
      report: ringReport,
    });
    const colors = scene.buttons.map((shape) => shape.color);
    expect(colors.every((color) => color !== null)).toBe(true);
    // azimuth k and n-k are the same distance from the start button
    expect(colors[1]).toBe(colors[7]);
    expect(colors[2]).toBe(colors[6]);
    expect(colors[3]).toBe(colors[5]);
    expect(colors[0]).not.toBe(colors[4]);
  });

  it("list heatmap mirrors around the center row", () => {
    const scene = buildPreview({ ...listInputs(listLayout), report: listReport });
    const colors = scene.buttons.map((shape) => shape.color);
    // four rows around an on-axis viewer: outer pair and inner pair match
    expect(colors[0]).toBe(colors[3]);
    expect(colors[1]).toBe(colors[2]);
    expect(colors[0]).not.toBe(colors[1]);
  });

  it("no report means uncolored shapes", () => {
    const scene = buildPreview(listInputs(listLayout));
    expect(scene.buttons.every((shape) => shape.color === null)).toBe(true);
  });
});
