import { describe, expect, it } from "vitest";

import {
  bindableMenus,
  newCreator,
  overCapacity,
  renderRows,
  setButtonCount,
  setMenuType,
  toCreateRequest,
  updateRow,
} from "../src/creator.js";
import type { DocumentPayload } from "../src/types.js";
import { byClass } from "../src/vdom.js";
import { fixture } from "./helpers.js";

const twoLevel = fixture<DocumentPayload>("two_level_document.json");

describe("spec rows", () => {
  it.each([0, 1, 3, 7, 10])("count %i renders exactly that many rows", (count) => {
    const model = setButtonCount(newCreator(), count);
    expect(model.rows).toHaveLength(count);
    expect(renderRows(model, [])).toHaveLength(count);
  });

  it("growing appends empty rows and keeps typed ones", () => {
    let model = setButtonCount(newCreator(), 2);
    model = updateRow(model, 0, { name: "first", functionId: "fn.1" });
    model = setButtonCount(model, 4);
    expect(model.rows[0]?.name).toBe("first");
    expect(model.rows[3]?.name).toBe("");
  });

  it("shrinking keeps the prefix", () => {
    let model = setButtonCount(newCreator(), 3);
    model = updateRow(model, 0, { name: "keep" });
    model = updateRow(model, 2, { name: "drop" });
    model = setButtonCount(model, 1);
    expect(model.rows.map((row) => row.name)).toEqual(["keep"]);
  });

  it("negative or fractional counts clamp to whole rows", () => {
    expect(setButtonCount(newCreator(), -3).rows).toHaveLength(0);
    expect(setButtonCount(newCreator(), 2.9).rows).toHaveLength(2);
  });
});

describe("submenu picker", () => {
  it("appears only on SubMenu rows", () => {
    let model = setButtonCount(newCreator(), 2);
    model = updateRow(model, 1, { buttonType: "SubMenu" });
    const rows = renderRows(model, bindableMenus(twoLevel));
    expect(byClass(rows[0]!, "submenu-picker")).toHaveLength(0);
    expect(byClass(rows[1]!, "submenu-picker")).toHaveLength(1);
  });

  it("lists only unbound non-root menus", () => {
    // the fixture's child menu is already bound, the root is a root
    expect(bindableMenus(twoLevel)).toHaveLength(0);
    const withFree: DocumentPayload = {
      ...twoLevel,
      menus: twoLevel.menus.map((menu) =>
        menu.id === "m1" ? menu : { ...menu }
      ),
      buttons: twoLevel.buttons.map((button) =>
        button.subMenuId === "m1" ? { ...button, subMenuId: undefined } : button
      ),
    };
    const free = bindableMenus(withFree);
    expect(free.map((menu) => menu.id)).toEqual(["m1"]);

    let model = setButtonCount(newCreator(), 1);
    model = updateRow(model, 0, { buttonType: "SubMenu" });
    const picker = byClass(renderRows(model, free)[0]!, "submenu-picker")[0]!;
    const options = picker.children.filter(
      (child) => typeof child !== "string" && child.attrs["value"] === "m1"
    );
    expect(options).toHaveLength(1);
  });

  it("no document means nothing to bind", () => {
    expect(bindableMenus(null)).toEqual([]);
  });
});

describe("capacity hint", () => {
  it("flags pie requests above four rows", () => {
    const model = setButtonCount(setMenuType(newCreator(), "Pie"), 6);
    expect(overCapacity(model)).toBe(true);
    expect(overCapacity(setButtonCount(model, 4))).toBe(false);
  });
});

describe("request wire shape", () => {
  it("serializes typed rows and omits blanks", () => {
    let model = newCreator("Matrix");
    model = { ...model, menuName: "grid", menuTitle: "Grid", isRootMenu: true };
    model = setButtonCount(model, 2);
    model = updateRow(model, 0, { name: "a", functionId: "fn.a", text: "A" });
    model = updateRow(model, 1, { name: "b", buttonType: "SubMenu", subMenuRef: "m9" });
    expect(toCreateRequest(model)).toEqual({
      menuName: "grid",
      menuType: "Matrix",
      isRootMenu: true,
      menuTitle: "Grid",
      buttonSpecs: [
        { name: "a", buttonType: "Function", text: "A", functionId: "fn.a" },
        { name: "b", buttonType: "SubMenu", subMenuRef: "m9" },
      ],
    });
  });

  it("includes positionMode only when chosen", () => {
    const model = { ...newCreator(), positionMode: "HeadReferenced" as const };
    expect(toCreateRequest(model).positionMode).toBe("HeadReferenced");
    expect("positionMode" in toCreateRequest(newCreator())).toBe(false);
  });

  it("a function row without an id stays a bare spec", () => {
    const model = setButtonCount(newCreator(), 1);
    expect(toCreateRequest(model).buttonSpecs[0]).toEqual({
      name: "",
      buttonType: "Function",
    });
  });
});
