/** Creator panel model: a menu request under construction. The row
 * list always has exactly the requested button count; submenu rows
 * carry a picker over menus the document can legally bind. */

import { h, type VNode } from "./vdom.js";
import {
  MENU_CAPACITY,
  type ButtonType,
  type CreateMenuRequestPayload,
  type DocumentPayload,
  type MenuPayload,
  type MenuType,
  type PositionMode,
} from "./types.js";

export interface SpecRow {
  name: string;
  buttonType: ButtonType;
  text: string;
  iconRef: string;
  functionId: string;
  subMenuRef: string;
}

export interface CreatorModel {
  menuName: string;
  menuType: MenuType;
  isRootMenu: boolean;
  menuTitle: string;
  positionMode: PositionMode | null;
  rows: SpecRow[];
}

export function emptyRow(): SpecRow {
  return {
    name: "",
    buttonType: "Function",
    text: "",
    iconRef: "",
    functionId: "",
    subMenuRef: "",
  };
}

export function newCreator(menuType: MenuType = "List"): CreatorModel {
  return {
    menuName: "",
    menuType,
    isRootMenu: true,
    menuTitle: "",
    positionMode: null,
    rows: [],
  };
}

/** Resize to exactly `count` rows, keeping what the user already typed. */
export function setButtonCount(model: CreatorModel, count: number): CreatorModel {
  const wanted = Math.max(0, Math.floor(count));
  const rows = model.rows.slice(0, wanted);
  while (rows.length < wanted) {
    rows.push(emptyRow());
  }
  return { ...model, rows };
}

export function setMenuType(model: CreatorModel, menuType: MenuType): CreatorModel {
  // position is archetype-specific; fall back to the server default
  return { ...model, menuType, positionMode: null };
}

export function updateRow(
  model: CreatorModel,
  index: number,
  patch: Partial<SpecRow>
): CreatorModel {
  const rows = model.rows.map((row, i) => (i === index ? { ...row, ...patch } : row));
  return { ...model, rows };
}

/** Client-side hint only; the service clamps with its own warning. */
export function overCapacity(model: CreatorModel): boolean {
  return model.rows.length > MENU_CAPACITY[model.menuType];
}

/** Menus a new submenu button may reference: non-root and not yet
 * bound to any button. */
export function bindableMenus(document: DocumentPayload | null): MenuPayload[] {
  if (document === null) {
    return [];
  }
  const bound = new Set(
    document.buttons.map((b) => b.subMenuId).filter((id): id is string => !!id)
  );
  return document.menus.filter((menu) => !menu.isRoot && !bound.has(menu.id));
}

export function toCreateRequest(model: CreatorModel): CreateMenuRequestPayload {
  const request: CreateMenuRequestPayload = {
    menuName: model.menuName,
    menuType: model.menuType,
    isRootMenu: model.isRootMenu,
    menuTitle: model.menuTitle,
    buttonSpecs: model.rows.map((row) => ({
      name: row.name,
      buttonType: row.buttonType,
      ...(row.text !== "" ? { text: row.text } : {}),
      ...(row.iconRef !== "" ? { iconRef: row.iconRef } : {}),
      ...(row.buttonType === "Function" && row.functionId !== ""
        ? { functionId: row.functionId }
        : {}),
      ...(row.buttonType === "SubMenu" && row.subMenuRef !== ""
        ? { subMenuRef: row.subMenuRef }
        : {}),
    })),
  };
  if (model.positionMode !== null) {
    request.positionMode = model.positionMode;
  }
  return request;
}

function rowNode(row: SpecRow, index: number, bindable: MenuPayload[]): VNode {
  const children: VNode[] = [
    h("input", {
      class: "row-name",
      "data-row": String(index),
      value: row.name,
      placeholder: "name",
    }),
    h(
      "select",
      { class: "row-type", "data-row": String(index) },
      h("option", { value: "Function", ...(row.buttonType === "Function" ? { selected: "" } : {}) }, "Function"),
      h("option", { value: "SubMenu", ...(row.buttonType === "SubMenu" ? { selected: "" } : {}) }, "SubMenu")
    ),
    h("input", {
      class: "row-text",
      "data-row": String(index),
      value: row.text,
      placeholder: "label",
    }),
  ];
  if (row.buttonType === "SubMenu") {
    // picking a submenu target only makes sense once the row is a SubMenu row
    children.push(
      h(
        "select",
        { class: "submenu-picker", "data-row": String(index) },
        h("option", { value: "" }, "choose a menu"),
        ...bindable.map((menu) =>
          h(
            "option",
            { value: menu.id, ...(row.subMenuRef === menu.id ? { selected: "" } : {}) },
            `${menu.title} (${menu.id})`
          )
        )
      )
    );
  } else {
    children.push(
      h("input", {
        class: "row-function",
        "data-row": String(index),
        value: row.functionId,
        placeholder: "function id",
      })
    );
  }
  return h("div", { class: "spec-row", "data-row": String(index) }, ...children);
}

/** One node per requested button, in request order. */
export function renderRows(model: CreatorModel, bindable: MenuPayload[]): VNode[] {
  return model.rows.map((row, index) => rowNode(row, index, bindable));
}

export function renderCreator(model: CreatorModel, bindable: MenuPayload[]): VNode {
  const warning = overCapacity(model)
    ? [h("p", { class: "capacity-hint" }, "over capacity: the service will clamp and warn")]
    : [];
  return h(
    "section",
    { class: "creator-panel" },
    h("input", { class: "menu-name", value: model.menuName, placeholder: "menu name" }),
    h("input", { class: "menu-title", value: model.menuTitle, placeholder: "title" }),
    ...warning,
    h("div", { class: "spec-rows" }, ...renderRows(model, bindable))
  );
}
