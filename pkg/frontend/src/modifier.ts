/** Modifier panel models: edit one selected node. All changes are
 * expressed as service patch bodies; constraint failures surface the
 * service's own message text untouched. */

import type {
  ButtonPayload,
  ButtonType,
  DocumentPayload,
  ErrorEnvelope,
  MenuPayload,
} from "./types.js";

export interface ButtonModifier {
  buttonId: string;
  parentMenu: string;
  name: string;
  buttonType: ButtonType;
  text: string;
  iconRef: string | null;
  functionId: string | null;
  subMenuId: string | null;
  /** Menus this button could be (re)bound to, including its current target. */
  bindable: string[];
}

export interface MenuModifier {
  menuId: string;
  title: string;
  menuType: string;
  active: boolean;
  buttonIds: string[];
}

function buttonById(document: DocumentPayload, buttonId: string): ButtonPayload {
  const button = document.buttons.find((b) => b.id === buttonId);
  if (button === undefined) {
    throw new Error(`unknown button ${buttonId}`);
  }
  return button;
}

function menuById(document: DocumentPayload, menuId: string): MenuPayload {
  const menu = document.menus.find((m) => m.id === menuId);
  if (menu === undefined) {
    throw new Error(`unknown menu ${menuId}`);
  }
  return menu;
}

export function buttonModifier(
  document: DocumentPayload,
  buttonId: string
): ButtonModifier {
  const button = buttonById(document, buttonId);
  const boundElsewhere = new Set(
    document.buttons
      .filter((b) => b.id !== buttonId && b.subMenuId)
      .map((b) => b.subMenuId as string)
  );
  const bindable = document.menus
    .filter((menu) => !menu.isRoot && !boundElsewhere.has(menu.id))
    .map((menu) => menu.id);
  return {
    buttonId: button.id,
    parentMenu: button.parentMenu,
    name: button.name,
    buttonType: button.buttonType,
    text: button.text,
    iconRef: button.iconRef ?? null,
    functionId: button.functionId ?? null,
    subMenuId: button.subMenuId ?? null,
    bindable,
  };
}

export function menuModifier(document: DocumentPayload, menuId: string): MenuModifier {
  const menu = menuById(document, menuId);
  return {
    menuId: menu.id,
    title: menu.title,
    menuType: menu.menuType,
    active: menu.active,
    buttonIds: [...menu.buttons],
  };
}

// --- patch bodies (exact wire shapes) --------------------------------

export function textPatch(text: string): { text: string } {
  return { text };
}

export function iconPatch(iconRef: string | null): { iconRef: string | null } {
  return { iconRef };
}

export function functionTypePatch(functionId: string): {
  type: "Function";
  functionId: string;
} {
  return { type: "Function", functionId };
}

export function submenuTypePatch(subMenuRef: string): {
  type: "SubMenu";
  subMenuRef: string;
} {
  return { type: "SubMenu", subMenuRef };
}

export function titleBody(title: string): { title: string } {
  return { title };
}

/** The service's message is shown verbatim; capacity breaches in
 * particular have a fixed alert sentence users must see unchanged. */
export function errorBanner(body: ErrorEnvelope): string {
  return body.error.message;
}
