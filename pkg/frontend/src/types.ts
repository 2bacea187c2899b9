/** Wire types mirroring the service JSON payloads. */

export type MenuType = "List" | "Matrix" | "Pie" | "Ring";
export type PositionMode = "Fixed" | "HeadReferenced" | "HandReferenced";
export type ButtonType = "Function" | "SubMenu";
export type SelectionKind = "menu" | "button" | "none";
export type FrameTag = "world" | "head" | "hand";

export interface MenuPayload {
  id: string;
  name: string;
  menuType: MenuType;
  isRoot: boolean;
  title: string;
  positionMode: PositionMode;
  active: boolean;
  buttons: string[];
}

export interface ButtonPayload {
  id: string;
  parentMenu: string;
  name: string;
  buttonType: ButtonType;
  text: string;
  iconRef?: string;
  subMenuId?: string;
  functionId?: string;
}

export interface DocumentPayload {
  formatVersion: number;
  revision: number;
  menus: MenuPayload[];
  buttons: ButtonPayload[];
}

export interface TransformPayload {
  position: [number, number, number];
  yaw: number;
  pitch: number;
  size: [number, number];
}

export interface LayoutPayload {
  frame: FrameTag;
  titleTransform: TransformPayload;
  buttonTransforms: TransformPayload[];
}

export interface ButtonReportPayload {
  buttonId: string;
  D: number;
  W: number;
  ID: number;
  MT: number;
}

export interface UsabilityPayload {
  menuId: string;
  perButton: ButtonReportPayload[];
  meanMT: number;
  maxMT: number;
  meanID: number;
  notes: string[];
  viewer: { eyePosition: number[]; startDirection: number[] };
  params: { a: number; b: number };
}

export interface ButtonSpecPayload {
  name: string;
  buttonType: ButtonType;
  text?: string;
  iconRef?: string;
  subMenuRef?: string;
  functionId?: string;
}

export interface CreateMenuRequestPayload {
  menuName: string;
  menuType: MenuType;
  isRootMenu: boolean;
  menuTitle: string;
  buttonSpecs: ButtonSpecPayload[];
  positionMode?: PositionMode;
}

export interface OutcomePayload {
  createdIds: string[];
  warnings: string[];
  revision: number;
}

export interface SelectionPayload {
  kind: SelectionKind;
}

export interface ChangeEvent {
  revision: number;
  changedIds: string[];
}

export interface ErrorEnvelope {
  error: { type: string; message: string; [key: string]: unknown };
}

/** Button capacity per archetype, mirrored for responsive hints only;
 * the service remains the authority and clamps or refuses on its own. */
export const MENU_CAPACITY: Record<MenuType, number> = {
  List: 10,
  Matrix: 9,
  Pie: 4,
  Ring: 12,
};

export const MENU_TYPES: readonly MenuType[] = ["List", "Matrix", "Pie", "Ring"];
