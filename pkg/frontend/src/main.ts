/** Browser shell: wires the panels, preview, and event stream to the
 * service. All menu intelligence lives server-side; this file only
 * routes user input to API calls and repaints from responses. */

import { ApiClient, ApiError } from "./api.js";
import {
  bindableMenus,
  newCreator,
  renderCreator,
  setButtonCount,
  toCreateRequest,
  updateRow,
  type CreatorModel,
} from "./creator.js";
import { buttonModifier, errorBanner, menuModifier, titleBody } from "./modifier.js";
import { buildPreview, type PreviewScene, type Shape } from "./preview.js";
import { subscribeEvents, type Subscription } from "./sse.js";
import { initialState, isStale, reduce, type AppState } from "./state.js";
import type { DocumentPayload, MenuPayload } from "./types.js";
import { toElement } from "./vdom.js";

const apiBase =
  new URLSearchParams(window.location.search).get("api") ?? window.location.origin;
const api = new ApiClient(apiBase);

let state: AppState = initialState;
let creator: CreatorModel = newCreator();
let docId: string | null = null;
let previewMenu: MenuPayload | null = null;
let subscription: Subscription | null = null;
let heatmap = false;

function dispatch(action: Parameters<typeof reduce>[1]): void {
  state = reduce(state, action);
  if (isStale(state) && docId !== null) {
    void loadDocument(docId);
  }
  render();
}

async function loadDocument(id: string): Promise<void> {
  try {
    const { document } = await api.getDocument(id);
    dispatch({ type: "document-loaded", document });
  } catch (error) {
    dispatch({ type: "notice", message: describe(error) });
  }
}

function describe(error: unknown): string {
  if (error instanceof ApiError) {
    return error.body !== null ? errorBanner(error.body) : error.message;
  }
  return String(error);
}

async function openDocument(id: string): Promise<void> {
  subscription?.close();
  docId = id;
  previewMenu = null;
  await loadDocument(id);
  subscription = subscribeEvents(api.eventsUrl(id), (event) =>
    dispatch({ type: "stream-event", event })
  );
}

async function select(nodeId: string): Promise<void> {
  if (docId === null) {
    return;
  }
  try {
    const { kind } = await api.selection(docId, nodeId);
    dispatch({ type: "selection", kind, nodeId });
  } catch (error) {
    dispatch({ type: "notice", message: describe(error) });
  }
}

// --- rendering -------------------------------------------------------

function container(id: string): HTMLElement {
  const element = document.getElementById(id);
  if (element === null) {
    throw new Error(`missing container #${id}`);
  }
  return element;
}

function render(): void {
  renderDocumentTree(state.document);
  renderPanel();
  void renderPreview();
  const noticeBox = container("notice");
  noticeBox.textContent = state.notice ?? "";
  noticeBox.hidden = state.notice === null;
}

function renderDocumentTree(doc: DocumentPayload | null): void {
  const tree = container("tree");
  tree.replaceChildren();
  if (doc === null) {
    return;
  }
  for (const menu of doc.menus) {
    const menuRow = document.createElement("div");
    menuRow.className = "tree-menu";
    menuRow.textContent = `${menu.title} [${menu.menuType}]`;
    menuRow.addEventListener("click", () => {
      previewMenu = menu;
      void select(menu.id);
    });
    tree.appendChild(menuRow);
    for (const buttonId of menu.buttons) {
      const button = doc.buttons.find((b) => b.id === buttonId);
      const buttonRow = document.createElement("div");
      buttonRow.className = "tree-button";
      buttonRow.textContent = button !== undefined ? button.name : buttonId;
      buttonRow.addEventListener("click", (event) => {
        event.stopPropagation();
        previewMenu = menu;
        void select(buttonId);
      });
      tree.appendChild(buttonRow);
    }
  }
}

function renderPanel(): void {
  const panel = container("panel");
  panel.replaceChildren();
  panel.dataset["mode"] = state.mode;
  if (state.mode === "Creator") {
    const node = renderCreator(creator, bindableMenus(state.document));
    panel.appendChild(toElement(node, document));
    wireCreatorInputs(panel);
    return;
  }
  if (state.mode === "Disabled" || state.document === null || state.selectedId === null) {
    panel.textContent = "select a menu or button, or create a new menu";
    return;
  }
  if (state.mode === "ModifierMenu") {
    renderMenuModifier(panel, state.document, state.selectedId);
  } else {
    renderButtonModifier(panel, state.document, state.selectedId);
  }
}

function wireCreatorInputs(panel: HTMLElement): void {
  panel.querySelectorAll<HTMLInputElement>(".row-name").forEach((input) => {
    input.addEventListener("change", () => {
      creator = updateRow(creator, Number(input.dataset["row"]), {
        name: input.value,
      });
    });
  });
  panel.querySelectorAll<HTMLSelectElement>(".row-type").forEach((selectBox) => {
    selectBox.addEventListener("change", () => {
      creator = updateRow(creator, Number(selectBox.dataset["row"]), {
        buttonType: selectBox.value as "Function" | "SubMenu",
      });
      renderPanel();
    });
  });
}

function renderMenuModifier(
  panel: HTMLElement,
  doc: DocumentPayload,
  menuId: string
): void {
  const model = menuModifier(doc, menuId);
  const title = document.createElement("input");
  title.value = model.title;
  const apply = document.createElement("button");
  apply.textContent = "retitle";
  apply.addEventListener("click", () => {
    if (docId !== null) {
      api
        .setMenuTitle(docId, menuId, titleBody(title.value).title)
        .catch((error) => dispatch({ type: "notice", message: describe(error) }));
    }
  });
  panel.append(title, apply);
}

function renderButtonModifier(
  panel: HTMLElement,
  doc: DocumentPayload,
  buttonId: string
): void {
  const model = buttonModifier(doc, buttonId);
  const text = document.createElement("input");
  text.value = model.text;
  const apply = document.createElement("button");
  apply.textContent = "set text";
  apply.addEventListener("click", () => {
    if (docId !== null) {
      api
        .patchButton(docId, buttonId, { text: text.value })
        .catch((error) => dispatch({ type: "notice", message: describe(error) }));
    }
  });
  const remove = document.createElement("button");
  remove.textContent = "remove";
  remove.addEventListener("click", () => {
    if (docId !== null) {
      api
        .deleteButton(docId, buttonId)
        .catch((error) => dispatch({ type: "notice", message: describe(error) }));
    }
  });
  panel.append(text, apply, remove);
}

async function renderPreview(): Promise<void> {
  const canvas = container("preview");
  if (docId === null || previewMenu === null || state.document === null) {
    canvas.replaceChildren();
    return;
  }
  const menu = state.document.menus.find((m) => m.id === previewMenu?.id) ?? null;
  if (menu === null) {
    canvas.replaceChildren();
    return;
  }
  let scene: PreviewScene;
  try {
    const layout = await api.layout(docId, menu.id);
    const report =
      heatmap && menu.buttons.length > 0
        ? await api.usability(docId, menu.id)
        : null;
    const labels = menu.buttons.map((id) => {
      const button = state.document?.buttons.find((b) => b.id === id);
      return button !== undefined && button.text !== "" ? button.text : id;
    });
    scene = buildPreview({
      menuType: menu.menuType,
      title: menu.title,
      buttonIds: menu.buttons,
      buttonLabels: labels,
      layout,
      report,
    });
  } catch (error) {
    scene = buildPreview({
      menuType: menu.menuType,
      title: menu.title,
      buttonIds: [],
      buttonLabels: [],
      layout: null,
    });
    dispatch({ type: "notice", message: describe(error) });
  }
  paintScene(canvas, scene);
}

const SCALE = 120; // pixels per meter for panel previews

function paintScene(root: HTMLElement, scene: PreviewScene): void {
  root.replaceChildren();
  if (scene.notice !== null) {
    const note = document.createElement("p");
    note.className = "preview-notice";
    note.textContent = scene.notice;
    root.appendChild(note);
    return;
  }
  const shapes: Shape[] = [];
  if (scene.title !== null) {
    shapes.push(scene.title);
  }
  shapes.push(...scene.buttons);
  for (const shape of shapes) {
    const element = document.createElement("div");
    element.className = `shape shape-${shape.kind} shape-${shape.role}`;
    element.textContent = shape.label;
    if (shape.color !== null) {
      element.style.background = shape.color;
    }
    if (shape.kind === "rect") {
      element.style.left = `${240 + shape.x * SCALE - (shape.width * SCALE) / 2}px`;
      element.style.top = `${200 - shape.y * SCALE - (shape.height * SCALE) / 2}px`;
      element.style.width = `${shape.width * SCALE}px`;
      element.style.height = `${shape.height * SCALE}px`;
    } else if (shape.kind === "arc") {
      // top-down: x to the right, -z up, user dot at center
      element.style.left = `${240 + shape.x * 40 - 20}px`;
      element.style.top = `${200 + shape.z * 40 - 8}px`;
      element.style.width = "40px";
      element.style.height = "16px";
      element.style.transform = `rotate(${shape.yaw}rad)`;
    } else {
      const distance = 90;
      const x = 240 + Math.sin(shape.bisector) * distance;
      const y = 200 - Math.cos(shape.bisector) * distance;
      element.style.left = `${x - 30}px`;
      element.style.top = `${y - 12}px`;
      element.style.width = "60px";
      element.style.height = "24px";
    }
    root.appendChild(element);
  }
  if (scene.buttons.some((shape) => shape.kind === "arc")) {
    const user = document.createElement("div");
    user.className = "user-dot";
    user.style.left = "236px";
    user.style.top = "196px";
    root.appendChild(user);
  }
}

// --- bootstrapping ---------------------------------------------------

async function start(): Promise<void> {
  container("new-menu").addEventListener("click", () => {
    creator = newCreator();
    dispatch({ type: "open-creator" });
  });
  container("heatmap").addEventListener("change", (event) => {
    heatmap = (event.target as HTMLInputElement).checked;
    render();
  });
  const countInput = container("button-count") as HTMLInputElement;
  countInput.addEventListener("change", () => {
    creator = setButtonCount(creator, Number(countInput.value));
    renderPanel();
  });
  container("create").addEventListener("click", () => {
    if (docId !== null) {
      api
        .createMenu(docId, toCreateRequest(creator))
        .then((outcome) => {
          if (outcome.warnings.length > 0) {
            dispatch({ type: "notice", message: outcome.warnings.join("; ") });
          }
        })
        .catch((error) => dispatch({ type: "notice", message: describe(error) }));
    }
  });

  const picker = container("documents");
  try {
    const documents = await api.listDocuments();
    for (const entry of documents) {
      const option = document.createElement("option");
      option.value = entry.id;
      option.textContent = `${entry.id} (rev ${entry.revision})`;
      picker.appendChild(option);
    }
    picker.addEventListener("change", () => {
      void openDocument((picker as HTMLSelectElement).value);
    });
    const first = documents[0];
    if (first !== undefined) {
      await openDocument(first.id);
    }
  } catch (error) {
    dispatch({ type: "notice", message: describe(error) });
  }
  render();
}

void start();
