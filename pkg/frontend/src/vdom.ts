/** Minimal virtual nodes: panels build trees of these, the browser
 * shell turns them into real elements. Keeps panel logic testable
 * without a DOM. */

export interface VNode {
  tag: string;
  attrs: Record<string, string>;
  children: (VNode | string)[];
}

export function h(
  tag: string,
  attrs: Record<string, string> = {},
  ...children: (VNode | string)[]
): VNode {
  return { tag, attrs, children };
}

/** Depth-first collect of nodes matching the predicate. */
export function find(root: VNode, predicate: (node: VNode) => boolean): VNode[] {
  const hits: VNode[] = [];
  const stack: VNode[] = [root];
  while (stack.length > 0) {
    const node = stack.pop()!;
    if (predicate(node)) {
      hits.push(node);
    }
    for (let i = node.children.length - 1; i >= 0; i -= 1) {
      const child = node.children[i];
      if (child !== undefined && typeof child !== "string") {
        stack.push(child);
      }
    }
  }
  return hits;
}

export function byClass(root: VNode, className: string): VNode[] {
  return find(root, (node) =>
    (node.attrs["class"] ?? "").split(" ").includes(className)
  );
}

export function toElement(node: VNode, doc: Document): Element {
  const element = doc.createElement(node.tag);
  for (const [key, value] of Object.entries(node.attrs)) {
    element.setAttribute(key, value);
  }
  for (const child of node.children) {
    if (typeof child === "string") {
      element.appendChild(doc.createTextNode(child));
    } else {
      element.appendChild(toElement(child, doc));
    }
  }
  return element;
}
