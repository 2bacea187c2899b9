/** Typed client for the document service. Every call goes over HTTP;
 * nothing here re-implements validation, layout, or scoring. */

import type {
  ButtonSpecPayload,
  CreateMenuRequestPayload,
  DocumentPayload,
  ErrorEnvelope,
  LayoutPayload,
  OutcomePayload,
  SelectionPayload,
  UsabilityPayload,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly type: string,
    message: string,
    readonly body: ErrorEnvelope | null
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export interface ButtonPatch {
  type?: "Function" | "SubMenu";
  subMenuRef?: string;
  functionId?: string;
  text?: string;
  iconRef?: string | null;
}

interface RequestOptions {
  body?: unknown;
  rawBody?: string;
  ifMatch?: number;
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (url, init) => fetch(url, init)
  ) {}

  private async request(
    method: string,
    path: string,
    options: RequestOptions = {}
  ): Promise<Response> {
    const headers: Record<string, string> = {};
    let body: string | undefined;
    if (options.rawBody !== undefined) {
      body = options.rawBody;
      headers["Content-Type"] = "application/json";
    } else if (options.body !== undefined) {
      body = JSON.stringify(options.body);
      headers["Content-Type"] = "application/json";
    }
    if (options.ifMatch !== undefined) {
      headers["If-Match"] = `"${options.ifMatch}"`;
    }
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, {
      method,
      headers,
      body,
    });
    if (!response.ok) {
      let envelope: ErrorEnvelope | null = null;
      let message = `${method} ${path} failed with ${response.status}`;
      let type = "Unknown";
      try {
        envelope = (await response.json()) as ErrorEnvelope;
        message = envelope.error.message;
        type = envelope.error.type;
      } catch {
        // non-JSON error body; keep the fallback message
      }
      throw new ApiError(response.status, type, message, envelope);
    }
    return response;
  }

  async listDocuments(): Promise<{ id: string; revision: number }[]> {
    const response = await this.request("GET", "/documents");
    const body = (await response.json()) as {
      documents: { id: string; revision: number }[];
    };
    return body.documents;
  }

  async getDocument(
    docId: string
  ): Promise<{ document: DocumentPayload; revision: number }> {
    const response = await this.request("GET", `/documents/${docId}`);
    const document = (await response.json()) as DocumentPayload;
    const header = response.headers.get("X-Revision");
    return {
      document,
      revision: header !== null ? Number(header) : document.revision,
    };
  }

  async putDocument(
    docId: string,
    serialized: string,
    ifMatch?: number
  ): Promise<{ id: string; revision: number }> {
    const options: RequestOptions = { rawBody: serialized };
    if (ifMatch !== undefined) {
      options.ifMatch = ifMatch;
    }
    const response = await this.request("PUT", `/documents/${docId}`, options);
    return (await response.json()) as { id: string; revision: number };
  }

  async createMenu(
    docId: string,
    request: CreateMenuRequestPayload,
    ifMatch?: number
  ): Promise<OutcomePayload> {
    const options: RequestOptions = { body: request };
    if (ifMatch !== undefined) {
      options.ifMatch = ifMatch;
    }
    const response = await this.request("POST", `/documents/${docId}/menus`, options);
    return (await response.json()) as OutcomePayload;
  }

  async setMenuTitle(
    docId: string,
    menuId: string,
    title: string
  ): Promise<OutcomePayload> {
    const response = await this.request(
      "PATCH",
      `/documents/${docId}/menus/${menuId}`,
      { body: { title } }
    );
    return (await response.json()) as OutcomePayload;
  }

  async addButton(
    docId: string,
    menuId: string,
    spec: ButtonSpecPayload
  ): Promise<OutcomePayload> {
    const response = await this.request(
      "POST",
      `/documents/${docId}/menus/${menuId}/buttons`,
      { body: spec }
    );
    return (await response.json()) as OutcomePayload;
  }

  async patchButton(
    docId: string,
    buttonId: string,
    patch: ButtonPatch
  ): Promise<OutcomePayload> {
    const response = await this.request(
      "PATCH",
      `/documents/${docId}/buttons/${buttonId}`,
      { body: patch }
    );
    return (await response.json()) as OutcomePayload;
  }

  async deleteButton(docId: string, buttonId: string): Promise<OutcomePayload> {
    const response = await this.request(
      "DELETE",
      `/documents/${docId}/buttons/${buttonId}`
    );
    return (await response.json()) as OutcomePayload;
  }

  async selection(docId: string, nodeId: string): Promise<SelectionPayload> {
    const response = await this.request(
      "GET",
      `/documents/${docId}/selection/${nodeId}`
    );
    return (await response.json()) as SelectionPayload;
  }

  async layout(docId: string, menuId: string): Promise<LayoutPayload> {
    const response = await this.request(
      "GET",
      `/documents/${docId}/menus/${menuId}/layout`
    );
    return (await response.json()) as LayoutPayload;
  }

  async usability(
    docId: string,
    menuId: string,
    params?: { a: number; b: number }
  ): Promise<UsabilityPayload> {
    const query =
      params !== undefined ? `?a=${params.a}&b=${params.b}` : "";
    const response = await this.request(
      "GET",
      `/documents/${docId}/menus/${menuId}/usability${query}`
    );
    return (await response.json()) as UsabilityPayload;
  }

  eventsUrl(docId: string): string {
    return `${this.baseUrl}/documents/${docId}/events`;
  }
}
