/** Incremental parser for the service's event stream plus a browser
 * subscription helper. One subscription per open document. */

import type { ChangeEvent } from "./types.js";

export interface SseParser {
  /** Feed a chunk (possibly a partial line); returns completed events. */
  feed(chunk: string): ChangeEvent[];
}

export function createSseParser(): SseParser {
  let pending = "";
  let dataLines: string[] = [];
  return {
    feed(chunk: string): ChangeEvent[] {
      const events: ChangeEvent[] = [];
      pending += chunk;
      let newline = pending.indexOf("\n");
      while (newline >= 0) {
        const line = pending.slice(0, newline).replace(/\r$/, "");
        pending = pending.slice(newline + 1);
        newline = pending.indexOf("\n");
        if (line === "") {
          if (dataLines.length > 0) {
            events.push(JSON.parse(dataLines.join("\n")) as ChangeEvent);
            dataLines = [];
          }
          continue;
        }
        if (line.startsWith(":")) {
          continue; // keep-alive comment
        }
        if (line.startsWith("data:")) {
          dataLines.push(line.slice("data:".length).trimStart());
        }
      }
      return events;
    },
  };
}

export interface EventSourceLike {
  onmessage: ((event: { data: string }) => void) | null;
  close(): void;
}

export interface Subscription {
  close(): void;
}

/** Subscribe via EventSource (injectable for tests). The cast is safe:
 * we only ever assign onmessage, never read the browser's handler. */
export function subscribeEvents(
  url: string,
  onEvent: (event: ChangeEvent) => void,
  makeSource: (url: string) => EventSourceLike = (u) =>
    new EventSource(u) as unknown as EventSourceLike
): Subscription {
  const source = makeSource(url);
  source.onmessage = (message) => {
    onEvent(JSON.parse(message.data) as ChangeEvent);
  };
  return { close: () => source.close() };
}
