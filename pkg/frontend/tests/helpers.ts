import { readFileSync } from "node:fs";

/** Load a service payload captured in tests/fixtures. */
export function fixture<T>(name: string): T {
  const url = new URL(`./fixtures/${name}`, import.meta.url);
  return JSON.parse(readFileSync(url, "utf-8")) as T;
}
