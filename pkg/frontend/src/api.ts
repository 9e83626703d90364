import type { CheckResponse, StylePreference } from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

export class CheckClient {
  constructor(private baseUrl: string,
              private fetchImpl: FetchLike = fetch) {}

  async check(text: string, style: StylePreference,
              signal?: AbortSignal): Promise<CheckResponse> {
    const resp = await this.fetchImpl(`${this.baseUrl}/api/v1/check`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ text, style }),
      signal,
    });
    if (!resp.ok) {
      throw new ApiError(resp.status, await resp.text());
    }
    return (await resp.json()) as CheckResponse;
  }
}
