import type { AnalyzeResponse, BestMoveResponse } from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {}

export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchImpl(this.base + path, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(body),
      });
    } catch (err) {
      throw new ApiError(`network error: ${String(err)}`);
    }
    const payload = await response.json().catch(() => ({}));
    if (!response.ok) {
      const detail = (payload as { error?: string }).error ?? response.status;
      throw new ApiError(`request failed: ${detail}`);
    }
    return payload as T;
  }

  analyze(boards: number[]): Promise<AnalyzeResponse> {
    return this.post<AnalyzeResponse>("/api/analyze", { boards });
  }

  bestMove(boards: number[]): Promise<BestMoveResponse> {
    return this.post<BestMoveResponse>("/api/bestmove", { boards });
  }
}
