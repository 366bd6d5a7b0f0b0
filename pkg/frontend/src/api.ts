/** Thin typed client over the service HTTP API.
 *
 * The fetch function is injectable so tests can intercept every request;
 * the composer never computes sentence text itself, it only displays what
 * these endpoints return.
 */

import {
  ApiError,
  ApiErrorBody,
  CatalogueInfo,
  PhraseDetail,
  PhraseSummary,
  RenderResponse,
  SelectionDoc,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export interface BulletinDraftDoc {
  id: string;
  issuedAt: string;
  edition: "morning" | "evening";
  catalogueVersion: number;
  descriptions: {
    id: string;
    label: string;
    entries: (
      | { t: "phrase"; selection: SelectionDoc }
      | { t: "joker"; texts: Record<string, string> }
    )[];
  }[];
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, init);
    const body = await response.json();
    if (!response.ok) {
      throw new ApiError(body as ApiErrorBody);
    }
    return body as T;
  }

  getCatalogue(): Promise<CatalogueInfo> {
    return this.request<CatalogueInfo>("/api/catalogue");
  }

  async listPhrases(query?: string, k = 20): Promise<PhraseSummary[]> {
    const params = query ? `?q=${encodeURIComponent(query)}&k=${k}` : "";
    const body = await this.request<{ phrases: PhraseSummary[] }>(
      `/api/phrases${params}`,
    );
    return body.phrases;
  }

  getPhrase(id: string): Promise<PhraseDetail> {
    return this.request<PhraseDetail>(`/api/phrases/${encodeURIComponent(id)}`);
  }

  render(catalogueVersion: number, selection: SelectionDoc): Promise<RenderResponse> {
    return this.request<RenderResponse>("/api/render", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ catalogueVersion, selection }),
    });
  }

  storeBulletin(doc: BulletinDraftDoc): Promise<{ id: string }> {
    return this.request<{ id: string }>("/api/bulletins", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(doc),
    });
  }

  loadBulletin(id: string): Promise<BulletinDraftDoc> {
    return this.request<BulletinDraftDoc>(`/api/bulletins/${encodeURIComponent(id)}`);
  }
}
