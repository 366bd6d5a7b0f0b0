/** Wire types, mirroring the service's JSON documents exactly. */

export interface CatalogueInfo {
  version: number;
  source: string;
  languages: string[];
}

export interface PhraseSummary {
  id: string;
  label: string;
  segments: number;
  score?: number;
  matchedTokens?: string[];
}

export type TokenDoc = { t: "lit" | "slot"; v: string };

export type ContentDoc = TokenDoc[] | { a: TokenDoc[]; b: TokenDoc[] };

export interface AgreementDoc {
  gender: string;
  number: string;
}

export interface OptionDoc {
  id: string;
  contents: Record<string, ContentDoc>;
  antecedentHint?: string;
  agreement?: Record<string, AgreementDoc>;
}

export interface SegmentDoc {
  id: string;
  label: string;
  uniformAgreement: boolean;
  options: OptionDoc[];
}

export interface PhraseDoc {
  id: string;
  label: string;
  segments: SegmentDoc[];
  layouts: Record<string, string[]>;
}

export interface SubSegmentDoc {
  label: string;
  options: OptionDoc[];
}

/** GET /api/phrases/{id} */
export interface PhraseDetail {
  catalogueVersion: number;
  phrase: PhraseDoc;
  subSegments: Record<string, SubSegmentDoc>;
}

export interface SelectionDoc {
  phraseId: string;
  choices: Record<string, string>;
  slotChoices: Record<string, string>;
}

export interface RenderResponse {
  catalogueVersion: number;
  texts: Record<string, string>;
}

export type DraftEntry =
  | { kind: "phrase"; selection: SelectionDoc; texts: Record<string, string> }
  | { kind: "joker"; texts: Record<string, string> };

export interface ApiErrorBody {
  httpStatus: number;
  code: string;
  detail: string;
  path?: string;
  report?: { code: string; path: string; message: string }[];
  problems?: string[];
}

/** Thrown by the API client for any non-2xx response. */
export class ApiError extends Error {
  constructor(readonly body: ApiErrorBody) {
    super(body.detail);
  }

  get code(): string {
    return this.body.code;
  }
}
