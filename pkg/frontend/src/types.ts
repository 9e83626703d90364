// Mirror of the checking service's request/response schema.

export type StyleMode = "neutral" | "pair" | "internal_i" | "custom_char";

export interface StylePreference {
  mode: StyleMode;
  gender_char?: string | null;
}

export interface Alternative {
  sentence_text: string;
  replacement: string;
  style: string;
  unverified: boolean;
}

export interface Suggestion {
  span: [number, number];
  exclusive_phrase: string;
  alternatives: Alternative[];
  explanation: string;
  alternatives_unavailable: boolean;
}

export interface CheckResponse {
  suggestions: Suggestion[];
  engine_version: string;
}
