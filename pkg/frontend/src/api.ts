/** Typed client for the yogyata HTTP service.
 *
 * Every method maps 1:1 to one endpoint; the client adds no interpretation
 * beyond JSON (de)serialization, bearer-token injection, and turning error
 * bodies into ApiError values the UI can show inline.
 */

export interface LoginResponse {
  token: string;
  annotator: string;
  expires_at: string;
}

export interface Sense {
  sense_id: number;
  gloss: string;
  tag: string;
}

export interface Word {
  headword: string;
  senses: Sense[];
}

export interface Dhatu {
  root: string;
  artha: string;
  semantic_class: string;
  expectancy: string[];
  role_requirements: Record<string, string[]>;
  provenance: string;
  unverified: boolean;
}

export interface RuleRecord {
  id: string;
  prefix: string | null;
  dhatu: string;
  sandhi_form: string;
  changed_artha: string | null;
  headword: string;
  sense_id: number;
  roles: string[];
  comment: string | null;
  annotator: string;
  created_at: string;
}

export interface NewRule {
  dhatu: string;
  headword: string;
  sense_id: number;
  roles: string[];
  prefix?: string;
  sandhi_form?: string;
  changed_artha?: string;
  comment?: string;
}

export interface TransliterateResult {
  text: string;
  flagged: string[];
}

export type Scheme = "iast" | "slp1" | "devanagari";

/** status 0 means the request never reached the service (network failure). */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    readonly detail: string,
    readonly field: string | null = null,
  ) {
    super(status === 0 ? detail : `${code}: ${detail}`);
    this.name = "ApiError";
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

interface Page<T> {
  items: T[];
  next_cursor: string | null;
}

const PAGE_LIMIT = 500;

export class ApiClient {
  token: string | null = null;

  constructor(
    readonly base: string = "",
    private readonly fetchFn: FetchLike = (input, init) => globalThis.fetch(input, init),
  ) {}

  async login(annotator: string, password: string): Promise<LoginResponse> {
    const session = (await this.request("POST", "/login", { annotator, password })) as LoginResponse;
    this.token = session.token;
    return session;
  }

  async prefixes(): Promise<string[]> {
    const payload = await this.request("GET", "/prefixes");
    return payload.prefixes as string[];
  }

  dhatus(): Promise<Dhatu[]> {
    return this.walk<Dhatu>("/dhatus");
  }

  words(): Promise<Word[]> {
    return this.walk<Word>("/words");
  }

  async rulesFor(lWord: string, rWord: string): Promise<RuleRecord[]> {
    const query = new URLSearchParams({ l: lWord, r: rWord });
    const payload = await this.request("GET", `/rules?${query}`);
    return payload.rules as RuleRecord[];
  }

  async createRule(rule: NewRule): Promise<RuleRecord> {
    return (await this.request("POST", "/rules", rule)) as RuleRecord;
  }

  async deleteRule(id: string): Promise<void> {
    await this.request("DELETE", `/rules/${encodeURIComponent(id)}`);
  }

  async transliterate(text: string, from: Scheme, to: Scheme): Promise<TransliterateResult> {
    return (await this.request("POST", "/transliterate", { text, from, to })) as TransliterateResult;
  }

  private async walk<T>(path: string): Promise<T[]> {
    const items: T[] = [];
    let cursor: string | null = null;
    do {
      const query = new URLSearchParams({ limit: String(PAGE_LIMIT) });
      if (cursor !== null) query.set("cursor", cursor);
      const page = (await this.request("GET", `${path}?${query}`)) as Page<T>;
      items.push(...page.items);
      cursor = page.next_cursor;
    } while (cursor !== null);
    return items;
  }

  private async request(method: string, path: string, body?: unknown): Promise<any> {
    const headers: Record<string, string> = {};
    if (this.token !== null) headers["Authorization"] = `Bearer ${this.token}`;
    const init: RequestInit = { method, headers };
    if (body !== undefined) {
      headers["Content-Type"] = "application/json";
      init.body = JSON.stringify(body);
    }
    let response: Response;
    try {
      response = await this.fetchFn(this.base + path, init);
    } catch (err) {
      const detail = err instanceof Error ? err.message : String(err);
      throw new ApiError(0, "network", detail);
    }
    const text = await response.text();
    let payload: any = null;
    if (text !== "") {
      try {
        payload = JSON.parse(text);
      } catch {
        throw new ApiError(response.status, "bad-response", "service returned non-JSON");
      }
    }
    if (!response.ok) {
      const code = typeof payload?.error === "string" ? payload.error : `http-${response.status}`;
      const detail = typeof payload?.detail === "string" ? payload.detail : "request failed";
      const field = typeof payload?.field === "string" ? payload.field : null;
      throw new ApiError(response.status, code, detail, field);
    }
    return payload;
  }
}
