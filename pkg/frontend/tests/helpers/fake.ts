/** In-memory stand-in for the yogyata service, exposed as a fetch function.
 *
 * Mirrors the wire contract closely enough for unit tests: bearer auth on
 * mutations, cursor pagination, expectancy validation with the service's
 * message shape, duplicate detection, and a tiny transliteration table.
 */

import type { Dhatu, FetchLike, NewRule, RuleRecord, Word } from "../../src/api";
import { roleLabel } from "../../src/roles";

export const FAKE_TOKEN = "tok-fake-1";
export const FAKE_ANNOTATOR = "annotator1";
export const FAKE_PASSWORD = "yogyata-dev";

export interface RecordedCall {
  method: string;
  path: string;
  headers: Record<string, string>;
  body: unknown;
}

const DHATUS: Dhatu[] = [
  {
    root: "gam",
    artha: "to go",
    semantic_class: "gati",
    expectancy: ["karta", "karma", "apadana", "adhikarana"],
    role_requirements: { karta: ["cala", "gamana-sadhana"] },
    provenance: "seed",
    unverified: false,
  },
  {
    root: "ñibhī",
    artha: "to fear",
    semantic_class: "bhaya",
    expectancy: ["karta", "apadana", "adhikarana"],
    role_requirements: { apadana: ["dravya"] },
    provenance: "seed",
    unverified: false,
  },
  {
    root: "pā",
    artha: "to drink",
    semantic_class: "bhojana",
    expectancy: ["karta", "karma", "karana", "adhikarana"],
    role_requirements: {},
    provenance: "seed",
    unverified: true,
  },
];

const WORDS: Word[] = [
  {
    headword: "kaṃsa",
    senses: [
      { sense_id: 1, gloss: "Vessel made up of metal", tag: "teja-prthvi-samyukta" },
      { sense_id: 2, gloss: "King of Mathura", tag: "cala-sajiva" },
    ],
  },
  { headword: "vana", senses: [{ sense_id: 1, gloss: "Forest", tag: "sthavara" }] },
  { headword: "yāna", senses: [{ sense_id: 1, gloss: "Vehicle", tag: "gamana-sadhana" }] },
];

const PREFIXES = ["anu", "ā", "pra"];

const SLP1_TO_IAST: Record<string, string> = {
  SItam: "śītam",
  kaMsa: "kaṃsa",
  gacCati: "gacchati",
};

function seedRules(): RuleRecord[] {
  return [
    {
      id: "r0003",
      prefix: null,
      dhatu: "ñibhī",
      sandhi_form: "ñibhī",
      changed_artha: null,
      headword: "kaṃsa",
      sense_id: 1,
      roles: ["apadana"],
      comment: "one can only fear from a vessel",
      annotator: "seed",
      created_at: "2020-12-01T00:00:02+00:00",
    },
    {
      id: "r0004",
      prefix: null,
      dhatu: "ñibhī",
      sandhi_form: "ñibhī",
      changed_artha: null,
      headword: "kaṃsa",
      sense_id: 2,
      roles: ["karta", "apadana"],
      comment: "the king fears, or is feared",
      annotator: "seed",
      created_at: "2020-12-01T00:00:03+00:00",
    },
  ];
}

function json(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

export class FakeService {
  calls: RecordedCall[] = [];
  rules: RuleRecord[] = seedRules();
  translitCalls = 0;
  /** When > 0, that many upcoming requests fail at the network level. */
  failNetwork = 0;
  private nextId = 5;
  private readonly pageCap: number;

  constructor(options: { pageCap?: number } = {}) {
    this.pageCap = options.pageCap ?? 500;
  }

  readonly fetch: FetchLike = async (input, init) => {
    const url = new URL(input, "http://fake.test");
    const method = init?.method ?? "GET";
    const headers = (init?.headers ?? {}) as Record<string, string>;
    const body = typeof init?.body === "string" ? JSON.parse(init.body) : undefined;
    this.calls.push({ method, path: url.pathname + url.search, headers, body });
    if (this.failNetwork > 0) {
      this.failNetwork -= 1;
      throw new TypeError("fetch failed");
    }
    return this.route(method, url, headers, body);
  };

  activeFor(lWord: string, rWord: string): RuleRecord[] {
    return this.rules.filter((rule) => rule.sandhi_form === lWord && rule.headword === rWord);
  }

  private route(method: string, url: URL, headers: Record<string, string>, body: any): Response {
    const path = url.pathname;
    if (method === "POST" && path === "/login") {
      if (body?.annotator === FAKE_ANNOTATOR && body?.password === FAKE_PASSWORD) {
        return json(200, {
          token: FAKE_TOKEN,
          annotator: FAKE_ANNOTATOR,
          expires_at: "2030-01-01T00:00:00+00:00",
        });
      }
      return json(401, { error: "unauthorized", detail: "unknown annotator or wrong password" });
    }
    if (method === "GET" && path === "/prefixes") return json(200, { prefixes: PREFIXES });
    if (method === "GET" && path === "/dhatus") {
      return this.page(url, DHATUS, (dhatu) => dhatu.root);
    }
    if (method === "GET" && path === "/words") {
      return this.page(url, WORDS, (word) => word.headword);
    }
    if (method === "GET" && path === "/rules") {
      const l = url.searchParams.get("l");
      const r = url.searchParams.get("r");
      let found = this.rules;
      if (l !== null) found = found.filter((rule) => rule.sandhi_form === l);
      if (r !== null) found = found.filter((rule) => rule.headword === r);
      return json(200, { rules: found });
    }
    if (method === "POST" && path === "/rules") {
      return this.createRule(headers, body as NewRule);
    }
    if (method === "DELETE" && path.startsWith("/rules/")) {
      if (!this.authed(headers)) return json(401, { error: "unauthorized", detail: "unknown session token" });
      const id = decodeURIComponent(path.slice("/rules/".length));
      const index = this.rules.findIndex((rule) => rule.id === id);
      if (index < 0) return json(404, { error: "not-found", detail: `no active rule ${id}` });
      this.rules.splice(index, 1);
      return json(200, { deleted: id });
    }
    if (method === "POST" && path === "/transliterate") {
      this.translitCalls += 1;
      return this.transliterate(body);
    }
    return json(404, { error: "not-found", detail: `no route ${method} ${path}` });
  }

  private page<T>(url: URL, items: T[], key: (item: T) => string): Response {
    const rawLimit = url.searchParams.get("limit");
    const limit = Math.min(rawLimit === null ? 1 : Number(rawLimit), this.pageCap);
    if (!Number.isInteger(limit) || limit < 1) {
      return json(400, { error: "bad-limit", detail: `limit must lie in 1..500` });
    }
    const cursor = url.searchParams.get("cursor");
    const keys = items.map(key);
    let start = 0;
    if (cursor !== null) {
      const at = keys.indexOf(cursor);
      if (at < 0) return json(400, { error: "bad-cursor", detail: "unknown cursor" });
      start = at + 1;
    }
    const slice = items.slice(start, start + limit);
    const nextCursor = start + limit < items.length && slice.length > 0 ? key(slice[slice.length - 1]!) : null;
    return json(200, { items: slice, next_cursor: nextCursor });
  }

  private authed(headers: Record<string, string>): boolean {
    return headers["Authorization"] === `Bearer ${FAKE_TOKEN}`;
  }

  private createRule(headers: Record<string, string>, body: NewRule): Response {
    if (!this.authed(headers)) return json(401, { error: "unauthorized", detail: "unknown session token" });
    for (const field of ["dhatu", "headword", "sense_id", "roles"] as const) {
      if (body?.[field] === undefined) return json(422, { error: "validation", detail: `missing ${field}`, field });
    }
    const dhatu = DHATUS.find((d) => d.root === body.dhatu);
    if (dhatu === undefined) return json(404, { error: "not-found", detail: `unknown dhatu ${body.dhatu}` });
    if (body.prefix !== undefined && body.sandhi_form === undefined) {
      return json(422, { error: "validation", detail: "a prefixed form needs an explicit sandhi form", field: "sandhi_form" });
    }
    const expectancy = new Set(dhatu.expectancy);
    for (const slug of body.roles) {
      if (!expectancy.has(slug)) {
        const labels = dhatu.expectancy.map(roleLabel).join(", ");
        return json(422, {
          error: "validation",
          detail: `role ${roleLabel(slug)} not in expectancy of '${dhatu.root}' {${labels}}`,
          field: "roles",
        });
      }
    }
    const sandhi = body.sandhi_form ?? dhatu.root;
    const duplicate = this.rules.some(
      (rule) => rule.sandhi_form === sandhi && rule.headword === body.headword && rule.sense_id === body.sense_id,
    );
    if (duplicate) {
      return json(409, {
        error: "duplicate-rule",
        detail: `an active rule already exists for ${sandhi} / ${body.headword} sense ${body.sense_id}`,
      });
    }
    const record: RuleRecord = {
      id: `r${String(this.nextId++).padStart(4, "0")}`,
      prefix: body.prefix ?? null,
      dhatu: body.dhatu,
      sandhi_form: sandhi,
      changed_artha: body.changed_artha ?? null,
      headword: body.headword,
      sense_id: body.sense_id,
      roles: [...body.roles],
      comment: body.comment ?? null,
      annotator: FAKE_ANNOTATOR,
      created_at: "2020-12-01T00:00:09+00:00",
    };
    this.rules.push(record);
    return json(201, record);
  }

  private transliterate(body: any): Response {
    if (typeof body?.text !== "string") return json(422, { error: "validation", detail: "missing text", field: "text" });
    if (body.from === "slp1" && body.to === "iast") {
      const hit = SLP1_TO_IAST[body.text];
      if (hit !== undefined) return json(200, { text: hit, flagged: [] });
      const flagged = [...body.text].filter((ch) => !/[a-zA-Z ]/.test(ch));
      return json(200, { text: body.text, flagged });
    }
    if (body.from === "iast" && body.to === "devanagari") {
      return json(200, { text: `«${body.text}»`, flagged: [] });
    }
    return json(400, { error: "bad-scheme", detail: `unsupported pair ${body.from}->${body.to}` });
  }
}
