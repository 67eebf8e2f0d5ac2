/** Client-side state for the annotation view.
 *
 * The store holds no business rules: the role checklist is pre-filtered to
 * the current dhatu's expectancy purely as a convenience, and every mutation
 * goes to the service, whose answer (or error) is what gets displayed. After
 * a create or delete the pair's rule list is refetched rather than patched,
 * so the view always matches a fresh GET /rules.
 */

import type { ApiClient, Dhatu, NewRule, RuleRecord, Sense, Word } from "./api";
import { ApiError } from "./api";
import type { Role } from "./roles";
import { ROLES } from "./roles";

export type View = "login" | "annotate";

export type AssistTarget = "comment" | "sandhi_form" | "changed_artha";

export interface InlineError {
  code: string;
  detail: string;
  field: string | null;
}

export class AnnotationStore {
  view: View = "login";
  annotator: string | null = null;
  loginError: string | null = null;

  prefixes: string[] = [];
  dhatus: Dhatu[] = [];
  words: Word[] = [];
  dhatuIndex = 0;
  wordIndex = 0;
  senseIndex = 0;

  checkedRoles = new Set<string>();
  prefix = "";
  sandhiForm = "";
  changedArtha = "";
  comment = "";

  rules: RuleRecord[] = [];
  formError: InlineError | null = null;
  notice: string | null = null;
  retryable: (() => Promise<void>) | null = null;

  devanagari = false;

  assistText = "";
  assistTarget: AssistTarget = "comment";
  assistFlagged: string[] = [];

  private readonly devaCache = new Map<string, string>();
  private readonly listeners = new Set<() => void>();
  private readonly inflight = new Set<Promise<void>>();

  constructor(readonly api: ApiClient) {}

  subscribe(listener: () => void): () => void {
    this.listeners.add(listener);
    return () => this.listeners.delete(listener);
  }

  /** Resolves once every in-flight action has settled; for tests. */
  async settle(): Promise<void> {
    while (this.inflight.size > 0) {
      await Promise.allSettled([...this.inflight]);
    }
  }

  currentDhatu(): Dhatu | null {
    return this.dhatus[this.dhatuIndex] ?? null;
  }

  currentWord(): Word | null {
    return this.words[this.wordIndex] ?? null;
  }

  currentSense(): Sense | null {
    return this.currentWord()?.senses[this.senseIndex] ?? null;
  }

  /** Roles offered by the checklist: the current dhatu's expectancy, canonical order. */
  offeredRoles(): Role[] {
    const expectancy = new Set(this.currentDhatu()?.expectancy ?? []);
    return ROLES.filter((role) => expectancy.has(role.slug));
  }

  /** Show `text` in Devanagari when the toggle is on and a conversion is cached. */
  display(text: string): string {
    if (!this.devanagari) return text;
    return this.devaCache.get(text) ?? text;
  }

  login(annotator: string, password: string): Promise<void> {
    return this.track(this.doLogin(annotator, password));
  }

  nextDhatu(): Promise<void> {
    return this.track(this.step("dhatu", +1));
  }

  prevDhatu(): Promise<void> {
    return this.track(this.step("dhatu", -1));
  }

  nextWord(): Promise<void> {
    return this.track(this.step("word", +1));
  }

  prevWord(): Promise<void> {
    return this.track(this.step("word", -1));
  }

  selectSense(index: number): void {
    const word = this.currentWord();
    if (word === null || index < 0 || index >= word.senses.length) return;
    this.senseIndex = index;
  }

  /** No expectancy check here: the checklist only offers expectancy roles, and
   * the service re-validates anyway, so a stale client still gets an honest 422. */
  toggleRole(slug: string): void {
    if (this.checkedRoles.has(slug)) this.checkedRoles.delete(slug);
    else this.checkedRoles.add(slug);
  }

  setPrefix(value: string): void {
    this.prefix = value;
  }

  setSandhiForm(value: string): void {
    this.sandhiForm = value;
  }

  setChangedArtha(value: string): void {
    this.changedArtha = value;
  }

  setComment(value: string): void {
    this.comment = value;
  }

  setAssistText(value: string): void {
    this.assistText = value;
  }

  setAssistTarget(value: AssistTarget): void {
    this.assistTarget = value;
  }

  submit(): Promise<void> {
    return this.track(this.doSubmit());
  }

  removeRule(id: string): Promise<void> {
    return this.track(this.doRemove(id));
  }

  insertAssist(): Promise<void> {
    return this.track(this.doAssist());
  }

  toggleDevanagari(): Promise<void> {
    return this.track(this.doToggleDevanagari());
  }

  retry(): Promise<void> {
    const action = this.retryable;
    this.retryable = null;
    this.formError = null;
    if (action === null) {
      this.emit();
      return Promise.resolve();
    }
    this.emit();
    return this.track(action());
  }

  private emit(): void {
    for (const listener of this.listeners) listener();
  }

  private track(work: Promise<void>): Promise<void> {
    this.inflight.add(work);
    void work.finally(() => this.inflight.delete(work));
    return work;
  }

  private async doLogin(annotator: string, password: string): Promise<void> {
    this.loginError = null;
    try {
      const session = await this.api.login(annotator, password);
      this.annotator = session.annotator;
      [this.prefixes, this.dhatus, this.words] = await Promise.all([
        this.api.prefixes(),
        this.api.dhatus(),
        this.api.words(),
      ]);
      this.dhatuIndex = 0;
      this.wordIndex = 0;
      this.senseIndex = 0;
      this.resetForm();
      this.notice = null;
      this.rules = await this.fetchRules();
      if (this.devanagari) await this.fillDevaCache();
      this.view = "annotate";
    } catch (err) {
      if (!(err instanceof ApiError)) throw err;
      this.loginError = err.detail;
    }
    this.emit();
  }

  private async step(panel: "dhatu" | "word", delta: number): Promise<void> {
    if (panel === "dhatu") {
      if (this.dhatus.length === 0) return;
      this.dhatuIndex = (this.dhatuIndex + delta + this.dhatus.length) % this.dhatus.length;
      const offered = new Set(this.offeredRoles().map((role) => role.slug));
      for (const slug of [...this.checkedRoles]) {
        if (!offered.has(slug)) this.checkedRoles.delete(slug);
      }
    } else {
      if (this.words.length === 0) return;
      this.wordIndex = (this.wordIndex + delta + this.words.length) % this.words.length;
      this.senseIndex = 0;
    }
    this.formError = null;
    this.notice = null;
    this.emit();
    try {
      this.rules = await this.fetchRules();
      if (this.devanagari) await this.fillDevaCache();
    } catch (err) {
      this.fail(err, null);
      return;
    }
    this.emit();
  }

  private async doSubmit(): Promise<void> {
    const dhatu = this.currentDhatu();
    const word = this.currentWord();
    const sense = this.currentSense();
    if (dhatu === null || word === null || sense === null) return;
    const rule: NewRule = {
      dhatu: dhatu.root,
      headword: word.headword,
      sense_id: sense.sense_id,
      roles: ROLES.filter((role) => this.checkedRoles.has(role.slug)).map((role) => role.slug),
    };
    if (this.prefix !== "") rule.prefix = this.prefix;
    if (this.sandhiForm !== "") rule.sandhi_form = this.sandhiForm;
    if (this.changedArtha !== "") rule.changed_artha = this.changedArtha;
    if (this.comment !== "") rule.comment = this.comment;
    try {
      const created = await this.api.createRule(rule);
      this.notice = `created ${created.id}`;
      this.resetForm();
      this.rules = await this.fetchRules();
      if (this.devanagari) await this.fillDevaCache();
      this.retryable = null;
      this.emit();
    } catch (err) {
      this.fail(err, () => this.doSubmit());
    }
  }

  private async doRemove(id: string): Promise<void> {
    try {
      await this.api.deleteRule(id);
      this.notice = `deleted ${id}`;
      this.formError = null;
      this.rules = await this.fetchRules();
      this.retryable = null;
      this.emit();
    } catch (err) {
      this.fail(err, () => this.doRemove(id));
    }
  }

  private async doAssist(): Promise<void> {
    const text = this.assistText.trim();
    if (text === "") return;
    try {
      const out = await this.api.transliterate(text, "slp1", "iast");
      this.assistFlagged = out.flagged;
      if (this.assistTarget === "comment") this.comment += out.text;
      else if (this.assistTarget === "sandhi_form") this.sandhiForm += out.text;
      else this.changedArtha += out.text;
      this.assistText = "";
      this.emit();
    } catch (err) {
      this.fail(err, () => this.doAssist());
    }
  }

  private async doToggleDevanagari(): Promise<void> {
    this.devanagari = !this.devanagari;
    if (this.devanagari) {
      try {
        await this.fillDevaCache();
      } catch (err) {
        this.devanagari = false;
        this.fail(err, null);
        return;
      }
    }
    this.emit();
  }

  private async fetchRules(): Promise<RuleRecord[]> {
    const dhatu = this.currentDhatu();
    const word = this.currentWord();
    if (dhatu === null || word === null) return [];
    return this.api.rulesFor(dhatu.root, word.headword);
  }

  private async fillDevaCache(): Promise<void> {
    const texts = new Set<string>();
    const dhatu = this.currentDhatu();
    if (dhatu !== null) texts.add(dhatu.root);
    const word = this.currentWord();
    if (word !== null) texts.add(word.headword);
    for (const rule of this.rules) {
      texts.add(rule.sandhi_form);
      texts.add(rule.headword);
    }
    for (const text of texts) {
      if (this.devaCache.has(text)) continue;
      const out = await this.api.transliterate(text, "iast", "devanagari");
      this.devaCache.set(text, out.text);
    }
  }

  private resetForm(): void {
    this.checkedRoles.clear();
    this.prefix = "";
    this.sandhiForm = "";
    this.changedArtha = "";
    this.comment = "";
    this.assistText = "";
    this.assistFlagged = [];
    this.formError = null;
  }

  private fail(err: unknown, retry: (() => Promise<void>) | null): void {
    if (!(err instanceof ApiError)) throw err;
    if (err.status === 401 && this.view === "annotate") {
      this.view = "login";
      this.loginError = "session expired, log in again";
      this.emit();
      return;
    }
    if (err.status === 0) {
      this.formError = { code: err.code, detail: `network failure: ${err.detail}`, field: null };
      this.retryable = retry;
    } else {
      this.formError = { code: err.code, detail: err.detail, field: err.field };
      this.retryable = null;
    }
    this.emit();
  }
}
