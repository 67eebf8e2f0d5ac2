/** DOM rendering for the annotation view.
 *
 * The whole app re-renders from store state after every completed action;
 * text inputs write back into the store silently so typing does not trigger
 * a rebuild under the caret.
 */

import type { AnnotationStore, AssistTarget } from "./store";
import { roleLabel } from "./roles";

type Child = Node | string;

function el(tag: string, attrs: Record<string, string> = {}, children: Child[] = []): HTMLElement {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  for (const child of children) {
    node.append(typeof child === "string" ? document.createTextNode(child) : child);
  }
  return node;
}

function textInput(id: string, value: string, onInput: (value: string) => void): HTMLInputElement {
  const node = el("input", { id, type: "text" }) as HTMLInputElement;
  node.value = value;
  node.addEventListener("input", () => onInput(node.value));
  return node;
}

function labeled(text: string, control: HTMLElement): HTMLElement {
  return el("label", { class: "field" }, [text, control]);
}

export function mount(store: AnnotationStore, root: HTMLElement): void {
  const rerender = () => render(store, root);
  store.subscribe(rerender);
  rerender();
}

export function render(store: AnnotationStore, root: HTMLElement): void {
  root.replaceChildren(store.view === "login" ? loginView(store) : annotateView(store));
}

function loginView(store: AnnotationStore): HTMLElement {
  const annotator = el("input", { id: "login-annotator", type: "text", autocomplete: "username" }) as HTMLInputElement;
  const password = el("input", { id: "login-password", type: "password" }) as HTMLInputElement;
  const submit = el("button", { id: "login-submit", type: "button" }, ["log in"]);
  submit.addEventListener("click", () => {
    void store.login(annotator.value, password.value);
  });
  const error = el("div", { id: "login-error", class: "error" }, store.loginError === null ? [] : [store.loginError]);
  return el("div", { class: "login-panel" }, [
    el("h1", {}, ["yogyatā annotation"]),
    labeled("annotator", annotator),
    labeled("password", password),
    submit,
    error,
  ]);
}

function annotateView(store: AnnotationStore): HTMLElement {
  return el("div", { class: "annotate" }, [
    header(store),
    el("div", { class: "panels" }, [prefixPanel(store), dhatuPanel(store), wordPanel(store)]),
    rolePanel(store),
    formPanel(store),
    statusPanel(store),
    ruleListPanel(store),
  ]);
}

function header(store: AnnotationStore): HTMLElement {
  const toggle = el("input", { id: "deva-toggle", type: "checkbox" }) as HTMLInputElement;
  toggle.checked = store.devanagari;
  toggle.addEventListener("change", () => {
    void store.toggleDevanagari();
  });
  return el("header", {}, [
    el("span", { id: "whoami" }, [`signed in as ${store.annotator ?? "?"}`]),
    el("label", { class: "deva" }, [toggle, "Devanagari"]),
  ]);
}

function prefixPanel(store: AnnotationStore): HTMLElement {
  const options: HTMLElement[] = [];
  const choices = ["", ...store.prefixes];
  for (const value of choices) {
    const id = value === "" ? "prefix-none" : `prefix-${value}`;
    const radio = el("input", { id, type: "radio", name: "prefix", value }) as HTMLInputElement;
    radio.checked = store.prefix === value;
    radio.addEventListener("change", () => store.setPrefix(value));
    options.push(el("label", { class: "choice" }, [radio, value === "" ? "(none)" : value]));
  }
  return el("section", { class: "panel", id: "prefix-panel" }, [el("h2", {}, ["upasarga"]), ...options]);
}

function dhatuPanel(store: AnnotationStore): HTMLElement {
  const prev = el("button", { id: "dhatu-prev", type: "button" }, ["< prev"]);
  const next = el("button", { id: "dhatu-next", type: "button" }, ["next >"]);
  prev.addEventListener("click", () => {
    void store.prevDhatu();
  });
  next.addEventListener("click", () => {
    void store.nextDhatu();
  });
  const dhatu = store.currentDhatu();
  const body: Child[] = [];
  if (dhatu === null) {
    body.push(el("p", {}, ["no dhātus loaded"]));
  } else {
    const mark = dhatu.unverified ? " (unverified)" : "";
    body.push(el("h3", { id: "dhatu-root" }, [store.display(dhatu.root) + mark]));
    body.push(el("p", { class: "artha" }, [dhatu.artha]));
    const expected = store.offeredRoles().map((role) => role.label).join(", ");
    body.push(el("p", { class: "expectancy" }, [`expects: ${expected}`]));
    body.push(el("p", { class: "provenance" }, [dhatu.provenance]));
  }
  return el("section", { class: "panel", id: "dhatu-panel" }, [
    el("h2", {}, ["dhātu"]),
    el("div", { class: "pager" }, [prev, next]),
    ...body,
  ]);
}

function wordPanel(store: AnnotationStore): HTMLElement {
  const prev = el("button", { id: "word-prev", type: "button" }, ["< prev"]);
  const next = el("button", { id: "word-next", type: "button" }, ["next >"]);
  prev.addEventListener("click", () => {
    void store.prevWord();
  });
  next.addEventListener("click", () => {
    void store.nextWord();
  });
  const word = store.currentWord();
  const body: Child[] = [];
  if (word === null) {
    body.push(el("p", {}, ["no words loaded"]));
  } else {
    body.push(el("h3", { id: "word-headword" }, [store.display(word.headword)]));
    word.senses.forEach((sense, index) => {
      const radio = el("input", {
        id: `sense-${sense.sense_id}`,
        type: "radio",
        name: "sense",
        value: String(index),
      }) as HTMLInputElement;
      radio.checked = index === store.senseIndex;
      radio.addEventListener("change", () => store.selectSense(index));
      body.push(el("label", { class: "choice" }, [radio, `${sense.sense_id}. ${sense.gloss} (${sense.tag})`]));
    });
  }
  return el("section", { class: "panel", id: "word-panel" }, [
    el("h2", {}, ["dictionary word"]),
    el("div", { class: "pager" }, [prev, next]),
    ...body,
  ]);
}

function rolePanel(store: AnnotationStore): HTMLElement {
  const boxes: HTMLElement[] = [];
  for (const role of store.offeredRoles()) {
    const box = el("input", { id: `role-${role.slug}`, type: "checkbox" }) as HTMLInputElement;
    box.checked = store.checkedRoles.has(role.slug);
    box.addEventListener("change", () => store.toggleRole(role.slug));
    boxes.push(el("label", { class: "choice" }, [box, role.label]));
  }
  return el("fieldset", { id: "role-checklist" }, [el("legend", {}, ["kāraka roles"]), ...boxes]);
}

function formPanel(store: AnnotationStore): HTMLElement {
  const sandhi = textInput("field-sandhi", store.sandhiForm, (value) => store.setSandhiForm(value));
  const artha = textInput("field-artha", store.changedArtha, (value) => store.setChangedArtha(value));
  const comment = textInput("field-comment", store.comment, (value) => store.setComment(value));

  const assistInput = textInput("assist-input", store.assistText, (value) => store.setAssistText(value));
  const target = el("select", { id: "assist-target" }) as HTMLSelectElement;
  const targets: [AssistTarget, string][] = [
    ["comment", "comment"],
    ["sandhi_form", "sandhi form"],
    ["changed_artha", "changed artha"],
  ];
  for (const [value, text] of targets) {
    const option = el("option", { value }, [text]) as HTMLOptionElement;
    option.selected = store.assistTarget === value;
    target.append(option);
  }
  target.addEventListener("change", () => store.setAssistTarget(target.value as AssistTarget));
  const insert = el("button", { id: "assist-insert", type: "button" }, ["insert as IAST"]);
  insert.addEventListener("click", () => {
    void store.insertAssist();
  });
  const flagged =
    store.assistFlagged.length === 0
      ? el("span", { id: "assist-flagged", class: "hidden" })
      : el("span", { id: "assist-flagged", class: "flagged" }, [
          `passed through unmapped: ${store.assistFlagged.join(" ")}`,
        ]);

  const submit = el("button", { id: "rule-submit", type: "button" }, ["save rule"]);
  submit.addEventListener("click", () => {
    void store.submit();
  });

  return el("section", { class: "panel", id: "rule-form" }, [
    el("h2", {}, ["new rule"]),
    labeled("sandhi form", sandhi),
    labeled("changed artha", artha),
    labeled("comment", comment),
    el("div", { class: "assist" }, [labeled("SLP1 assist", assistInput), target, insert, flagged]),
    submit,
  ]);
}

function statusPanel(store: AnnotationStore): HTMLElement {
  const children: Child[] = [];
  if (store.formError !== null) {
    const text =
      store.formError.field === null
        ? store.formError.detail
        : `${store.formError.field}: ${store.formError.detail}`;
    const parts: Child[] = [text];
    if (store.retryable !== null) {
      const retry = el("button", { id: "retry", type: "button" }, ["retry"]);
      retry.addEventListener("click", () => {
        void store.retry();
      });
      parts.push(retry);
    }
    children.push(el("div", { id: "form-error", class: "error" }, parts));
  }
  if (store.notice !== null) {
    children.push(el("div", { id: "notice", class: "notice" }, [store.notice]));
  }
  return el("div", { class: "status" }, children);
}

function ruleListPanel(store: AnnotationStore): HTMLElement {
  const dhatu = store.currentDhatu();
  const word = store.currentWord();
  const title =
    dhatu === null || word === null
      ? "rules"
      : `rules for ${store.display(dhatu.root)} + ${store.display(word.headword)}`;
  const rows: HTMLElement[] = [];
  for (const rule of store.rules) {
    const remove = el("button", { class: "rule-del", type: "button", "data-id": rule.id }, ["delete"]);
    remove.addEventListener("click", () => {
      void store.removeRule(rule.id);
    });
    const lWord = rule.prefix === null ? store.display(rule.sandhi_form) : `${rule.prefix}+${rule.dhatu} (${store.display(rule.sandhi_form)})`;
    rows.push(
      el("tr", { class: "rule-row", "data-id": rule.id }, [
        el("td", { class: "rule-id" }, [rule.id]),
        el("td", {}, [lWord]),
        el("td", {}, [`${store.display(rule.headword)} #${rule.sense_id}`]),
        el("td", { class: "rule-roles" }, [rule.roles.map(roleLabel).join(", ")]),
        el("td", {}, [rule.comment ?? ""]),
        el("td", {}, [rule.annotator]),
        el("td", {}, [remove]),
      ]),
    );
  }
  const table =
    rows.length === 0
      ? el("p", { id: "rule-list-empty" }, ["no rules yet for this pair"])
      : el("table", { id: "rule-list" }, [el("tbody", {}, rows)]);
  return el("section", { class: "panel", id: "pair-rules" }, [el("h2", {}, [title]), table]);
}
