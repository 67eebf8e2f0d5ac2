import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api";
import { AnnotationStore } from "../src/store";
import { FAKE_ANNOTATOR, FAKE_PASSWORD, FakeService } from "./helpers/fake";

async function loggedIn(fake: FakeService): Promise<AnnotationStore> {
  const store = new AnnotationStore(new ApiClient("", fake.fetch));
  await store.login(FAKE_ANNOTATOR, FAKE_PASSWORD);
  expect(store.view).toBe("annotate");
  return store;
}

describe("login", () => {
  it("keeps the login view and shows the server detail on bad credentials", async () => {
    const fake = new FakeService();
    const store = new AnnotationStore(new ApiClient("", fake.fetch));
    await store.login(FAKE_ANNOTATOR, "wrong");
    expect(store.view).toBe("login");
    expect(store.loginError).toBe("unknown annotator or wrong password");
  });

  it("loads prefixes, dhatus, words, and the first pair's rules on success", async () => {
    const fake = new FakeService();
    const store = await loggedIn(fake);
    expect(store.annotator).toBe(FAKE_ANNOTATOR);
    expect(store.prefixes).toEqual(["anu", "ā", "pra"]);
    expect(store.dhatus.map((d) => d.root)).toEqual(["gam", "ñibhī", "pā"]);
    expect(store.words.map((w) => w.headword)).toEqual(["kaṃsa", "vana", "yāna"]);
    expect(store.currentDhatu()?.root).toBe("gam");
    expect(store.currentWord()?.headword).toBe("kaṃsa");
    expect(store.rules).toEqual([]);
  });
});

describe("checklist", () => {
  it("offers exactly the current dhatu's expectancy in canonical role order", async () => {
    const store = await loggedIn(new FakeService());
    expect(store.offeredRoles().map((r) => r.slug)).toEqual(["karta", "karma", "apadana", "adhikarana"]);
    await store.nextDhatu();
    expect(store.offeredRoles().map((r) => r.slug)).toEqual(["karta", "apadana", "adhikarana"]);
    expect(store.offeredRoles().map((r) => r.label)).toEqual(["kartā", "apādāna", "adhikaraṇa"]);
  });

  it("drops checked roles that the newly selected dhatu does not expect", async () => {
    const store = await loggedIn(new FakeService());
    store.toggleRole("karma");
    store.toggleRole("karta");
    await store.nextDhatu();
    expect([...store.checkedRoles]).toEqual(["karta"]);
  });
});

describe("navigation", () => {
  it("wraps both panels and refetches the pair's rules", async () => {
    const fake = new FakeService();
    const store = await loggedIn(fake);
    await store.prevDhatu();
    expect(store.currentDhatu()?.root).toBe("pā");
    await store.nextDhatu();
    await store.nextDhatu();
    expect(store.currentDhatu()?.root).toBe("ñibhī");
    expect(store.rules.map((r) => r.id)).toEqual(["r0003", "r0004"]);
    await store.prevWord();
    expect(store.currentWord()?.headword).toBe("yāna");
    expect(store.rules).toEqual([]);
  });

  it("resets the sense selection when the word changes", async () => {
    const store = await loggedIn(new FakeService());
    store.selectSense(1);
    expect(store.currentSense()?.sense_id).toBe(2);
    await store.nextWord();
    expect(store.senseIndex).toBe(0);
    store.selectSense(5);
    expect(store.senseIndex).toBe(0);
  });
});

describe("create", () => {
  it("submits exactly the fields the form holds, in canonical role order", async () => {
    const fake = new FakeService();
    const store = await loggedIn(fake);
    store.toggleRole("apadana");
    store.toggleRole("karta");
    store.setComment("a note");
    await store.submit();
    const post = fake.calls.find((call) => call.method === "POST" && call.path === "/rules");
    expect(post?.body).toEqual({
      dhatu: "gam",
      headword: "kaṃsa",
      sense_id: 1,
      roles: ["karta", "apadana"],
      comment: "a note",
    });
    expect(store.notice).toBe("created r0005");
    expect(store.checkedRoles.size).toBe(0);
    expect(store.comment).toBe("");
    expect(store.rules.map((r) => r.id)).toEqual(["r0005"]);
  });

  it("includes prefix and sandhi form when given", async () => {
    const fake = new FakeService();
    const store = await loggedIn(fake);
    store.toggleRole("karta");
    store.setPrefix("anu");
    store.setSandhiForm("anugam");
    await store.submit();
    const post = fake.calls.find((call) => call.method === "POST" && call.path === "/rules");
    expect(post?.body).toMatchObject({ prefix: "anu", sandhi_form: "anugam" });
    expect(store.formError).toBeNull();
  });

  it("shows the service's expectancy message inline, with the field name", async () => {
    const fake = new FakeService();
    const store = await loggedIn(fake);
    await store.nextDhatu();
    store.toggleRole("karma");
    await store.submit();
    expect(store.formError?.field).toBe("roles");
    expect(store.formError?.detail).toBe("role karma not in expectancy of 'ñibhī' {kartā, apādāna, adhikaraṇa}");
    expect(store.rules.map((r) => r.id)).toEqual(["r0003", "r0004"]);
  });

  it("shows a duplicate conflict inline without a field", async () => {
    const fake = new FakeService();
    const store = await loggedIn(fake);
    await store.nextDhatu();
    store.selectSense(1);
    store.toggleRole("karta");
    store.toggleRole("apadana");
    await store.submit();
    expect(store.formError?.code).toBe("duplicate-rule");
    expect(store.formError?.field).toBeNull();
  });
});

describe("delete", () => {
  it("refetches the pair list so the view matches a fresh GET", async () => {
    const fake = new FakeService();
    const store = await loggedIn(fake);
    await store.nextDhatu();
    await store.removeRule("r0004");
    expect(store.notice).toBe("deleted r0004");
    expect(store.rules.map((r) => r.id)).toEqual(["r0003"]);
    expect(store.rules).toEqual(fake.activeFor("ñibhī", "kaṃsa"));
  });
});

describe("session expiry", () => {
  it("redirects to the login view when a mutation hits a dead session", async () => {
    const fake = new FakeService();
    const store = await loggedIn(fake);
    store.api.token = "stale-token";
    store.toggleRole("karta");
    await store.submit();
    expect(store.view).toBe("login");
    expect(store.loginError).toBe("session expired, log in again");
  });
});

describe("network failures", () => {
  it("offers a retry that re-runs the failed submission", async () => {
    const fake = new FakeService();
    const store = await loggedIn(fake);
    store.toggleRole("karta");
    fake.failNetwork = 1;
    await store.submit();
    expect(store.formError?.code).toBe("network");
    expect(store.retryable).not.toBeNull();
    await store.retry();
    expect(store.formError).toBeNull();
    expect(store.notice).toBe("created r0005");
    expect(store.rules.map((r) => r.id)).toEqual(["r0005"]);
  });
});

describe("typing assist", () => {
  it("converts SLP1 input and appends it to the chosen field", async () => {
    const store = await loggedIn(new FakeService());
    store.setComment("cold: ");
    store.setAssistText("SItam");
    await store.insertAssist();
    expect(store.comment).toBe("cold: śītam");
    expect(store.assistText).toBe("");
    expect(store.assistFlagged).toEqual([]);

    store.setAssistTarget("sandhi_form");
    store.setAssistText("kaMsa");
    await store.insertAssist();
    expect(store.sandhiForm).toBe("kaṃsa");
  });

  it("keeps the service's flagged characters for display", async () => {
    const store = await loggedIn(new FakeService());
    store.setAssistText("x∆x");
    await store.insertAssist();
    expect(store.assistFlagged).toEqual(["∆"]);
  });
});

describe("devanagari toggle", () => {
  it("converts visible texts through the service and caches them", async () => {
    const fake = new FakeService();
    const store = await loggedIn(fake);
    expect(store.display("kaṃsa")).toBe("kaṃsa");
    await store.toggleDevanagari();
    expect(store.devanagari).toBe(true);
    expect(store.display("gam")).toBe("«gam»");
    expect(store.display("kaṃsa")).toBe("«kaṃsa»");
    const calls = fake.translitCalls;
    await store.toggleDevanagari();
    await store.toggleDevanagari();
    expect(fake.translitCalls).toBe(calls);
    expect(store.display("gam")).toBe("«gam»");
  });
});
