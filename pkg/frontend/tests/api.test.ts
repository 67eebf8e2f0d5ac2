import { describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api";
import { FAKE_ANNOTATOR, FAKE_PASSWORD, FAKE_TOKEN, FakeService } from "./helpers/fake";

describe("authentication", () => {
  it("sends no Authorization header before login and the bearer token after", async () => {
    const fake = new FakeService();
    const api = new ApiClient("", fake.fetch);
    await api.prefixes();
    expect(fake.calls[0]!.headers["Authorization"]).toBeUndefined();

    await api.login(FAKE_ANNOTATOR, FAKE_PASSWORD);
    expect(api.token).toBe(FAKE_TOKEN);
    await api.prefixes();
    const last = fake.calls[fake.calls.length - 1]!;
    expect(last.headers["Authorization"]).toBe(`Bearer ${FAKE_TOKEN}`);
  });

  it("turns a login rejection into an ApiError with the server detail", async () => {
    const fake = new FakeService();
    const api = new ApiClient("", fake.fetch);
    const err = await api.login(FAKE_ANNOTATOR, "nope").catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.status).toBe(401);
    expect(err.code).toBe("unauthorized");
    expect(err.detail).toBe("unknown annotator or wrong password");
    expect(api.token).toBeNull();
  });
});

describe("pagination", () => {
  it("walks dhatu pages by following next_cursor", async () => {
    const fake = new FakeService({ pageCap: 2 });
    const api = new ApiClient("", fake.fetch);
    const dhatus = await api.dhatus();
    expect(dhatus.map((d) => d.root)).toEqual(["gam", "ñibhī", "pā"]);
    const pages = fake.calls.filter((call) => call.path.startsWith("/dhatus"));
    expect(pages.length).toBe(2);
    expect(pages[1]!.path).toContain("cursor=");
  });

  it("fetches the word list in one page when it fits", async () => {
    const fake = new FakeService();
    const api = new ApiClient("", fake.fetch);
    const words = await api.words();
    expect(words.map((w) => w.headword)).toEqual(["kaṃsa", "vana", "yāna"]);
    expect(fake.calls.filter((call) => call.path.startsWith("/words")).length).toBe(1);
  });
});

describe("error mapping", () => {
  it("exposes status, code, detail, and field from a validation body", async () => {
    const fake = new FakeService();
    const api = new ApiClient("", fake.fetch);
    await api.login(FAKE_ANNOTATOR, FAKE_PASSWORD);
    const err = await api
      .createRule({ dhatu: "ñibhī", headword: "kaṃsa", sense_id: 1, roles: ["karma"] })
      .catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.status).toBe(422);
    expect(err.code).toBe("validation");
    expect(err.field).toBe("roles");
    expect(err.detail).toContain("karma");
    expect(err.detail).toContain("kartā, apādāna, adhikaraṇa");
  });

  it("maps fetch-level failures to status 0 with code network", async () => {
    const fake = new FakeService();
    fake.failNetwork = 1;
    const api = new ApiClient("", fake.fetch);
    const err = await api.prefixes().catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.status).toBe(0);
    expect(err.code).toBe("network");
  });

  it("keeps duplicate errors distinct from validation errors", async () => {
    const fake = new FakeService();
    const api = new ApiClient("", fake.fetch);
    await api.login(FAKE_ANNOTATOR, FAKE_PASSWORD);
    const err = await api
      .createRule({ dhatu: "ñibhī", headword: "kaṃsa", sense_id: 2, roles: ["karta", "apadana"] })
      .catch((e) => e);
    expect(err.status).toBe(409);
    expect(err.code).toBe("duplicate-rule");
    expect(err.field).toBeNull();
  });
});

describe("rule calls", () => {
  it("round-trips create, list, and delete against the fake", async () => {
    const fake = new FakeService();
    const api = new ApiClient("", fake.fetch);
    await api.login(FAKE_ANNOTATOR, FAKE_PASSWORD);
    const created = await api.createRule({
      dhatu: "gam",
      headword: "yāna",
      sense_id: 1,
      roles: ["karta"],
      comment: "vehicles go",
    });
    expect(created.id).toBe("r0005");
    expect(created.annotator).toBe(FAKE_ANNOTATOR);
    const listed = await api.rulesFor("gam", "yāna");
    expect(listed.map((rule) => rule.id)).toEqual(["r0005"]);
    await api.deleteRule(created.id);
    expect(await api.rulesFor("gam", "yāna")).toEqual([]);
  });
});
