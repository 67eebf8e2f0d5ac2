/** The six karaka roles: wire slug plus IAST display label, in canonical order. */

export interface Role {
  readonly slug: string;
  readonly label: string;
}

export const ROLES: readonly Role[] = [
  { slug: "karta", label: "kartā" },
  { slug: "karma", label: "karma" },
  { slug: "karana", label: "karaṇa" },
  { slug: "sampradana", label: "sampradāna" },
  { slug: "apadana", label: "apādāna" },
  { slug: "adhikarana", label: "adhikaraṇa" },
];

const BY_SLUG = new Map(ROLES.map((role) => [role.slug, role.label]));

export function roleLabel(slug: string): string {
  return BY_SLUG.get(slug) ?? slug;
}
