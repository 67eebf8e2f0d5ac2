import { defineConfig } from "vite";

// Paths the dev server forwards to a running yogyata service; the client
// itself fetches same-origin so the app needs no CORS support server-side.
const SERVICE_PATHS = [
  "/login",
  "/prefixes",
  "/dhatus",
  "/words",
  "/rules",
  "/lexemes",
  "/karakas",
  "/analyze",
  "/transliterate",
];

export default defineConfig(() => {
  const target = process.env.YOGYATA_SERVICE ?? "http://127.0.0.1:8000";
  const proxy: Record<string, string> = {};
  for (const path of SERVICE_PATHS) proxy[path] = target;
  return { server: { proxy } };
});
