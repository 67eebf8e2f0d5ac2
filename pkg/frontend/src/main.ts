import { ApiClient } from "./api";
import { AnnotationStore } from "./store";
import { mount } from "./view";
import "./style.css";

const base = import.meta.env.VITE_API_BASE ?? "";
const root = document.getElementById("app");
if (root !== null) {
  mount(new AnnotationStore(new ApiClient(base)), root);
}
