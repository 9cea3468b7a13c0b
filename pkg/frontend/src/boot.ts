import { startApp } from "./main.js";

if (document.readyState !== "loading") {
  startApp();
} else {
  document.addEventListener("DOMContentLoaded", () => startApp());
}
