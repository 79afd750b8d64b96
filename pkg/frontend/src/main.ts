/**
 * Entry point: mounts the practice screen onto #app.
 *
 * The service origin comes from <body data-api-base="...">; leave the
 * attribute empty when the page is served from the same origin as the
 * service.
 */

import { ApiClient } from "./api.js";
import { mountPracticeScreen } from "./screen.js";

const root = document.querySelector<HTMLElement>("#app");
if (root) {
  const baseUrl = document.body.dataset.apiBase ?? "";
  const screen = mountPracticeScreen(root, new ApiClient(baseUrl));
  void screen.init();
}
