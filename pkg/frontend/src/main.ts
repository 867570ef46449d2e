// Browser entry point. Served by `lottiecolor serve --with-ui <dist>`, so the
// session service lives on the same origin.

import { SessionApi } from "./api";
import { Studio } from "./app";
import { el } from "./dom";
import "./style.css";

function bootstrap(): void {
  const mount = document.getElementById("app");
  if (!mount) throw new Error("missing #app mount point");

  const picker = el("input") as HTMLInputElement;
  picker.type = "file";
  picker.accept = ".json,application/json";

  const hint = el("p", "upload-hint");
  hint.textContent = "Open a Lottie JSON file to start editing its colors.";

  const stage = el("div", "studio-stage");
  mount.append(hint, picker, stage);

  picker.onchange = () => {
    const file = picker.files?.[0];
    if (!file) return;
    void file.text().then(async (text) => {
      const studio = new Studio(stage, new SessionApi(""));
      await studio.open(JSON.parse(text));
      hint.textContent = file.name;
    });
  };
}

bootstrap();
