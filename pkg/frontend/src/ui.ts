/** DOM rendering: one render pass per state change, no framework.
 *
 * Every sentence string shown anywhere on this page came out of the
 * render endpoint; this layer only arranges them.
 */

import { optionLabel } from "./selection.js";
import { ComposerState, ComposerStore } from "./store.js";
import { OptionDoc, SubSegmentDoc } from "./types.js";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  ...children: (Node | string)[]
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    if (key === "class") node.className = value;
    else node.setAttribute(key, value);
  }
  node.append(...children);
  return node;
}

export function mountComposer(root: HTMLElement, store: ComposerStore): void {
  store.subscribe((state) => render(root, store, state));
  render(root, store, store.getState());
}

function render(root: HTMLElement, store: ComposerStore, state: ComposerState): void {
  root.replaceChildren(
    renderBanner(store, state),
    el(
      "main",
      { class: "columns" },
      renderSearchPane(store, state),
      renderComposerPane(store, state),
      renderDraftPane(store, state),
    ),
  );
}

function renderBanner(store: ComposerStore, state: ComposerState): HTMLElement {
  if (!state.banner) return el("div", { class: "banner empty" });
  const banner = el(
    "div",
    { class: `banner ${state.banner.kind}` },
    el("span", {}, state.banner.message),
  );
  if (state.banner.kind === "stale") {
    const button = el("button", {}, "Reload catalogue");
    button.addEventListener("click", () => void store.reloadCatalogue());
    banner.append(button);
  }
  return banner;
}

function renderSearchPane(store: ComposerStore, state: ComposerState): HTMLElement {
  const input = el("input", {
    type: "search",
    placeholder: "Search phrases…",
    value: state.searchQuery,
    "aria-label": "phrase search",
  });
  input.addEventListener("input", () => void store.search(input.value));

  const list = el("ul", { class: "phrase-list" });
  if (state.searchResults.length === 0) {
    list.append(el("li", { class: "empty-state" }, "no phrases found"));
  }
  for (const summary of state.searchResults) {
    const item = el(
      "li",
      { class: "phrase-item", "data-phrase": summary.id },
      el("strong", {}, summary.id),
      ` ${summary.label} (${summary.segments} segments)`,
    );
    item.addEventListener("click", () => void store.pickPhrase(summary.id));
    list.append(item);
  }
  return el("section", { class: "pane search-pane" }, input, list);
}

function renderComposerPane(store: ComposerStore, state: ComposerState): HTMLElement {
  const pane = el("section", { class: "pane composer-pane" });
  const detail = state.activePhrase;
  if (!detail || !state.pendingSelection || !state.catalogue) {
    pane.append(el("p", { class: "empty-state" }, "Pick a phrase to start composing."));
    return pane;
  }
  const source = state.catalogue.source;
  pane.append(el("h2", {}, `${detail.phrase.id} — ${detail.phrase.label}`));

  for (const segment of detail.phrase.segments) {
    const chosen = state.pendingSelection.choices[segment.id];
    const select = el("select", { "data-segment": segment.id });
    select.append(el("option", { value: "" }, `– ${segment.label} –`));
    for (const option of segment.options) {
      const node = el("option", { value: option.id }, menuText(option, source));
      if (option.id === chosen) node.selected = true;
      select.append(node);
    }
    select.addEventListener("change", () => {
      if (select.value) void store.chooseOption(segment.id, select.value);
    });
    const row = el("div", { class: "segment-row" }, select);
    const chosenOption = segment.options.find((o) => o.id === chosen);
    if (chosenOption?.antecedentHint) {
      row.append(el("span", { class: "antecedent-hint" }, `(${chosenOption.antecedentHint})`));
    }
    pane.append(row);

    for (const slot of state.openSlots.filter((s) => s.segmentId === segment.id)) {
      const sub = detail.subSegments[slot.subSegmentId];
      if (!sub) continue;
      pane.append(renderSlotRow(store, state, slot.path, slot.depth, sub, source));
    }
  }

  pane.append(renderPreviews(store, state));
  return pane;
}

function renderSlotRow(
  store: ComposerStore,
  state: ComposerState,
  path: string,
  depth: number,
  sub: SubSegmentDoc,
  source: string,
): HTMLElement {
  const chosen = state.pendingSelection?.slotChoices[path];
  const select = el("select", { "data-slot": path });
  select.append(el("option", { value: "" }, `– ${sub.label} –`));
  for (const option of sub.options) {
    const node = el("option", { value: option.id }, menuText(option, source));
    if (option.id === chosen) node.selected = true;
    select.append(node);
  }
  select.addEventListener("change", () => {
    if (select.value) void store.chooseSlot(path, select.value);
  });
  return el("div", { class: `segment-row slot-row depth-${depth}` }, select);
}

function menuText(option: OptionDoc, source: string): string {
  const label = optionLabel(option, source);
  return option.antecedentHint ? `${label} (${option.antecedentHint})` : label;
}

function renderPreviews(store: ComposerStore, state: ComposerState): HTMLElement {
  const pane = el("div", { class: "preview-pane" }, el("h3", {}, "Preview"));
  if (!state.previews) {
    const segments = state.activePhrase?.phrase.segments ?? [];
    const chosen = segments.filter((s) => state.pendingSelection?.choices[s.id]).length;
    const openSlots = state.openSlots.filter(
      (s) => !state.pendingSelection?.slotChoices[s.path],
    ).length;
    pane.append(
      el(
        "p",
        { class: "incomplete-marker" },
        `incomplete — ${chosen}/${segments.length} segments chosen` +
          (openSlots ? `, ${openSlots} slot(s) open` : ""),
      ),
    );
    return pane;
  }
  const list = el("dl", { class: "previews" });
  for (const language of state.catalogue?.languages ?? []) {
    list.append(
      el("dt", {}, language),
      el("dd", { "data-preview": language }, state.previews[language] ?? ""),
    );
  }
  pane.append(list);
  const add = el("button", { class: "add-sentence" }, "Add sentence to bulletin");
  add.addEventListener("click", () => store.addSentenceToDraft());
  pane.append(add);
  return pane;
}

function renderDraftPane(store: ComposerStore, state: ComposerState): HTMLElement {
  const pane = el("section", { class: "pane draft-pane" }, el("h2", {}, "Bulletin draft"));

  const label = el("input", {
    type: "text",
    value: state.draftLabel,
    "aria-label": "description label",
  });
  label.addEventListener("change", () => store.setDraftLabel(label.value));
  pane.append(label);

  const list = el("ol", { class: "draft-list" });
  state.bulletinDraft.forEach((entry, index) => {
    const classes = ["draft-entry"];
    if (state.invalidDraftEntry === index) classes.push("invalid");
    const item = el("li", { class: classes.join(" ") });
    if (entry.kind === "phrase") {
      for (const [language, text] of Object.entries(entry.texts)) {
        item.append(el("div", { class: "draft-text", "data-lang": language }, `${language}: ${text}`));
      }
    } else {
      item.append(el("div", { class: "draft-joker" }, "joker: ", entry.texts["de"] ?? ""));
    }
    const up = el("button", { title: "move up" }, "↑");
    up.addEventListener("click", () => store.moveDraftEntry(index, -1));
    const down = el("button", { title: "move down" }, "↓");
    down.addEventListener("click", () => store.moveDraftEntry(index, 1));
    const remove = el("button", { title: "remove" }, "✕");
    remove.addEventListener("click", () => store.removeDraftEntry(index));
    item.append(el("div", { class: "draft-actions" }, up, down, remove));
    list.append(item);
  });
  pane.append(list);

  const jokerButton = el("button", {}, "Add joker phrase…");
  jokerButton.addEventListener("click", () => store.openJokerDialog());
  pane.append(jokerButton);
  if (state.jokerDraft) pane.append(renderJokerDialog(store, state));

  const save = el("button", { class: "save-bulletin" }, "Save bulletin");
  if (!store.canSaveBulletin()) save.setAttribute("disabled", "disabled");
  save.addEventListener("click", () => void store.saveBulletin());
  pane.append(save);

  if (state.savedBulletinId) {
    pane.append(el("p", { class: "saved-id" }, `stored: ${state.savedBulletinId}`));
  }
  return pane;
}

function renderJokerDialog(store: ComposerStore, state: ComposerState): HTMLElement {
  const dialog = el("div", { class: "joker-dialog" }, el("h3", {}, "Joker phrase"));
  for (const language of state.catalogue?.languages ?? []) {
    const input = el("input", {
      type: "text",
      value: state.jokerDraft?.[language] ?? "",
      "data-joker-lang": language,
      placeholder: language,
    });
    input.addEventListener("input", () => store.setJokerText(language, input.value));
    dialog.append(el("label", {}, `${language}: `, input));
  }
  const missing = store.jokerMissingLanguages();
  const checklist = el(
    "p",
    { class: "joker-checklist" },
    missing.length
      ? `missing: ${missing.join(", ")}`
      : "all languages provided",
  );
  dialog.append(checklist);
  const add = el("button", { class: "joker-add" }, "Add joker");
  if (!store.jokerCanSave()) add.setAttribute("disabled", "disabled");
  add.addEventListener("click", () => store.addJokerToDraft());
  const cancel = el("button", {}, "Cancel");
  cancel.addEventListener("click", () => store.closeJokerDialog());
  dialog.append(add, cancel);
  return dialog;
}
