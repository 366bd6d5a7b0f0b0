/** Composer state machine, DOM-free.
 *
 * Hard rules encoded here:
 *  - previews come only from POST /api/render, all languages at once or
 *    not at all; the client never assembles sentence text itself;
 *  - a stale catalogue version never discards work: the structure is
 *    refetched and every still-compatible choice survives;
 *  - the draft (selection in progress plus bulletin entries) persists
 *    across reloads and network failures.
 */

import { ApiClient, BulletinDraftDoc } from "./api.js";
import { DraftPersistence } from "./persist.js";
import { isComplete, pruneSelection, requiredSlots, SlotRequirement } from "./selection.js";
import {
  ApiError,
  CatalogueInfo,
  DraftEntry,
  PhraseDetail,
  PhraseSummary,
  SelectionDoc,
} from "./types.js";

export interface Banner {
  kind: "error" | "stale" | "info";
  message: string;
}

export interface ComposerState {
  catalogue: CatalogueInfo | null;
  searchQuery: string;
  searchResults: PhraseSummary[];
  activePhrase: PhraseDetail | null;
  pendingSelection: SelectionDoc | null;
  /** map language -> sentence; null while the selection is incomplete */
  previews: Record<string, string> | null;
  openSlots: SlotRequirement[];
  bulletinDraft: DraftEntry[];
  draftLabel: string;
  jokerDraft: Record<string, string> | null;
  banner: Banner | null;
  savedBulletinId: string | null;
  /** entry index highlighted after a server-side validation failure */
  invalidDraftEntry: number | null;
}

type Listener = (state: ComposerState) => void;

export class ComposerStore {
  private state: ComposerState = {
    catalogue: null,
    searchQuery: "",
    searchResults: [],
    activePhrase: null,
    pendingSelection: null,
    previews: null,
    openSlots: [],
    bulletinDraft: [],
    draftLabel: "danger description",
    jokerDraft: null,
    banner: null,
    savedBulletinId: null,
    invalidDraftEntry: null,
  };

  private listeners = new Set<Listener>();
  private renderEpoch = 0;

  constructor(
    private readonly api: ApiClient,
    private readonly persistence: DraftPersistence,
  ) {}

  getState(): ComposerState {
    return this.state;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.add(listener);
    return () => this.listeners.delete(listener);
  }

  private update(patch: Partial<ComposerState>): void {
    this.state = { ...this.state, ...patch };
    for (const listener of this.listeners) listener(this.state);
  }

  private persist(): void {
    this.persistence.save({
      activePhraseId: this.state.activePhrase?.phrase.id ?? null,
      pendingSelection: this.state.pendingSelection,
      bulletinDraft: this.state.bulletinDraft,
      draftLabel: this.state.draftLabel,
    });
  }

  // -- startup ------------------------------------------------------------

  async init(): Promise<void> {
    try {
      const catalogue = await this.api.getCatalogue();
      const results = await this.api.listPhrases();
      this.update({ catalogue, searchResults: results, banner: null });
    } catch (err) {
      this.update({ banner: this.networkBanner(err) });
      return;
    }
    const saved = this.persistence.load();
    if (!saved) return;
    this.update({
      bulletinDraft: saved.bulletinDraft,
      draftLabel: saved.draftLabel,
    });
    if (saved.activePhraseId && saved.pendingSelection) {
      await this.pickPhrase(saved.activePhraseId, saved.pendingSelection);
    }
  }

  // -- search & pick ------------------------------------------------------

  async search(query: string): Promise<void> {
    this.update({ searchQuery: query });
    try {
      const results = await this.api.listPhrases(query.trim() || undefined);
      this.update({ searchResults: results, banner: null });
    } catch (err) {
      // results go stale but the draft is untouched
      this.update({ banner: this.networkBanner(err) });
    }
  }

  async pickPhrase(id: string, restore?: SelectionDoc): Promise<void> {
    let detail: PhraseDetail;
    try {
      detail = await this.api.getPhrase(id);
    } catch (err) {
      this.update({ banner: this.networkBanner(err) });
      return;
    }
    const blank: SelectionDoc = { phraseId: id, choices: {}, slotChoices: {} };
    const source = this.state.catalogue?.source ?? "de";
    const selection = restore ? pruneSelection(detail, restore, source) : blank;
    this.update({
      activePhrase: detail,
      pendingSelection: selection,
      previews: null,
      openSlots: requiredSlots(detail, selection, source),
      banner: null,
      savedBulletinId: null,
    });
    this.persist();
    await this.refreshPreviews();
  }

  // -- choosing -----------------------------------------------------------

  async chooseOption(segmentId: string, optionId: string): Promise<void> {
    const { activePhrase, pendingSelection, catalogue } = this.state;
    if (!activePhrase || !pendingSelection || !catalogue) return;
    const next: SelectionDoc = {
      ...pendingSelection,
      choices: { ...pendingSelection.choices, [segmentId]: optionId },
    };
    const pruned = pruneSelection(activePhrase, next, catalogue.source);
    this.update({
      pendingSelection: pruned,
      openSlots: requiredSlots(activePhrase, pruned, catalogue.source),
    });
    this.persist();
    await this.refreshPreviews();
  }

  async chooseSlot(path: string, optionId: string): Promise<void> {
    const { activePhrase, pendingSelection, catalogue } = this.state;
    if (!activePhrase || !pendingSelection || !catalogue) return;
    const next: SelectionDoc = {
      ...pendingSelection,
      slotChoices: { ...pendingSelection.slotChoices, [path]: optionId },
    };
    const pruned = pruneSelection(activePhrase, next, catalogue.source);
    this.update({
      pendingSelection: pruned,
      openSlots: requiredSlots(activePhrase, pruned, catalogue.source),
    });
    this.persist();
    await this.refreshPreviews();
  }

  /** Fetch all-language previews iff the selection is complete (atomic). */
  private async refreshPreviews(): Promise<void> {
    const { activePhrase, pendingSelection, catalogue } = this.state;
    const epoch = ++this.renderEpoch;
    if (!activePhrase || !pendingSelection || !catalogue) {
      this.update({ previews: null });
      return;
    }
    if (!isComplete(activePhrase, pendingSelection, catalogue.source)) {
      this.update({ previews: null });
      return;
    }
    try {
      const rendered = await this.api.render(
        activePhrase.catalogueVersion,
        pendingSelection,
      );
      if (epoch !== this.renderEpoch) return; // superseded by a newer choice
      this.update({ previews: rendered.texts, banner: null });
    } catch (err) {
      if (epoch !== this.renderEpoch) return;
      if (err instanceof ApiError && err.code === "STALE_VERSION") {
        this.update({
          previews: null,
          banner: {
            kind: "stale",
            message:
              "The catalogue changed on the server. Reload it; compatible choices will be kept.",
          },
        });
        return;
      }
      this.update({ previews: null, banner: this.networkBanner(err) });
    }
  }

  /** Re-fetch catalogue + phrase after STALE_VERSION, keeping what fits. */
  async reloadCatalogue(): Promise<void> {
    const previous = this.state.pendingSelection;
    const phraseId = this.state.activePhrase?.phrase.id ?? null;
    try {
      const catalogue = await this.api.getCatalogue();
      this.update({ catalogue, banner: null });
      if (phraseId) {
        await this.pickPhrase(phraseId, previous ?? undefined);
      }
    } catch (err) {
      this.update({ banner: this.networkBanner(err) });
    }
  }

  // -- bulletin draft -----------------------------------------------------

  /** A sentence can join the draft only with its server-rendered texts. */
  addSentenceToDraft(): void {
    const { pendingSelection, previews } = this.state;
    if (!pendingSelection || !previews) return;
    const entry: DraftEntry = {
      kind: "phrase",
      selection: JSON.parse(JSON.stringify(pendingSelection)) as SelectionDoc,
      texts: { ...previews },
    };
    this.update({
      bulletinDraft: [...this.state.bulletinDraft, entry],
      savedBulletinId: null,
      invalidDraftEntry: null,
    });
    this.persist();
  }

  openJokerDialog(): void {
    const languages = this.state.catalogue?.languages ?? [];
    this.update({
      jokerDraft: Object.fromEntries(languages.map((l) => [l, ""])),
    });
  }

  setJokerText(language: string, text: string): void {
    if (!this.state.jokerDraft) return;
    this.update({ jokerDraft: { ...this.state.jokerDraft, [language]: text } });
  }

  /** Languages still blocking the joker (nonempty text in all is required). */
  jokerMissingLanguages(): string[] {
    const { catalogue, jokerDraft } = this.state;
    if (!catalogue || !jokerDraft) return catalogue?.languages ?? [];
    return catalogue.languages.filter((l) => !(jokerDraft[l] ?? "").trim());
  }

  jokerCanSave(): boolean {
    return this.state.jokerDraft !== null && this.jokerMissingLanguages().length === 0;
  }

  addJokerToDraft(): boolean {
    if (!this.jokerCanSave()) return false;
    const entry: DraftEntry = { kind: "joker", texts: { ...this.state.jokerDraft! } };
    this.update({
      bulletinDraft: [...this.state.bulletinDraft, entry],
      jokerDraft: null,
      savedBulletinId: null,
      invalidDraftEntry: null,
    });
    this.persist();
    return true;
  }

  closeJokerDialog(): void {
    this.update({ jokerDraft: null });
  }

  moveDraftEntry(index: number, delta: -1 | 1): void {
    const draft = [...this.state.bulletinDraft];
    const target = index + delta;
    const entry = draft[index];
    const other = draft[target];
    if (!entry || !other) return;
    draft[index] = other;
    draft[target] = entry;
    this.update({ bulletinDraft: draft, invalidDraftEntry: null });
    this.persist();
  }

  removeDraftEntry(index: number): void {
    const draft = this.state.bulletinDraft.filter((_, i) => i !== index);
    this.update({ bulletinDraft: draft, invalidDraftEntry: null });
    this.persist();
  }

  setDraftLabel(label: string): void {
    this.update({ draftLabel: label });
    this.persist();
  }

  canSaveBulletin(): boolean {
    return this.state.bulletinDraft.some((e) => e.kind === "phrase");
  }

  async saveBulletin(edition: "morning" | "evening" = "evening"): Promise<void> {
    const { catalogue, bulletinDraft, draftLabel } = this.state;
    if (!catalogue || !this.canSaveBulletin()) return;
    const doc: BulletinDraftDoc = {
      id: `b-${Date.now()}`,
      issuedAt: new Date().toISOString(),
      edition,
      catalogueVersion: catalogue.version,
      descriptions: [
        {
          id: "d1",
          label: draftLabel,
          entries: bulletinDraft.map((entry) =>
            entry.kind === "phrase"
              ? { t: "phrase" as const, selection: entry.selection }
              : { t: "joker" as const, texts: entry.texts },
          ),
        },
      ],
    };
    try {
      const stored = await this.api.storeBulletin(doc);
      this.update({
        savedBulletinId: stored.id,
        banner: { kind: "info", message: `Bulletin stored as ${stored.id}` },
        invalidDraftEntry: null,
      });
    } catch (err) {
      if (err instanceof ApiError && err.code === "STALE_VERSION") {
        this.update({
          banner: {
            kind: "stale",
            message:
              "The catalogue changed on the server. Reload it; compatible choices will be kept.",
          },
        });
        return;
      }
      if (err instanceof ApiError && err.code === "VALIDATION") {
        const index = firstEntryIndex(err.body.problems ?? []);
        this.update({
          invalidDraftEntry: index,
          banner: {
            kind: "error",
            message: err.body.problems?.[0] ?? err.body.detail,
          },
        });
        return;
      }
      this.update({ banner: this.networkBanner(err) });
    }
  }

  /** Restore a stored bulletin into the draft pane. */
  async loadBulletin(id: string): Promise<void> {
    try {
      const doc = await this.api.loadBulletin(id);
      const entries: DraftEntry[] = [];
      for (const description of doc.descriptions) {
        for (const entry of description.entries) {
          if (entry.t === "joker") {
            entries.push({ kind: "joker", texts: entry.texts });
          } else {
            const rendered = await this.api.render(doc.catalogueVersion, entry.selection);
            entries.push({
              kind: "phrase",
              selection: entry.selection,
              texts: rendered.texts,
            });
          }
        }
      }
      this.update({
        bulletinDraft: entries,
        draftLabel: doc.descriptions[0]?.label ?? this.state.draftLabel,
        savedBulletinId: doc.id,
        banner: null,
      });
      this.persist();
    } catch (err) {
      this.update({ banner: this.networkBanner(err) });
    }
  }

  private networkBanner(err: unknown): Banner {
    const message =
      err instanceof ApiError
        ? `${err.code}: ${err.body.detail}`
        : "Network problem; your draft is kept locally. Retry when back online.";
    return { kind: "error", message };
  }
}

function firstEntryIndex(problems: string[]): number | null {
  for (const problem of problems) {
    const match = /entry (\d+)/.exec(problem);
    if (match && match[1] !== undefined) return Number(match[1]);
  }
  return null;
}
