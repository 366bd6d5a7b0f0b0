/** Draft persistence: survive reloads and transient network failures.
 *
 * Backed by localStorage in the browser; tests inject a Map-based stand-in.
 */

import { DraftEntry, SelectionDoc } from "./types.js";

export interface KeyValueStore {
  getItem(key: string): string | null;
  setItem(key: string, value: string): void;
  removeItem(key: string): void;
}

export interface PersistedDraft {
  activePhraseId: string | null;
  pendingSelection: SelectionDoc | null;
  bulletinDraft: DraftEntry[];
  draftLabel: string;
}

const KEY = "phrasecat.composer.draft.v1";

export class DraftPersistence {
  constructor(private readonly store: KeyValueStore) {}

  save(draft: PersistedDraft): void {
    try {
      this.store.setItem(KEY, JSON.stringify(draft));
    } catch {
      // quota or privacy mode: in-memory state still holds the draft
    }
  }

  load(): PersistedDraft | null {
    try {
      const raw = this.store.getItem(KEY);
      return raw ? (JSON.parse(raw) as PersistedDraft) : null;
    } catch {
      return null;
    }
  }

  clear(): void {
    this.store.removeItem(KEY);
  }
}

export class MemoryStore implements KeyValueStore {
  private map = new Map<string, string>();

  getItem(key: string): string | null {
    return this.map.get(key) ?? null;
  }

  setItem(key: string, value: string): void {
    this.map.set(key, value);
  }

  removeItem(key: string): void {
    this.map.delete(key);
  }
}
