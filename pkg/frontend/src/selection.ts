/** Selection bookkeeping over the wire phrase structure.
 *
 * Slot choice points are addressed by the same paths the service
 * validates: `segId/optId/subId#k`, extended by `/chosenOptId/subId#j`
 * per nesting level, where k numbers occurrences of one sub-segment
 * inside one option's source-language content. The source language is
 * never split, so walking plain token arrays suffices here.
 */

import {
  ContentDoc,
  OptionDoc,
  PhraseDetail,
  SelectionDoc,
  TokenDoc,
} from "./types.js";

export function tokensOf(content: ContentDoc | undefined): TokenDoc[] {
  if (!content) return [];
  if (Array.isArray(content)) return content;
  return [...content.a, ...content.b];
}

/** Menu text for an option: its source-language surface with slots as {name}. */
export function optionLabel(option: OptionDoc, sourceLanguage: string): string {
  const tokens = tokensOf(option.contents[sourceLanguage]);
  const parts = tokens.map((t) => (t.t === "lit" ? t.v : `{${t.v}}`)).filter((s) => s);
  return parts.length ? parts.join(" ") : "(blank)";
}

/** One open pull-down implied by the current choices. */
export interface SlotRequirement {
  path: string;
  subSegmentId: string;
  /** 1 = sub-segment, 2 = sub-sub-segment */
  depth: number;
  /** path of the segment-level choice this slot hangs under */
  segmentId: string;
}

function walkOption(
  detail: PhraseDetail,
  sourceLanguage: string,
  option: OptionDoc,
  prefix: string,
  segmentId: string,
  depth: number,
  selection: SelectionDoc,
  out: SlotRequirement[],
): void {
  const counters = new Map<string, number>();
  for (const token of tokensOf(option.contents[sourceLanguage])) {
    if (token.t !== "slot") continue;
    const occurrence = counters.get(token.v) ?? 0;
    counters.set(token.v, occurrence + 1);
    const path = `${prefix}/${token.v}#${occurrence}`;
    out.push({ path, subSegmentId: token.v, depth, segmentId });
    const chosen = selection.slotChoices[path];
    if (!chosen) continue;
    const sub = detail.subSegments[token.v];
    const subOption = sub?.options.find((o) => o.id === chosen);
    if (!subOption) continue;
    walkOption(
      detail,
      sourceLanguage,
      subOption,
      `${path}/${subOption.id}`,
      segmentId,
      depth + 1,
      selection,
      out,
    );
  }
}

/** Every slot pull-down open under the current choices, in reading order. */
export function requiredSlots(
  detail: PhraseDetail,
  selection: SelectionDoc,
  sourceLanguage: string,
): SlotRequirement[] {
  const out: SlotRequirement[] = [];
  for (const segment of detail.phrase.segments) {
    const chosen = selection.choices[segment.id];
    if (!chosen) continue;
    const option = segment.options.find((o) => o.id === chosen);
    if (!option) continue;
    walkOption(
      detail,
      sourceLanguage,
      option,
      `${segment.id}/${option.id}`,
      segment.id,
      1,
      selection,
      out,
    );
  }
  return out;
}

export function isComplete(
  detail: PhraseDetail,
  selection: SelectionDoc,
  sourceLanguage: string,
): boolean {
  for (const segment of detail.phrase.segments) {
    const chosen = selection.choices[segment.id];
    if (!chosen || !segment.options.some((o) => o.id === chosen)) return false;
  }
  for (const slot of requiredSlots(detail, selection, sourceLanguage)) {
    const chosen = selection.slotChoices[slot.path];
    if (!chosen) return false;
    const sub = detail.subSegments[slot.subSegmentId];
    if (!sub || !sub.options.some((o) => o.id === chosen)) return false;
  }
  return true;
}

/** Drop choices that no longer resolve against the (possibly reloaded)
 * phrase structure; compatible choices survive a catalogue reload. */
export function pruneSelection(
  detail: PhraseDetail,
  selection: SelectionDoc,
  sourceLanguage: string,
): SelectionDoc {
  const pruned: SelectionDoc = {
    phraseId: detail.phrase.id,
    choices: {},
    slotChoices: {},
  };
  for (const segment of detail.phrase.segments) {
    const chosen = selection.choices[segment.id];
    if (chosen && segment.options.some((o) => o.id === chosen)) {
      pruned.choices[segment.id] = chosen;
    }
  }
  // Requirements depend on chosen sub-options, so resolve iteratively:
  // keep a slot choice only if its path is live and names a real option.
  for (;;) {
    let changed = false;
    const live = new Set(
      requiredSlots(detail, pruned, sourceLanguage).map((s) => s.path),
    );
    for (const [path, chosen] of Object.entries(selection.slotChoices)) {
      if (pruned.slotChoices[path] || !live.has(path)) continue;
      const subId = path.split("/").at(-1)?.split("#")[0] ?? "";
      const sub = detail.subSegments[subId];
      if (sub && sub.options.some((o) => o.id === chosen)) {
        pruned.slotChoices[path] = chosen;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return pruned;
}
