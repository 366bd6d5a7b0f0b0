import { describe, expect, it } from "vitest";

import {
  isComplete,
  optionLabel,
  pruneSelection,
  requiredSlots,
} from "../src/selection.js";
import { PhraseDetail, SelectionDoc } from "../src/types.js";
import { PHRASE_DETAIL } from "./fig2.fixture.js";

const SOURCE = "de";

function blank(): SelectionDoc {
  return { phraseId: "P-AVAL", choices: {}, slotChoices: {} };
}

describe("optionLabel", () => {
  it("shows the source surface with slot placeholders", () => {
    const s3 = PHRASE_DETAIL.phrase.segments[2]!;
    const o3 = s3.options.find((o) => o.id === "o3")!;
    expect(optionLabel(o3, SOURCE)).toBe("an {on_steep} Sonnenhängen");
  });

  it("labels the blank option", () => {
    const s3 = PHRASE_DETAIL.phrase.segments[2]!;
    const o1 = s3.options.find((o) => o.id === "o1")!;
    expect(optionLabel(o1, SOURCE)).toBe("(blank)");
  });

  it("keeps the pronoun antecedent hint on the option document", () => {
    const s1 = PHRASE_DETAIL.phrase.segments[0]!;
    const pronoun = s1.options.find((o) => o.id === "o3")!;
    expect(pronoun.antecedentHint).toBe("die Lawinen");
  });
});

describe("requiredSlots", () => {
  it("is empty while nothing with slots is chosen", () => {
    expect(requiredSlots(PHRASE_DETAIL, blank(), SOURCE)).toEqual([]);
  });

  it("surfaces the nested pull-down for a slotted option", () => {
    const selection = { ...blank(), choices: { s3: "o3" } };
    const slots = requiredSlots(PHRASE_DETAIL, selection, SOURCE);
    expect(slots).toHaveLength(1);
    expect(slots[0]).toMatchObject({
      path: "s3/o3/on_steep#0",
      subSegmentId: "on_steep",
      depth: 1,
      segmentId: "s3",
    });
  });

  it("numbers repeated occurrences of the same sub-segment", () => {
    const twice: PhraseDetail = JSON.parse(JSON.stringify(PHRASE_DETAIL));
    const option = twice.phrase.segments[2]!.options.find((o) => o.id === "o3")!;
    (option.contents["de"] as { t: string; v: string }[]).push({
      t: "slot",
      v: "on_steep",
    });
    const selection = { ...blank(), choices: { s3: "o3" } };
    const paths = requiredSlots(twice, selection, SOURCE).map((s) => s.path);
    expect(paths).toEqual(["s3/o3/on_steep#0", "s3/o3/on_steep#1"]);
  });
});

describe("isComplete", () => {
  it("requires every segment and every open slot", () => {
    const selection = {
      phraseId: "P-AVAL",
      choices: { s1: "o3", s2: "o1", s3: "o3", s4: "o3", s5: "o3" },
      slotChoices: {},
    };
    expect(isComplete(PHRASE_DETAIL, selection, SOURCE)).toBe(false);
    selection.slotChoices = { "s3/o3/on_steep#0": "very_steep" };
    expect(isComplete(PHRASE_DETAIL, selection, SOURCE)).toBe(true);
  });

  it("rejects choices naming unknown options", () => {
    const selection = {
      phraseId: "P-AVAL",
      choices: { s1: "zz", s2: "o1", s3: "o1", s4: "o1", s5: "o1" },
      slotChoices: {},
    };
    expect(isComplete(PHRASE_DETAIL, selection, SOURCE)).toBe(false);
  });
});

describe("pruneSelection", () => {
  it("drops slot choices left over from a different option", () => {
    const selection: SelectionDoc = {
      phraseId: "P-AVAL",
      choices: { s3: "o4" },
      slotChoices: { "s3/o3/on_steep#0": "very_steep" },
    };
    const pruned = pruneSelection(PHRASE_DETAIL, selection, SOURCE);
    expect(pruned.slotChoices).toEqual({});
    expect(pruned.choices).toEqual({ s3: "o4" });
  });

  it("keeps compatible choices across a structure reload", () => {
    const selection: SelectionDoc = {
      phraseId: "P-AVAL",
      choices: { s1: "o3", s3: "o3", s9: "gone" },
      slotChoices: { "s3/o3/on_steep#0": "very_steep", "s3/o9/x#0": "y" },
    };
    const pruned = pruneSelection(PHRASE_DETAIL, selection, SOURCE);
    expect(pruned.choices).toEqual({ s1: "o3", s3: "o3" });
    expect(pruned.slotChoices).toEqual({ "s3/o3/on_steep#0": "very_steep" });
  });
});
