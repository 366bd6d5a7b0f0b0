"""Catalogue-wide rule checks.

Every check mirrors an authoring or translation rule the catalogue must
obey for its output to be publishable without proofreading: complete
translations, layouts that are true permutations-with-splits, an
untouched source-language order, matching slot structure across
languages, bounded nesting, and consistent agreement metadata.

The strict parser treats error findings as rejection causes; a
permissive load plus :func:`lint` reports them instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import (
    MAX_SEGMENTS,
    MAX_SLOT_DEPTH,
    PART_WHOLE,
    Catalogue,
    Layout,
    Lit,
    Option,
    Phrase,
    Slot,
)

SEVERITY_ERROR = "error"
SEVERITY_WARNING = "warning"

MISSING_TRANSLATION = "MISSING_TRANSLATION"
BAD_LAYOUT_PERMUTATION = "BAD_LAYOUT_PERMUTATION"
BAD_SOURCE_LAYOUT = "BAD_SOURCE_LAYOUT"
SPLIT_MISMATCH = "SPLIT_MISMATCH"
SLOT_MISMATCH = "SLOT_MISMATCH"
DANGLING_SLOT = "DANGLING_SLOT"
DEPTH_EXCEEDED = "DEPTH_EXCEEDED"
SEGMENT_LIMIT = "SEGMENT_LIMIT"
AGREEMENT_VIOLATION = "AGREEMENT_VIOLATION"
UNUSED_SUBSEGMENT = "UNUSED_SUBSEGMENT"
CYCLE = "CYCLE"
UNANNOTATED = "UNANNOTATED"

_SEVERITY_RANK = {SEVERITY_ERROR: 0, SEVERITY_WARNING: 1}


@dataclass(frozen=True)
class Finding:
    code: str
    severity: str
    path: str
    message: str


def lint(catalogue: Catalogue, strict: bool = False) -> "list[Finding]":
    """Check every catalogue rule; empty result means the catalogue is clean.

    ``strict`` additionally warns about options in uniform-agreement
    segments that carry no agreement metadata at all (UNANNOTATED).
    """
    findings: list[Finding] = []

    def err(code: str, path: str, message: str) -> None:
        findings.append(Finding(code, SEVERITY_ERROR, path, message))

    def warn(code: str, path: str, message: str) -> None:
        findings.append(Finding(code, SEVERITY_WARNING, path, message))

    cyclic = _find_cycles(catalogue)
    for sub_id in sorted(cyclic):
        err(CYCLE, f"sub:{sub_id}", "sub-segment participates in a reference cycle")

    heights = _sub_heights(catalogue, cyclic)

    for phrase in catalogue.phrases:
        n = len(phrase.segments)
        if not 1 <= n <= MAX_SEGMENTS:
            err(
                SEGMENT_LIMIT,
                phrase.id,
                f"phrase has {n} segments; allowed range is 1..{MAX_SEGMENTS}",
            )
        _check_layouts(catalogue, phrase, err)
        split_by_lang = {
            lang: layout.split_indices() for lang, layout in phrase.layouts.items()
        }
        for index, seg in enumerate(phrase.segments):
            _check_agreement(catalogue, phrase, seg, err, warn, strict)
            for opt in seg.options:
                path = f"{phrase.id}/{seg.id}/{opt.id}"
                _check_option(
                    catalogue,
                    path,
                    opt,
                    expected_parts={
                        lang: (2 if index in split_by_lang.get(lang, set()) else 1)
                        for lang in catalogue.languages
                    },
                    heights=heights,
                    cyclic=cyclic,
                    depth=1,
                    err=err,
                )

    for sub_id in sorted(catalogue.sub_segments):
        sub = catalogue.sub_segments[sub_id]
        for opt in sub.options:
            path = f"sub:{sub_id}/{opt.id}"
            # Sub-segment options are never split; splitting is a property
            # of top-level segments only.
            _check_option(
                catalogue,
                path,
                opt,
                expected_parts={lang: 1 for lang in catalogue.languages},
                heights=heights,
                cyclic=cyclic,
                depth=None,
                err=err,
            )

    used = _reachable_subs(catalogue)
    for sub_id in sorted(set(catalogue.sub_segments) - used):
        warn(UNUSED_SUBSEGMENT, f"sub:{sub_id}", "sub-segment is not referenced by any phrase")

    findings.sort(key=lambda f: (_SEVERITY_RANK[f.severity], f.path, f.code))
    return findings


def error_findings(catalogue: Catalogue) -> "list[Finding]":
    return [f for f in lint(catalogue) if f.severity == SEVERITY_ERROR]


def _check_layouts(catalogue: Catalogue, phrase: Phrase, err) -> None:
    n = len(phrase.segments)
    for lang in catalogue.languages:
        layout = phrase.layouts.get(lang)
        path = f"{phrase.id}/layout:{lang}"
        if layout is None:
            err(BAD_LAYOUT_PERMUTATION, phrase.id, f"no layout defined for language {lang!r}")
            continue
        for problem in layout.coverage_problems(n):
            err(BAD_LAYOUT_PERMUTATION, path, problem)
    for lang in sorted(set(phrase.layouts) - set(catalogue.languages)):
        err(
            BAD_LAYOUT_PERMUTATION,
            phrase.id,
            f"layout for {lang!r}, which is not a catalogue language",
        )
    source_layout = phrase.layouts.get(catalogue.source_language)
    if source_layout is not None and not source_layout.is_identity(n):
        err(
            BAD_SOURCE_LAYOUT,
            f"{phrase.id}/layout:{catalogue.source_language}",
            "source-language layout must keep the original segment order with no splits",
        )


def _check_option(
    catalogue: Catalogue,
    path: str,
    option: Option,
    expected_parts: "dict[str, int]",
    heights: "dict[str, int]",
    cyclic: "set[str]",
    depth,
    err,
) -> None:
    source = catalogue.source_language
    for lang in catalogue.languages:
        if lang not in option.contents:
            err(MISSING_TRANSLATION, path, f"option has no content for language {lang!r}")

    for lang in catalogue.languages:
        content = option.contents.get(lang)
        if content is None:
            continue
        want = expected_parts[lang]
        if len(content.parts) != want:
            err(
                SPLIT_MISMATCH,
                path,
                f"content for {lang!r} has {len(content.parts)} part(s); "
                f"the layout requires {want}",
            )

    reference = option.contents.get(source)
    if reference is not None:
        ref_multiset = reference.slot_multiset()
        for lang in catalogue.languages:
            content = option.contents.get(lang)
            if content is None or lang == source:
                continue
            if content.slot_multiset() != ref_multiset:
                err(
                    SLOT_MISMATCH,
                    path,
                    f"slot references for {lang!r} differ from the source language",
                )

    for lang in catalogue.languages:
        content = option.contents.get(lang)
        if content is None:
            continue
        part_names = ("whole",) if not content.is_split else ("a", "b")
        for part_name in part_names:
            for idx, tok in enumerate(content.part(part_name)):
                if not isinstance(tok, Slot):
                    continue
                tok_path = f"{path}/{lang}.{part_name}[{idx}]"
                sub_id = tok.sub_segment_id
                if sub_id not in catalogue.sub_segments:
                    err(DANGLING_SLOT, tok_path, f"slot references unknown sub-segment {sub_id!r}")
                    continue
                # Depth counts levels below the top-level segment; a slot at
                # depth d pulls in a subtree of height heights[sub_id].
                if depth is not None and sub_id not in cyclic:
                    if depth - 1 + heights[sub_id] > MAX_SLOT_DEPTH:
                        err(
                            DEPTH_EXCEEDED,
                            tok_path,
                            f"slot nesting exceeds {MAX_SLOT_DEPTH} levels "
                            f"(sub-segment {sub_id!r} nests {heights[sub_id]} deep)",
                        )


def _check_agreement(catalogue, phrase, seg, err, warn, strict: bool) -> None:
    if not seg.uniform_agreement:
        return
    seg_path = f"{phrase.id}/{seg.id}"
    for lang in catalogue.languages:
        declared = {
            opt.agreement[lang] for opt in seg.options if lang in opt.agreement
        }
        if len(declared) > 1:
            values = sorted(f"({a.gender},{a.number})" for a in declared)
            err(
                AGREEMENT_VIOLATION,
                seg_path,
                f"options declare conflicting gender/number for {lang!r}: {', '.join(values)}",
            )
    if strict:
        for opt in seg.options:
            if not opt.agreement:
                warn(
                    UNANNOTATED,
                    f"{seg_path}/{opt.id}",
                    "option in a uniform-agreement segment carries no agreement metadata",
                )


def _sub_references(option: Option) -> "set[str]":
    refs: set[str] = set()
    for content in option.contents.values():
        for tok in content.all_tokens():
            if isinstance(tok, Slot):
                refs.add(tok.sub_segment_id)
    return refs


def _find_cycles(catalogue: Catalogue) -> "set[str]":
    graph = {
        sub_id: {
            ref
            for opt in sub.options
            for ref in _sub_references(opt)
            if ref in catalogue.sub_segments
        }
        for sub_id, sub in catalogue.sub_segments.items()
    }
    WHITE, GREY, BLACK = 0, 1, 2
    color = {node: WHITE for node in graph}
    cyclic: set[str] = set()

    def visit(node: str, stack: "list[str]") -> None:
        color[node] = GREY
        stack.append(node)
        for nxt in sorted(graph[node]):
            if color[nxt] == GREY:
                cyclic.update(stack[stack.index(nxt):])
            elif color[nxt] == WHITE:
                visit(nxt, stack)
        stack.pop()
        color[node] = BLACK

    for node in sorted(graph):
        if color[node] == WHITE:
            visit(node, [])
    return cyclic


def _sub_heights(catalogue: Catalogue, cyclic: "set[str]") -> "dict[str, int]":
    """Height of each sub-segment subtree: 1 when its options hold no slots."""
    heights: dict[str, int] = {}

    def height(sub_id: str) -> int:
        if sub_id in heights:
            return heights[sub_id]
        if sub_id in cyclic:
            heights[sub_id] = MAX_SLOT_DEPTH + 1
            return heights[sub_id]
        sub = catalogue.sub_segments[sub_id]
        nested = [
            ref
            for opt in sub.options
            for ref in _sub_references(opt)
            if ref in catalogue.sub_segments
        ]
        heights[sub_id] = 1 + max((height(r) for r in nested), default=0)
        return heights[sub_id]

    for sub_id in catalogue.sub_segments:
        height(sub_id)
    return heights


def _reachable_subs(catalogue: Catalogue) -> "set[str]":
    seen: set[str] = set()
    frontier: list[str] = []
    for phrase in catalogue.phrases:
        for seg in phrase.segments:
            for opt in seg.options:
                frontier.extend(_sub_references(opt))
    while frontier:
        sub_id = frontier.pop()
        if sub_id in seen or sub_id not in catalogue.sub_segments:
            continue
        seen.add(sub_id)
        for opt in catalogue.sub_segments[sub_id].options:
            frontier.extend(_sub_references(opt))
    return seen
