"""Synthetic survey data builders for tests."""

from __future__ import annotations

import random

from phrasecat.evalstats import ItemRating, SurveyResponse
from phrasecat.evalstats.survey import CSV_COLUMNS, QUESTIONS


def make_item(
    rng: random.Random,
    description_id: str,
    origin: str,
    rating_pool=(3, 4, 4, 5, 5),
    guessed: "str | None" = None,
) -> ItemRating:
    return ItemRating(
        description_id=description_id,
        actual_origin=origin,
        guessed_origin=guessed if guessed is not None else rng.choice(("old", "new")),
        ratings={q: rng.choice(rating_pool) for q in QUESTIONS},
    )


def make_responses(
    seed: int,
    per_language_origin: "dict[str, int]",
    items_per_participant: int = 20,
    rating_pools: "dict[tuple[str, str], tuple]" = None,
) -> "list[SurveyResponse]":
    """Synthetic responses with the given number of items per (language, origin)."""
    rng = random.Random(seed)
    responses = []
    for language in sorted(per_language_origin):
        n_per_origin = per_language_origin[language]
        items = []
        for origin in ("old", "new"):
            pool = (rating_pools or {}).get((language, origin), (3, 4, 4, 5, 5))
            for i in range(n_per_origin):
                items.append(
                    make_item(rng, f"{language}-{origin}-{i}", origin, rating_pool=pool)
                )
        rng.shuffle(items)
        for p, start in enumerate(range(0, len(items), items_per_participant)):
            chunk = items[start:start + items_per_participant]
            responses.append(
                SurveyResponse(
                    participant_id=f"{language}-p{p}",
                    language=language,
                    dataset_id=(p % 6) + 1,
                    age=rng.randint(18, 75),
                    gender=rng.choice(("m", "f")),
                    native_speaker=rng.random() < 0.93,
                    experience=rng.choice(("low", "medium", "high")),
                    items=tuple(chunk),
                )
            )
    return responses


def responses_to_csv(responses: "list[SurveyResponse]") -> str:
    lines = [",".join(CSV_COLUMNS)]
    for resp in responses:
        for item in resp.items:
            lines.append(
                ",".join(
                    [
                        resp.participant_id,
                        resp.language,
                        str(resp.dataset_id),
                        str(resp.age),
                        resp.gender,
                        "true" if resp.native_speaker else "false",
                        resp.experience,
                        item.description_id,
                        item.actual_origin,
                        item.guessed_origin,
                    ]
                    + [str(item.ratings[q]) for q in QUESTIONS]
                )
            )
    return "\n".join(lines) + "\n"
