#!/usr/bin/env python3
# Copyright 2026 The drelkit Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates the synthetic TED-MDB-style annotation fixtures under tests/data.

The fixtures carry no real talk text. Each language file reproduces the
per-language implicit sense distribution of the TED-MDB release and adds
explicit, EntRel, AltLex and Hypophora relations around it so that filtering
is exercised. Output is deterministic.
"""

import json
import pathlib
import random

# Comparison, Contingency, Expansion, Temporal implicit counts per language.
TED_MDB = {
    "en": (20, 52, 107, 15),
    "de": (13, 41, 148, 12),
    "lt": (26, 53, 154, 13),
    "pl": (19, 28, 130, 18),
    "pt": (23, 47, 169, 15),
    "ru": (16, 31, 169, 5),
    "tr": (20, 29, 140, 13),
}

SECOND_LEVEL = {
    "Comparison": ["Comparison.Contrast", "Comparison.Concession.Arg2-as-denier"],
    "Contingency": ["Contingency.Cause.Reason", "Contingency.Cause.Result", "Contingency.Purpose"],
    "Expansion": ["Expansion.Conjunction", "Expansion.Level-of-detail.Arg2-as-detail",
                  "Expansion.Instantiation"],
    "Temporal": ["Temporal.Asynchronous.Precedence", "Temporal.Synchronous"],
}
SENSES = ["Comparison", "Contingency", "Expansion", "Temporal"]

# rel_type | connective | sense1 | sense2 | arg1 span | arg1 text | arg2 span | arg2 text
COLUMN_MAP = {"field_count_min": 8, "rel_type_idx": 0, "sense_idxs": [2, 3], "arg1_idx": 5, "arg2_idx": 7}


def make_language(lang, counts, rng):
    rows = []
    for sense, n in zip(SENSES, counts):
        for _ in range(n):
            first = rng.choice(SECOND_LEVEL[sense])
            # Some relations carry a second label from another class; only the first counts.
            second = ""
            if rng.random() < 0.1:
                second = rng.choice(SECOND_LEVEL[rng.choice([s for s in SENSES if s != sense])])
            rows.append(("Implicit", "", first, second))
    for _ in range(30):
        rows.append(("Explicit", "because", rng.choice(SECOND_LEVEL[rng.choice(SENSES)]), ""))
    for _ in range(8):
        rows.append(("EntRel", "", "", ""))
    for _ in range(3):
        rows.append(("AltLex", "", rng.choice(SECOND_LEVEL["Contingency"]), ""))
    for _ in range(2):
        rows.append(("Hypophora", "", "Hypophora", ""))
    rng.shuffle(rows)

    lines = []
    offset = 0
    for i, (rel_type, conn, s1, s2) in enumerate(rows, start=1):
        a1 = f"{lang} talk sentence {i} first argument"
        a2 = f"{lang} talk sentence {i} second argument"
        span1 = f"{offset}..{offset + len(a1)}"
        offset += len(a1) + 1
        span2 = f"{offset}..{offset + len(a2)}"
        offset += len(a2) + 1
        lines.append("|".join([rel_type, conn, s1, s2, span1, a1, span2, a2]))
    return "\n".join(lines) + "\n"


def main():
    out = pathlib.Path(__file__).resolve().parent.parent / "tests" / "data"
    out.mkdir(parents=True, exist_ok=True)
    (out / "ted_mdb_columns.json").write_text(json.dumps(COLUMN_MAP, indent=2) + "\n")
    for lang, counts in TED_MDB.items():
        rng = random.Random(f"ted-mdb-{lang}")
        (out / f"ted_mdb_{lang}.pipe").write_text(make_language(lang, counts, rng), encoding="utf-8")


if __name__ == "__main__":
    main()
