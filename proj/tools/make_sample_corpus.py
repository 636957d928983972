#!/usr/bin/env python3
"""Regenerate data/sample_corpus.jsonl, the bundled 200-document demo corpus.

The corpus is synthetic: each document is a short forum-style post assembled
from a bank of fact-leaning sentences, a bank of feeling-leaning sentences,
and neutral filler. Scored documents carry a score in [-5, 5] (positive for
the fact-style posts, negative for the feeling-style posts); the remaining
documents carry score 0 and land in the unannotated pool.

Deterministic: rerunning this script reproduces the file byte for byte.
"""

import json
import random
from pathlib import Path

FACT_SENTENCES = [
    "The result of the experiment was measured with great care.",
    "The rate of decay was calculated from the samples.",
    "Scientists observed the pattern in the fossil record.",
    "The theory was tested against the data.",
    "The evidence supports the claim about the origins of life.",
    "The age of the rock was estimated by three independent methods.",
    "The study reported a consistent result across every trial.",
    "The structure of the molecule was determined in the lab.",
    "Researchers recorded the speed of the reaction.",
    "The distance to the star was computed from the light curve.",
    "The survey counted the population of the species each year.",
    "The cause of the outbreak was traced to a single source.",
    "The model predicted the outcome of the test.",
    "The process of selection was documented in the report.",
    "The frequency of the signal was verified by the second team.",
    "The accuracy of the method was confirmed in the review.",
]

FEEL_SENTENCES = [
    "I feel that this view is deeply wrong.",
    "It is morally wrong to dismiss the suffering of others.",
    "My heart aches for the families involved.",
    "This is a sad and hopeless way to see the world.",
    "I believe in the basic goodness of people.",
    "It makes me so angry to read these cruel replies.",
    "Their story moved me to tears.",
    "I am truly grateful for my faith.",
    "It is a terribly painful thing to lose your hope.",
    "My soul rejects this cold and empty picture.",
    "I simply know in my heart that we matter.",
    "It is a joyful thought that love endures.",
    "I am fearful of a world without mercy.",
    "It feels utterly meaningless to argue numbers here.",
    "My spirit is lifted by their beautiful devotion.",
    "I sincerely hope that you find some peace.",
]

FILLER_SENTENCES = [
    "Consider the following point.",
    "He replied to the thread yesterday.",
    "Read the earlier posts first.",
    "That question comes up often.",
    "The debate continued for a week.",
    "Several members responded to the claim.",
]


def make_doc(rng, bank, n_sentences):
    parts = rng.sample(bank, n_sentences)
    if rng.random() < 0.4:
        parts.insert(rng.randrange(len(parts) + 1), rng.choice(FILLER_SENTENCES))
    return " ".join(parts)


def main():
    rng = random.Random(20240601)
    docs = []
    # 70 fact-scored, 70 feel-scored, 60 unscored pool documents = 200
    for i in range(70):
        docs.append({
            "id": f"fact{i:03d}",
            "text": make_doc(rng, FACT_SENTENCES, rng.randint(2, 4)),
            "score": rng.choice([2, 3, 4, 5]),
        })
    for i in range(70):
        docs.append({
            "id": f"feel{i:03d}",
            "text": make_doc(rng, FEEL_SENTENCES, rng.randint(2, 4)),
            "score": -rng.choice([2, 3, 4, 5]),
        })
    for i in range(60):
        bank = FACT_SENTENCES if i % 2 == 0 else FEEL_SENTENCES
        docs.append({
            "id": f"pool{i:03d}",
            "text": make_doc(rng, bank, rng.randint(2, 4)),
            "score": 0,
        })

    out = Path(__file__).resolve().parent.parent / "data" / "sample_corpus.jsonl"
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w", encoding="utf-8") as f:
        for d in docs:
            f.write(json.dumps(d) + "\n")
    print(f"wrote {len(docs)} documents to {out}")


if __name__ == "__main__":
    main()
