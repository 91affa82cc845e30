"""Deterministic random generation of valid descriptors for property tests."""

import random

from stegotax.descriptor import Descriptor, Directness, Locality, PatternClause, StarProperty
from stegotax.taxonomy import Taxonomy
from stegotax.vocab import (
    Activeness,
    DirectnessKind,
    DistributionPattern,
    IndirectPattern,
    LevelCharacteristic,
    LocalityKind,
    ReferenceTemporality,
)

STAR_TEXTS = [
    "reversible",
    "bidirectional",
    "unidirectional",
    "broadcast",
    "noisy",
    "noise-free",
    "cover selection",
    "coverless",
    "predictable cover",
    "variable cover",
    "randomized cover",
    "key-based symbol, embedding position and cover data permutation",
    "session re-keying every few minutes",
    "tolerates packet loss up to 5%",
]

LOCALITIES = [Locality()] + [
    Locality(LocalityKind.DISTRIBUTED, dist)
    for dist in list(DistributionPattern) + [None]
]
DIRECTNESSES = [Directness()] + [
    Directness(DirectnessKind.INDIRECT, pattern) for pattern in IndirectPattern
]


def random_descriptor(rng: random.Random, taxonomy: Taxonomy, max_clauses: int = 4) -> Descriptor:
    records = taxonomy.records()
    n_clauses = rng.randint(1, max_clauses)
    clauses = []
    for k in range(n_clauses):
        record = rng.choice(records)
        label = chr(ord("a") + k) if n_clauses > 1 else None
        clauses.append(PatternClause(code=record.code, name=record.name, label=label))
    level = (
        LevelCharacteristic.MULTI_LEVEL
        if n_clauses >= 2 and rng.random() < 0.5
        else LevelCharacteristic.SINGLE_LEVEL
    )
    stars = tuple(
        StarProperty(text) for text in rng.sample(STAR_TEXTS, k=rng.randint(0, 3))
    )
    return Descriptor(
        locality=rng.choice(LOCALITIES),
        directness=rng.choice(DIRECTNESSES),
        activeness=rng.choice(list(Activeness)),
        level=level,
        temporality=rng.choice(list(ReferenceTemporality)),
        star_properties=stars,
        patterns=tuple(clauses),
    )


def descriptor_stream(seed: int, taxonomy: Taxonomy, count: int):
    rng = random.Random(seed)
    for _ in range(count):
        yield random_descriptor(rng, taxonomy)
