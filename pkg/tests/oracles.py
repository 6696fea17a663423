"""Independent naive-Bayes posterior oracle.

Deliberately shares no code with readlevel.models: probabilities are
recomputed straight from raw corpus counts and likelihoods are plain
products (no logs, no sorting), so agreement with the library is a real
cross-check of both the smoothing arithmetic and the classification rule.
"""

from __future__ import annotations

from collections import Counter


def tabulate(corpus: list[tuple[list[str], int]]) -> dict[int, Counter]:
    counts: dict[int, Counter] = {}
    for tokens, grade in corpus:
        counts.setdefault(grade, Counter()).update(tokens)
    return counts


def oracle_prob(
    feature: str,
    grade: int,
    counts: dict[int, Counter],
    lam: float,
    oov_mass: float,
    unseen_size: float,
) -> float:
    everywhere = sum(c.get(feature, 0) for c in counts.values())
    if everywhere == 0:
        return oov_mass / unseen_size
    grade_total = sum(counts[grade].values())
    grand_total = sum(sum(c.values()) for c in counts.values())
    in_grade = counts[grade].get(feature, 0) / grade_total
    background = everywhere / grand_total
    return (1.0 - oov_mass) * (lam * in_grade + (1.0 - lam) * background)


def oracle_posterior(
    doc: list[str],
    counts: dict[int, Counter],
    lam: float,
    oov_mass: float,
    unseen_size: float,
    priors: dict[int, float] | None = None,
) -> dict[int, float]:
    grades = sorted(counts)
    if priors is None:
        priors = {g: 1.0 / len(grades) for g in grades}
    likelihood = {}
    for g in grades:
        p = priors[g]
        for feature in doc:  # document order, straight product
            p *= oracle_prob(feature, g, counts, lam, oov_mass, unseen_size)
        likelihood[g] = p
    total = sum(likelihood.values())
    if total == 0.0:
        prior_total = sum(priors.values())
        return {g: priors[g] / prior_total for g in grades}
    return {g: v / total for g, v in likelihood.items()}


def oracle_classify(doc, counts, lam, oov_mass, unseen_size) -> int:
    posterior = oracle_posterior(doc, counts, lam, oov_mass, unseen_size)
    best = max(posterior.values())
    return min(g for g, p in posterior.items() if p == best)


def oracle_expected(doc, counts, lam, oov_mass, unseen_size) -> float:
    posterior = oracle_posterior(doc, counts, lam, oov_mass, unseen_size)
    return sum(g * p for g, p in posterior.items())
