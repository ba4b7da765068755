"""Randomized verification campaigns over a grid of (n, k) cells."""
from __future__ import annotations

from .concurrence import check_condition_2_via_order, verify_equivalence
from .errors import TheoremViolation
from .instances import DEFAULT_DENOMINATOR, concurrent_family, instance_to_json, perturb_family, seeded_rng


def parse_range(text: str) -> list[int]:
    """``"2..4"`` -> [2, 3, 4]; ``"3"`` -> [3]."""
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
    else:
        lo = hi = int(text)
    if lo > hi:
        raise ValueError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def cells(n_values, k_rule="all"):
    for n in n_values:
        if n < 2:
            raise ValueError("n must be at least 2")
        if k_rule == "all":
            ks = range(1, n)
        else:
            k = int(k_rule)
            if not 1 <= k < n:
                continue
            ks = [k]
        for k in ks:
            yield n, k


def run_trial(seed, n: int, k: int, index: int, concurrent: bool,
              denominator_bound: int = DEFAULT_DENOMINATOR) -> dict | None:
    """Run one trial; return a falsification record or None when everything agrees."""
    rng = seeded_rng(seed, n, k, index)
    fam, x = concurrent_family(rng, n, k, denominator_bound)
    if not concurrent:
        fam = perturb_family(rng, fam, denominator_bound)
    record = {"n": n, "k": k, "trial": index, "mode": "concurrent" if concurrent else "perturbed"}
    try:
        report = verify_equivalence(fam)
    except TheoremViolation as e:
        return {**record, "reason": str(e), "instance": instance_to_json(fam)}
    via_order = check_condition_2_via_order(fam)
    if via_order != report.failing_faces:
        return {**record, "reason": "order-based criterion disagrees", "instance": instance_to_json(fam)}
    if concurrent and report.witness != x:
        return {**record, "reason": "concurrent instance lost its witness", "instance": instance_to_json(fam)}
    if not concurrent and report.intersects:
        return {**record, "reason": "perturbed instance still concurrent", "instance": instance_to_json(fam)}
    return None


def run_campaign(n_values, k_rule="all", trials: int = 50, seed=0,
                 denominator_bound: int = DEFAULT_DENOMINATOR) -> dict:
    """Half of each cell's trials are concurrent by construction, half perturbed."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    summary = {"seed": seed, "trials": trials, "k": str(k_rule), "cells": [], "falsified": False}
    n_concurrent = (trials + 1) // 2
    for n, k in cells(n_values, k_rule):
        falsifications = []
        passes = {True: 0, False: 0}
        for i in range(trials):
            concurrent = i < n_concurrent
            bad = run_trial(seed, n, k, i, concurrent, denominator_bound)
            if bad is None:
                passes[concurrent] += 1
            else:
                falsifications.append(bad)
        summary["cells"].append({
            "n": n, "k": k,
            "concurrent": n_concurrent, "concurrent_pass": passes[True],
            "perturbed": trials - n_concurrent, "perturbed_pass": passes[False],
            "falsifications": falsifications,
        })
        summary["falsified"] = summary["falsified"] or bool(falsifications)
    return summary
