"""Verification suites run by ``lw verify``; each returns a list of checks."""

from __future__ import annotations

import random
import time
from collections import Counter
from itertools import combinations

from .construction import LayeredWheel, verify_construction_invariants
from .models import linear_clique_model, validate_model
from .report import Check, Report, Status
from .search import BudgetExceeded, default_budget
from .separators import (
    PipelineFalsified,
    WeightFunction,
    build_pipeline,
    h_prime_invariants,
    verify_H_separator_bound,
)
from .series_parallel import HypothesisError, c_of_F, h_prime_of, is_series_parallel, two_terminal_frame
from .theta import (
    all_orders_by_search,
    crossing_witness,
    extract_long_theta_from_pipeline,
    find_wide_theta,
    max_anticomplete_path_family,
    standard_theta,
)

SUITES = ("construction", "series-parallel", "paths", "separator", "theta")
DELETION_RATES = (0.1, 0.3, 0.5)
DEFAULT_SAMPLES = 20


def _check(name: str, claim: str, fn) -> Check:
    """Run ``fn() -> (status or bool, witness)``, turning budget exhaustion into a status."""
    start = time.perf_counter()
    try:
        status, witness = fn()
        if isinstance(status, bool):
            status = Status.PASS if status else Status.FAIL
    except BudgetExceeded as exc:
        status, witness = Status.BUDGET_EXCEEDED, {"error": str(exc)}
    return Check(name, claim, status, witness, (time.perf_counter() - start) * 1000)


def sample_subgraph(lw: LayeredWheel, rng: random.Random, rate: float):
    return lw.induced(v for v in range(lw.graph.n) if rng.random() >= rate)


def random_weights(n: int, rng: random.Random) -> WeightFunction:
    """A proper weight function on a random support of at most 12 vertices."""
    support = rng.sample(range(n), rng.randint(1, min(n, 12)))
    num = [0] * n
    for v in support:
        num[v] = rng.randint(1, 20)
    return WeightFunction(tuple(num), sum(num))


# -- suites -------------------------------------------------------------------


def construction_suite(lw: LayeredWheel) -> list[Check]:
    checks = verify_construction_invariants(lw)

    def clique():
        model, _ = linear_clique_model(lw)
        result = validate_model(model, require_linear=True)
        return bool(result), {"k": lw.params.k, "condition": result.condition}

    checks.append(_check("clique-model", "the index paths form a linear K_k model, so tw >= k-1", clique))
    return checks


def series_parallel_suite(lw: LayeredWheel, rng: random.Random, samples: int) -> list[Check]:
    def full():
        hp = h_prime_of(lw.whole())
        res = is_series_parallel(hp.h_prime)
        return res.is_series_parallel, {"h_prime_n": hp.h_prime.n, "core": list(res.core_vertices)}

    def frame():
        F, paths = two_terminal_frame(lw)
        try:
            res = c_of_F(F, paths)
        except HypothesisError as exc:
            return False, {"hypothesis": str(exc)}
        except AssertionError as exc:
            return Status.FALSIFIED, {"error": str(exc)}
        return True, {"contracted_n": res.c_of_f.graph.n}

    def sampled():
        sizes, bad = [], None
        for i in range(samples):
            sub = sample_subgraph(lw, rng, DELETION_RATES[i % len(DELETION_RATES)])
            hp = h_prime_of(sub)
            sizes.append(hp.h_prime.n)
            res = is_series_parallel(hp.h_prime)
            if not res:
                bad = {"sample": i, "kept": list(sub.origin), "core": list(res.core_vertices)}
                break
        return (Status.FALSIFIED, bad) if bad else (True, {"samples": samples, "max_h_prime_n": max(sizes, default=0)})

    return [
        _check("h-prime-full", "H' of the whole graph is series-parallel", full),
        _check("c-of-F", "the contracted two-terminal frame is (s, t)-series-parallel", frame),
        _check("h-prime-sampled", "H' of sampled induced subgraphs is series-parallel", sampled),
    ]


def paths_suite(lw: LayeredWheel) -> list[Check]:
    budget = default_budget()

    def families():
        sizes = Counter()
        worst = None
        for u, v in combinations(lw.big, 2):
            fam = max_anticomplete_path_family(lw.graph, u, v, cap=8, budget=budget)
            if not fam.exhaustive:
                return Status.BUDGET_EXCEEDED, {"pair": [u, v], "nodes": fam.nodes}
            sizes[fam.size] += 1
            if worst is None or fam.size > worst[0]:
                worst = (fam.size, [u, v])
            if fam.size > 7:
                return Status.FALSIFIED, {"pair": [u, v], "paths": [list(P) for P in fam.paths]}
        top = worst[0] if worst else 0
        return True, {
            "pairs": sum(sizes.values()),
            "sizes": {str(s): c for s, c in sorted(sizes.items())},
            "max": top,
            "max_pair": worst[1] if worst else None,
            "tight_three_attained": top == 3,
        }

    def wide():
        out = find_wide_theta(lw.graph, 8, budget)
        if out.status == "budget_exceeded":
            return Status.BUDGET_EXCEEDED, {"nodes": out.nodes}
        return out.status == "none", {"status": out.status}

    return [
        _check("path-families", "big pairs have at most 7 internally anticomplete paths", families),
        _check("no-wide-theta-8", "no wide theta of width 8", wide),
    ]


def separator_suite(lw: LayeredWheel, rng: random.Random, samples: int) -> list[Check]:
    g = lw.params.g
    out: list[Check] = []

    def run():
        worst = {"size": 0, "bound": None}
        for i in range(samples):
            sub = lw.whole() if i == 0 else sample_subgraph(lw, rng, DELETION_RATES[i % len(DELETION_RATES)])
            H = sub.graph
            if H.n == 0:
                continue
            w = WeightFunction.uniform(H.n) if i == 0 else random_weights(H.n, rng)
            try:
                st = build_pipeline(H, sub.classes, w)
            except PipelineFalsified as exc:
                return Status.FALSIFIED, {"sample": i, "error": str(exc), "witness": exc.witness}
            for c in h_prime_invariants(H, sub.classes, g, st.hp) + verify_H_separator_bound(st):
                if not c.ok:
                    return Status.FAIL, {"sample": i, "check": c.name, "witness": c.witness}
            if len(st.K) >= worst["size"]:
                worst = {"size": len(st.K), "bound": 21 + 9 * (st.h2_width + 1), "h2_width": st.h2_width}
        return True, {"samples": samples, "largest_K": worst}

    out.append(_check("separator-pipeline", "K is w-balanced and |K| <= 21 + 9(width(H'') + 1)", run))
    return out


def theta_suite(lw: LayeredWheel, rng: random.Random, samples: int) -> list[Check]:
    g = lw.params.g

    def extraction():
        H = lw.graph
        st = build_pipeline(H, lw.classes, WeightFunction.uniform(H.n))
        res = extract_long_theta_from_pipeline(st, g)
        detail = {"status": res.status}
        if res.certificate is not None:
            detail["length"] = res.certificate.length
        if res.status == "falsified":
            return Status.FALSIFIED, {**detail, "detail": res.detail}
        return True, detail

    def random_orders():
        for lengths in ((4, 4, 4), (4, 4, 5), (10, 10, 10)):
            _, T = standard_theta(*lengths)
            vs = T.vertices()
            for _ in range(samples):
                order = list(vs)
                rng.shuffle(order)
                if crossing_witness(T, order) is None:
                    return Status.FALSIFIED, {"lengths": list(lengths), "order": order}
        return True, {"orders_per_theta": samples}

    def all_orders():
        _, T = standard_theta(4, 4, 4)
        res = all_orders_by_search(T, default_budget())
        if not res.ok:
            return Status.FALSIFIED, {"order": list(res.falsifier)}
        return True, {"vertices": res.vertices, "nodes": res.nodes}

    return [
        _check("extraction", "H'' has max degree < 9 or a long theta is extracted", extraction),
        _check("crossing-random", "random orders of thetas of length >= 4 have a crossing quadruple", random_orders),
        _check("crossing-all-orders", "every order of the (4,4,4) theta has a crossing quadruple", all_orders),
    ]


def run_suite(lw: LayeredWheel, suite: str, seed: int = 0, samples: int | None = None) -> Report:
    """Run one suite (or ``all``) with a seeded generator; the report is deterministic apart from timings."""
    names = SUITES if suite == "all" else (suite,)
    if any(n not in SUITES for n in names):
        raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES + ('all',))}")
    samples = DEFAULT_SAMPLES if samples is None else samples
    report = Report({"k": lw.params.k, "g": lw.params.g, "suite": suite, "samples": samples}, seed)
    for name in names:
        rng = random.Random(f"{seed}:{name}")
        if name == "construction":
            checks = construction_suite(lw)
        elif name == "series-parallel":
            checks = series_parallel_suite(lw, rng, samples)
        elif name == "paths":
            checks = paths_suite(lw)
        elif name == "separator":
            checks = separator_suite(lw, rng, samples)
        else:
            checks = theta_suite(lw, rng, samples)
        for c in checks:
            c.name = f"{name}/{c.name}"
        report.extend(checks)
    return report
