"""Randomized verification suites.

Each suite draws reproducible random diagrams from a seed, runs one of the
structural checks from :mod:`skh.invariants`, and stops at the first failure.
A failure report embeds the offending diagram in the input text format (with
the diagnostic as comment lines), so the report itself is a valid input file
and the bug reproduces directly from it.

Suites:

* ``parity``      total rank parity matches the string-link predicate
* ``tensor``      stacking a (1,1)-tangle multiplies graded dimensions
* ``cut``         chain-level cut law at the top annular level
* ``moves``       graded dimensions survive random move sequences
* ``oracle``      sparse pipeline agrees with the independent dense oracle
* ``filtration``  filtered homology dominates the total homology
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .diagram import AnnularDiagram, TangleDiagram, annular_closure, to_text
from .f2 import homology_dims
from .complexes import build_complex
from .invariants import (
    cut_check,
    kh_total,
    parity_check,
    skh_annular,
    skh_tangle,
    spectral_bound_check,
    tensor_check,
)
from .oracle import oracle_homology
from .randgen import (
    random_annular,
    random_balanced_tangle,
    random_braid_word,
    random_knot_cut,
    random_move_walk,
)

__all__ = ["SUITES", "SuiteReport", "run_suite"]


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    runs: int
    passed: int
    seed: int
    elapsed_ms: float
    failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.failure is None and self.passed == self.runs

    def summary(self) -> str:
        status = "ok" if self.ok else "FAIL"
        return (
            f"suite={self.suite} seed={self.seed} passed={self.passed}/{self.runs} "
            f"elapsed_ms={self.elapsed_ms:.0f} {status}"
        )


def _failure_text(detail: str, d: TangleDiagram | AnnularDiagram) -> str:
    """Diagnostic comments followed by the diagram, as one valid input file."""
    lines = [f"# {line}" for line in detail.splitlines() if line]
    return "\n".join(lines) + "\n" + to_text(d)


def _parity_case(rng: random.Random, threads: int | None) -> tuple[bool, str, object]:
    d = random_balanced_tangle(rng, max_crossings=8)
    rep = parity_check(d, threads=threads)
    return rep.ok, f"parity check failed: {rep.detail}", d


def _tensor_case(rng: random.Random, threads: int | None) -> tuple[bool, str, object]:
    t = random_braid_word(rng, max_strands=3, max_letters=5)
    k = random_knot_cut(rng, max_strands=3, max_letters=4)
    rep = tensor_check(t, k, threads=threads)
    detail = f"tensor check failed: {rep.detail}\nsecond factor:\n{to_text(k)}"
    return rep.ok, detail, t


def _cut_case(rng: random.Random, threads: int | None) -> tuple[bool, str, object]:
    if rng.random() < 0.5:
        core = random_braid_word(rng, max_strands=3, max_letters=6)
    else:
        core = random_balanced_tangle(rng, max_crossings=6)
    a = annular_closure(core)
    rep = cut_check(a, threads=threads)
    return rep.ok, f"cut check failed: {rep.detail}", a


def _moves_case(rng: random.Random, threads: int | None) -> tuple[bool, str, object]:
    # String-link-shaped support keeps boundary orientations pinned, so the
    # tables must match exactly (closed components could flip their default
    # orientation under slice reordering).
    d = random_braid_word(rng, max_strands=3, max_letters=4)
    want = skh_tangle(d, threads=threads)
    moved, trace = random_move_walk(rng, d, steps=6, max_crossings=9)
    got = skh_tangle(moved, threads=threads)
    if got == want:
        return True, "", moved
    detail = (
        f"move walk changed homology: before {dict(want.table)} after {dict(got.table)}\n"
        f"moves: {[m.kind.value for m in trace]}\noriginal:\n{to_text(d)}"
    )
    return False, detail, moved


def _oracle_case(rng: random.Random, threads: int | None) -> tuple[bool, str, object]:
    roll = rng.random()
    if roll < 0.5:
        d = random_balanced_tangle(rng, max_crossings=6, max_steps=8)
        got = skh_tangle(d, threads=threads)
        want = oracle_homology(d, "skh-tangle")
        subject: TangleDiagram | AnnularDiagram = d
        mode = "skh-tangle"
    elif roll < 0.8:
        a = random_annular(rng, max_crossings=5, max_steps=6)
        got = skh_annular(a, threads=threads)
        want = oracle_homology(a, "skh-annular")
        subject = a
        mode = "skh-annular"
    else:
        a = random_annular(rng, max_crossings=5, max_steps=6)
        got = kh_total(a, threads=threads)
        want = oracle_homology(a, "kh-total")
        subject = a
        mode = "kh-total"
    if got.table == want:
        return True, "", subject
    detail = (
        f"oracle disagreement ({mode}): pipeline {dict(got.table)} oracle {want}"
    )
    return False, detail, subject


def _filtration_case(rng: random.Random, threads: int | None) -> tuple[bool, str, object]:
    a = random_annular(rng, max_crossings=7)
    rep = spectral_bound_check(a, threads=threads)
    return rep.ok, f"filtration check failed: {rep.detail}", a


SUITES = {
    "parity": _parity_case,
    "tensor": _tensor_case,
    "cut": _cut_case,
    "moves": _moves_case,
    "oracle": _oracle_case,
    "filtration": _filtration_case,
}


def run_suite(
    suite: str,
    *,
    seed: int = 0,
    count: int = 20,
    threads: int | None = None,
) -> SuiteReport:
    """Run ``count`` random cases of the named suite, stopping at the first
    failure."""
    try:
        case = SUITES[suite]
    except KeyError:
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}") from None
    rng = random.Random(seed)
    t0 = time.perf_counter()
    passed = 0
    failure: str | None = None
    for _ in range(count):
        ok, detail, subject = case(rng, threads)
        if not ok:
            failure = _failure_text(detail, subject)  # type: ignore[arg-type]
            break
        passed += 1
    elapsed = (time.perf_counter() - t0) * 1000.0
    return SuiteReport(
        suite=suite,
        runs=count,
        passed=passed,
        seed=seed,
        elapsed_ms=elapsed,
        failure=failure,
    )
