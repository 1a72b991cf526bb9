"""Quantum circuits for classifying two-bit Boolean functions, plus the
classical query-count baseline they are measured against.

The main circuit decides whether a function is even or odd with two oracle
queries. A deterministic classical strategy needs all four input points, a
fact :func:`classical_min_queries` establishes by exhaustive search over
adaptive decision trees.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass
from enum import Enum

from . import gates, linalg
from .linalg import StateVector, apply, basis_state
from .oracles import Parity, TruthTable, build_oracle, classify, enumerate_functions

STEP_LABELS = ("initial", "H12", "Uf", "H2", "Uf", "H12")

# The decisive components carry amplitude 1/sqrt(2) (about 0.707) or 0, so a
# 0.5 cutoff separates them with a wide margin.
VERDICT_AMPLITUDE_THRESHOLD = 0.5


class DJVerdict(Enum):
    CONSTANT = "constant"
    BALANCED = "balanced"
    NEITHER = "neither"


@dataclass(frozen=True)
class AlgorithmResult:
    """Outcome of one even/odd circuit run.

    ``per_step_states`` holds the initial state followed by the state after
    each of the five gates, in order; its last entry is ``final_state``.
    """

    final_state: StateVector
    verdict: Parity
    oracle_calls: int
    per_step_states: tuple[StateVector, ...]


def run_even_odd(f: TruthTable) -> AlgorithmResult:
    """Classify ``f`` as even or odd with two oracle queries.

    Starting from |00>, the circuit applies a Hadamard to both qubits, the
    phase oracle, a Hadamard to the second qubit alone, the oracle again,
    and a final Hadamard to both qubits. The result is
    (s|00> + |01>)/sqrt(2) for even functions and (s|10> + |01>)/sqrt(2)
    for odd ones, where the sign s is (-1)^(f(00) xor f(01)). The verdict
    is read off from which of the |00> or |10> components carries the
    nonzero amplitude.
    """
    oracle = build_oracle(f)
    sequence = (
        (gates.hadamard_both(), False),
        (oracle, True),
        (gates.hadamard_second(), False),
        (oracle, True),
        (gates.hadamard_both(), False),
    )
    state = basis_state("00")
    steps = [state]
    calls = 0
    for operator, is_oracle_call in sequence:
        state = apply(operator, state)
        steps.append(state)
        calls += int(is_oracle_call)
    amplitudes = state.amplitudes
    if abs(amplitudes[0]) > VERDICT_AMPLITUDE_THRESHOLD:
        verdict = Parity.EVEN
    elif abs(amplitudes[2]) > VERDICT_AMPLITUDE_THRESHOLD:
        verdict = Parity.ODD
    else:
        raise RuntimeError(
            "final state matches neither parity pattern; "
            f"amplitudes {amplitudes.tolist()}"
        )
    return AlgorithmResult(
        final_state=state,
        verdict=verdict,
        oracle_calls=calls,
        per_step_states=tuple(steps),
    )


def run_deutsch_jozsa_2bit(f: TruthTable) -> DJVerdict:
    """Constant-vs-balanced test with a single oracle query.

    Applies Hadamards on both qubits, the phase oracle once, and Hadamards
    again, starting from |00>. The function is reported constant when the
    final state is |00> up to sign, balanced when the |00> amplitude
    vanishes and the function has exactly two ones, and neither otherwise
    (functions with one or three ones sit outside the promise).
    """
    h12 = gates.hadamard_both()
    state = basis_state("00")
    for operator in (h12, build_oracle(f), h12):
        state = apply(operator, state)
    tol = linalg.DEFAULT_TOL
    amp00 = state.amplitudes[0]
    if abs(abs(amp00) - 1.0) <= tol:
        return DJVerdict.CONSTANT
    if abs(amp00) <= tol and classify(f).ones == 2:
        return DJVerdict.BALANCED
    return DJVerdict.NEITHER


def constant_balanced_promise_functions() -> list[TruthTable]:
    """The 8 functions that are constant or balanced (0, 2 or 4 ones)."""
    return [f for f in enumerate_functions() if f.ones() in (0, 2, 4)]


def classical_min_queries(
    label: Callable[[TruthTable], object],
    functions: Iterable[TruthTable] | None = None,
) -> int:
    """Minimum worst-case query count of any deterministic classical strategy.

    ``label`` assigns each candidate function the value the strategy must
    determine. A strategy is an adaptive decision tree: it picks an input
    point, learns the function's output bit there, and may choose the next
    point based on the answer. The search is exhaustive and exact, by
    minimax recursion over the set of functions still consistent with the
    answers seen so far. ``functions`` defaults to all 16 two-bit functions.
    """
    pool = tuple(enumerate_functions() if functions is None else functions)
    labels = {f: label(f) for f in pool}
    memo: dict[frozenset, int] = {}

    def depth(candidates: frozenset) -> int:
        if len({labels[f] for f in candidates}) <= 1:
            return 0
        cached = memo.get(candidates)
        if cached is not None:
            return cached
        best: int | None = None
        for point in range(4):
            answers_zero = frozenset(f for f in candidates if f.evaluate(point) == 0)
            answers_one = candidates - answers_zero
            if not answers_zero or not answers_one:
                continue  # uninformative point: every candidate agrees here
            cost = 1 + max(depth(answers_zero), depth(answers_one))
            if best is None or cost < best:
                best = cost
        # A mixed-label set always contains two functions differing at some
        # point, so at least one informative split exists.
        assert best is not None
        memo[candidates] = best
        return best

    return depth(frozenset(pool))
