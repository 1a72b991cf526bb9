"""Self-verification suite: every library-level invariant, run exhaustively.

Each named check sweeps all 16 two-bit functions (or the relevant global
property) and reports pass/fail with a short expected-vs-actual note on
failure. The CLI ``verify`` command renders these results and exits nonzero
if anything fails. Checks trap exceptions, so a broken build degrades to
failed checks instead of a crash.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .algorithms import (
    DJVerdict,
    classical_min_queries,
    constant_balanced_promise_functions,
    run_deutsch_jozsa_2bit,
    run_even_odd,
)
from .entanglement import analyze_pure_state, is_idempotent
from .linalg import density_from_state, overlap, partial_trace, purity
from .nmr import (
    decompose_coherences,
    magnetization_classifies_parity,
    observability,
    spin1_indistinguishability_check,
)
from .oracles import (
    Parity,
    build_oracle,
    classify,
    enumerate_functions,
    is_separable_oracle,
)

_INV_SQRT2 = 1.0 / math.sqrt(2.0)
_QUARTER_AMP = 1.0 / (2.0 * math.sqrt(2.0))


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationOutcome:
    checks: list[CheckResult]
    functions_verified: int
    total_functions: int
    classical_queries: int | None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def summary_line(self) -> str:
        queries = "?" if self.classical_queries is None else self.classical_queries
        return (
            f"{self.functions_verified}/{self.total_functions} functions verified, "
            f"classical_min_queries={queries}"
        )


@dataclass
class _FunctionRecord:
    bits: str
    table: object
    even: bool
    sign_first: int  # (-1)^(f(00) xor f(01))
    sign_second: int  # (-1)^(f(10) xor f(11))
    result: object
    rho: object
    reduced1: object
    reduced2: object
    entanglement: object
    observability: object
    dj: DJVerdict
    separable: bool
    ones: int


@dataclass
class _Collector:
    """Accumulates mismatch notes per check and the failing function set."""

    failed_functions: set[str] = field(default_factory=set)

    def check(self, name: str, notes: list[str]) -> CheckResult:
        for note in notes:
            bits = note.split(":", 1)[0]
            if len(bits) == 4 and set(bits) <= {"0", "1"}:
                self.failed_functions.add(bits)
        detail = "; ".join(notes[:4])
        if len(notes) > 4:
            detail += f"; and {len(notes) - 4} more"
        return CheckResult(name=name, passed=not notes, detail=detail)


def _build_record(f) -> _FunctionRecord:
    outputs = f.outputs
    result = run_even_odd(f)
    rho = density_from_state(result.final_state)
    return _FunctionRecord(
        bits=f.to_string(),
        table=f,
        even=classify(f).parity is Parity.EVEN,
        sign_first=1 - 2 * (outputs[0] ^ outputs[1]),
        sign_second=1 - 2 * (outputs[2] ^ outputs[3]),
        result=result,
        rho=rho,
        reduced1=partial_trace(rho, 1),
        reduced2=partial_trace(rho, 2),
        entanglement=analyze_pure_state(result.final_state),
        observability=observability(rho),
        dj=run_deutsch_jozsa_2bit(f),
        separable=is_separable_oracle(build_oracle(f)),
        ones=f.ones(),
    )


def _expected_final(rec: _FunctionRecord) -> np.ndarray:
    a, b = rec.sign_first, rec.sign_second
    return np.array([(a + b) * _QUARTER_AMP, 2 * _QUARTER_AMP, (a - b) * _QUARTER_AMP, 0.0])


def _expected_density(rec: _FunctionRecord) -> np.ndarray:
    s = rec.sign_first
    m = np.zeros((4, 4))
    if rec.even:
        m[0, 0] = m[1, 1] = 0.5
        m[0, 1] = m[1, 0] = 0.5 * s
    else:
        m[1, 1] = m[2, 2] = 0.5
        m[1, 2] = m[2, 1] = 0.5 * s
    return m


def run_all_checks() -> VerificationOutcome:
    tol = linalg.DEFAULT_TOL
    functions = enumerate_functions()
    records: dict[str, _FunctionRecord] = {}
    collector = _Collector()
    checks: list[CheckResult] = []

    build_notes = []
    for f in functions:
        try:
            records[f.to_string()] = _build_record(f)
        except Exception as exc:
            build_notes.append(f"{f.to_string()}: analysis raised {exc!r}")
    checks.append(collector.check("function_analysis", build_notes))

    def sweep(name: str, probe) -> None:
        notes = []
        for bits, rec in records.items():
            try:
                notes.extend(f"{bits}: {msg}" for msg in probe(rec))
            except Exception as exc:
                notes.append(f"{bits}: check raised {exc!r}")
        checks.append(collector.check(name, notes))

    # Enumeration structure: counts per class and parity split.
    notes = []
    bit_strings = [f.to_string() for f in functions]
    if len(set(bit_strings)) != 16 or bit_strings != sorted(bit_strings):
        notes.append(f"enumeration: expected 16 distinct ascending tables, got {bit_strings}")
    histogram = {ones: sum(1 for f in functions if f.ones() == ones) for ones in range(5)}
    if histogram != {0: 1, 1: 4, 2: 6, 3: 4, 4: 1}:
        notes.append(f"enumeration: class histogram {histogram} != {{1,4,6,4,1}}")
    even_count = sum(1 for f in functions if classify(f).parity is Parity.EVEN)
    if even_count != 8:
        notes.append(f"enumeration: expected 8 even functions, found {even_count}")
    checks.append(collector.check("function_enumeration", notes))

    def probe_oracle(rec):
        m = build_oracle(rec.table).entries
        msgs = []
        if np.max(np.abs(m - np.diag(np.diagonal(m)))) > tol:
            msgs.append("oracle is not diagonal")
        if np.max(np.abs(m @ m - np.eye(4))) > tol:
            msgs.append("oracle is not self-inverse")
        expected_diag = [(-1.0) ** b for b in rec.table.outputs]
        if np.max(np.abs(np.diagonal(m) - expected_diag)) > tol:
            msgs.append(f"oracle diagonal {np.diagonal(m).tolist()} != {expected_diag}")
        return msgs

    sweep("oracle_properties", probe_oracle)

    sweep(
        "separability_parity_theorem",
        lambda rec: []
        if rec.separable == rec.even
        else [f"separable={rec.separable} but even={rec.even}"],
    )

    def probe_verdict(rec):
        msgs = []
        expected = Parity.EVEN if rec.even else Parity.ODD
        if rec.result.verdict is not expected:
            msgs.append(f"expected verdict {expected.value}, got {rec.result.verdict.value}")
        if rec.result.oracle_calls != 2:
            msgs.append(f"expected 2 oracle calls, counted {rec.result.oracle_calls}")
        if len(rec.result.per_step_states) != 6:
            msgs.append(f"expected 6 per-step states, got {len(rec.result.per_step_states)}")
        return msgs

    sweep("circuit_verdicts", probe_verdict)

    def probe_norms(rec):
        msgs = []
        for i, state in enumerate(rec.result.per_step_states):
            err = abs(float(np.sum(np.abs(state.amplitudes) ** 2)) - 1.0)
            if err > tol:
                msgs.append(f"step {i} norm error {err:.3e}")
        return msgs

    sweep("step_normalization", probe_norms)

    def probe_sign_law(rec):
        expected = _expected_final(rec)
        err = float(np.max(np.abs(rec.result.final_state.amplitudes - expected)))
        if err > tol:
            return [f"final state deviates from sign law by {err:.3e}"]
        return []

    sweep("final_state_sign_law", probe_sign_law)

    def probe_pattern(rec):
        s = rec.sign_first
        if rec.even:
            pattern = np.array([s * _INV_SQRT2, _INV_SQRT2, 0.0, 0.0])
        else:
            pattern = np.array([0.0, _INV_SQRT2, s * _INV_SQRT2, 0.0])
        inner = float(abs(np.vdot(pattern, rec.result.final_state.amplitudes)))
        if abs(inner - 1.0) > tol:
            return [f"|overlap with expected pattern| = {inner!r} != 1"]
        return []

    sweep("final_state_patterns", probe_pattern)

    def probe_density(rec):
        expected = _expected_density(rec)
        msgs = []
        err = float(np.max(np.abs(rec.rho.entries - expected)))
        if err > tol:
            msgs.append(f"density matrix deviates by {err:.3e}")
        if not rec.rho.is_positive_semidefinite():
            msgs.append("density matrix has a negative eigenvalue")
        return msgs

    sweep("density_matrix_forms", probe_density)

    def probe_reduced(rec):
        s = rec.sign_first
        msgs = []
        if rec.even:
            expected2 = 0.5 * np.array([[1.0, s], [s, 1.0]])
            expected_purity, expected_idempotent = 1.0, True
        else:
            expected2 = 0.5 * np.eye(2)
            expected_purity, expected_idempotent = 0.5, False
        err = float(np.max(np.abs(rec.reduced2.entries - expected2)))
        if err > tol:
            msgs.append(f"qubit-2 reduced matrix deviates by {err:.3e}")
        p = purity(rec.reduced2)
        if abs(p - expected_purity) > tol:
            msgs.append(f"qubit-2 reduced purity {p!r} != {expected_purity}")
        if is_idempotent(rec.reduced2) != expected_idempotent:
            msgs.append(f"qubit-2 reduced idempotency != {expected_idempotent}")
        trace_err = abs(complex(np.trace(rec.reduced1.entries)) - 1.0)
        if trace_err > tol:
            msgs.append(f"qubit-1 reduced trace off by {trace_err:.3e}")
        return msgs

    sweep("reduced_density_forms", probe_reduced)

    def probe_entanglement(rec):
        ent = rec.entanglement
        expected_c = 0.0 if rec.even else 1.0
        msgs = []
        if abs(ent.concurrence - expected_c) > 1e-10:
            msgs.append(f"concurrence {ent.concurrence!r} != {expected_c}")
        if ent.is_entangled == rec.even:
            msgs.append(f"is_entangled={ent.is_entangled} but even={rec.even}")
        relation = 1.0 - ent.concurrence**2 / 2.0
        if abs(ent.reduced_purity_q2 - relation) > 1e-10:
            msgs.append("purity/concurrence relation violated")
        if abs(ent.reduced_purity_q1 - ent.reduced_purity_q2) > 1e-10:
            msgs.append("reduced purities of the two qubits disagree")
        return msgs

    sweep("entanglement_correspondence", probe_entanglement)

    notes = []
    even_finals = [r.result.final_state for r in records.values() if r.even]
    odd_finals = [r.result.final_state for r in records.values() if not r.even]
    for e in even_finals:
        for o in odd_finals:
            value = abs(overlap(e, o))
            if abs(value - 0.5) > tol:
                notes.append(f"overlap: |<even|odd>| = {value!r} != 0.5")
    checks.append(collector.check("even_odd_overlap", notes))

    def probe_nmr(rec):
        obs = rec.observability
        msgs = []
        if obs.observable_line != rec.even:
            msgs.append(f"observable_line={obs.observable_line} but even={rec.even}")
        expected_tm2 = 0.5 if rec.even else 0.0
        if abs(obs.transverse_magnetization_q2 - expected_tm2) > tol:
            msgs.append(
                f"qubit-2 magnetization {obs.transverse_magnetization_q2!r} != {expected_tm2}"
            )
        if abs(obs.transverse_magnetization_q1) > tol:
            msgs.append(
                f"qubit-1 magnetization {obs.transverse_magnetization_q1!r} != 0"
            )
        return msgs

    sweep("nmr_observability", probe_nmr)

    def probe_coherence(rec):
        decomposition = decompose_coherences(rec.rho)
        msgs = []
        err = float(np.max(np.abs(decomposition.total() - rec.rho.entries)))
        if err > tol:
            msgs.append(f"coherence components re-sum off by {err:.3e}")
        for order in (1, 2):
            sym = float(
                np.max(
                    np.abs(
                        decomposition.orders[order]
                        - decomposition.orders[-order].conj().T
                    )
                )
            )
            if sym > tol:
                msgs.append(f"order +-{order} components are not conjugate transposes")
        return msgs

    sweep("coherence_resum", probe_coherence)

    def probe_dj(rec):
        if rec.ones in (0, 4):
            expected = DJVerdict.CONSTANT
        elif rec.ones == 2:
            expected = DJVerdict.BALANCED
        else:
            expected = DJVerdict.NEITHER
        if rec.dj is not expected:
            return [f"DJ verdict {rec.dj.value} != {expected.value}"]
        return []

    sweep("dj_verdicts", probe_dj)

    notes = []
    try:
        if not spin1_indistinguishability_check():
            notes.append("spin-1 readout unexpectedly separates even from odd")
        if not magnetization_classifies_parity(2, 0.25):
            notes.append("qubit-2 magnetization threshold 0.25 fails to classify parity")
    except Exception as exc:
        notes.append(f"spin readout checks raised {exc!r}")
    checks.append(collector.check("spin_readout_separation", notes))

    notes = []
    classical_queries: int | None = None
    try:
        classical_queries = classical_min_queries(lambda f: classify(f).parity)
        if classical_queries != 4:
            notes.append(f"classical parity queries = {classical_queries}, expected 4")
        promise_queries = classical_min_queries(
            lambda f: classify(f).ones in (0, 4),
            constant_balanced_promise_functions(),
        )
        if promise_queries != 3:
            notes.append(f"classical promise queries = {promise_queries}, expected 3")
        quantum_calls = {rec.result.oracle_calls for rec in records.values()}
        if quantum_calls != {2}:
            notes.append(f"quantum circuits used {quantum_calls} oracle calls, expected 2")
        elif classical_queries is not None and not 2 < classical_queries:
            notes.append("no quantum/classical separation")
    except Exception as exc:
        notes.append(f"query counting raised {exc!r}")
    checks.append(collector.check("query_separation", notes))

    return VerificationOutcome(
        checks=checks,
        functions_verified=16 - len(collector.failed_functions),
        total_functions=16,
        classical_queries=classical_queries,
    )
