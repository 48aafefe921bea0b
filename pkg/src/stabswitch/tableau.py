"""Stabilizer-state simulation of the measure-and-correct switching channel.

A Tableau keeps the usual destabilizer/stabilizer frame: rows 0..n-1 are
destabilizers, rows n..2n-1 stabilizers, each row a signed Pauli.  Row i
of the destabilizer block anticommutes with stabilizer row i and commutes
with every other row.  Measurements of arbitrary Pauli operators and
conditional Pauli corrections are performed natively on the frame.

The channel for one conversion step is: measure the incoming generator,
then apply the outgoing generator if the observed eigenvalue differs
from the incoming generator's declared sign.  run_path folds this over a
ConversionPath and checks that the final frame is stabilized by the
target code with its printed signs and that ancilla qubits end
disentangled.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import analysis, gf2, pauli
from .pauli import PauliOp, StabilizerCode


class InconsistentSpecError(ValueError):
    """The requested logical eigenstate specification is contradictory."""


class StabilizationFailureError(AssertionError):
    """A path run did not end stabilized by the target code (internal bug)."""


class TransportFailureError(AssertionError):
    """Logical transport produced an operator outside the target normalizer."""


class Tableau:
    """Mutable stabilizer frame for an n-qubit pure stabilizer state."""

    def __init__(self, n: int, x: np.ndarray, z: np.ndarray, r: np.ndarray):
        self.n = n
        self.x = x
        self.z = z
        self.r = r

    @classmethod
    def from_stabilizers(cls, stabilizers: Sequence[PauliOp]) -> "Tableau":
        """Build a frame for the state fixed by n independent commuting
        signed Paulis.  Destabilizers are completed automatically."""
        n = stabilizers[0].n
        if len(stabilizers) != n:
            raise ValueError(f"need exactly {n} stabilizers, got {len(stabilizers)}")
        code = StabilizerCode(n, tuple(stabilizers))  # validates the set
        s_mat = code.generator_matrix
        a = gf2.swap_xz(s_mat)
        destab = []
        for i in range(n):
            b = gf2.zeros(n)
            b[i] = 1
            d, _ = gf2.solve_affine(a, b)
            destab.append(d)
        # make destabilizers mutually commuting: adding stabilizer i fixes
        # <d_i, d_j> without disturbing the delta pattern
        for j in range(n):
            for i in range(j):
                if gf2.symplectic_product(destab[i], destab[j]) == 1:
                    destab[j] = (destab[j] + s_mat[i]) % 2
        x = gf2.zeros((2 * n, n))
        z = gf2.zeros((2 * n, n))
        r = gf2.zeros(2 * n)
        for i, d in enumerate(destab):
            x[i], z[i] = d[:n], d[n:]
        for i, p in enumerate(stabilizers):
            x[n + i], z[n + i] = p.x, p.z
            r[n + i] = 0 if p.sign > 0 else 1
        return cls(n, x, z, r)

    def copy(self) -> "Tableau":
        return Tableau(self.n, self.x.copy(), self.z.copy(), self.r.copy())

    def row(self, i: int) -> PauliOp:
        return PauliOp(self.x[i].copy(), self.z[i].copy(), -1 if self.r[i] else +1)

    def stabilizer_rows(self) -> list[PauliOp]:
        return [self.row(self.n + i) for i in range(self.n)]

    def _anticommute_mask(self, p: PauliOp) -> np.ndarray:
        """Boolean mask over all 2n rows of anticommutation with p."""
        return ((self.x @ p.z + self.z @ p.x) % 2).astype(bool)

    def _rowmul(self, i: int, j: int) -> None:
        """row i <- row j * row i, with exact phase tracking."""
        ph = pauli.phase_exponent(self.x[j], self.z[j], self.x[i], self.z[i])
        ph = (ph + 2 * int(self.r[i]) + 2 * int(self.r[j])) % 4
        assert ph % 2 == 0, "rowsum between anticommuting rows"
        self.x[i] ^= self.x[j]
        self.z[i] ^= self.z[j]
        self.r[i] = ph // 2

    def _deterministic_eigenvalue(self, p: PauliOp) -> int:
        """Eigenvalue of p's unsigned vector, assuming it is in the group."""
        sel = np.nonzero(self._anticommute_mask(p)[: self.n])[0]
        acc_x = gf2.zeros(self.n)
        acc_z = gf2.zeros(self.n)
        ph = 0
        for i in sel:
            ph = (ph + pauli.phase_exponent(acc_x, acc_z, self.x[self.n + i], self.z[self.n + i])) % 4
            ph = (ph + 2 * int(self.r[self.n + i])) % 4
            acc_x ^= self.x[self.n + i]
            acc_z ^= self.z[self.n + i]
        if not (np.array_equal(acc_x, p.x) and np.array_equal(acc_z, p.z)):
            raise ValueError(f"{p} is not in the stabilizer group (up to sign)")
        assert ph % 2 == 0
        return +1 if ph == 0 else -1

    def measure(
        self,
        p: PauliOp,
        rng: np.random.Generator | None = None,
        forced: int | None = None,
    ) -> int:
        """Measure the unsigned Pauli observable underlying p.

        Returns the eigenvalue in {+1, -1}.  p's own sign is ignored; the
        caller compares the outcome against whatever sign it expects.  If
        the vector of p is in the stabilizer group the outcome is
        deterministic and the state unchanged; otherwise the outcome is
        uniformly random (or `forced` if given) and the frame is updated
        so that the outcome-signed p joins the stabilizer.
        """
        if p.n != self.n:
            raise ValueError("qubit count mismatch")
        anti = self._anticommute_mask(p)
        anti_stab = np.nonzero(anti[self.n :])[0]
        if anti_stab.size == 0:
            return self._deterministic_eigenvalue(p)
        piv = self.n + int(anti_stab[0])
        if forced is not None:
            outcome = int(forced)
            if outcome not in (+1, -1):
                raise ValueError("forced outcome must be +1 or -1")
        else:
            if rng is None:
                raise ValueError("random measurement needs an rng (or forced outcome)")
            outcome = +1 if int(rng.integers(0, 2)) == 0 else -1
        for i in np.nonzero(anti)[0]:
            # the pivot's destabilizer partner is overwritten below, so its
            # (meaningless) phase must not trip the hermiticity assertion
            if i != piv and i != piv - self.n:
                self._rowmul(int(i), piv)
        self.x[piv - self.n] = self.x[piv]
        self.z[piv - self.n] = self.z[piv]
        self.r[piv - self.n] = self.r[piv]
        self.x[piv] = p.x
        self.z[piv] = p.z
        self.r[piv] = 0 if outcome > 0 else 1
        return outcome

    def apply_pauli(self, p: PauliOp) -> "Tableau":
        """Conjugate the frame by p: rows anticommuting with p flip sign."""
        if p.n != self.n:
            raise ValueError("qubit count mismatch")
        self.r ^= self._anticommute_mask(p).astype(np.uint8)
        return self

    def contains(self, p: PauliOp) -> bool:
        """True iff the signed operator p is exactly in the stabilizer group."""
        anti = self._anticommute_mask(p)[self.n :]
        if anti.any():
            return False
        try:
            ev = self._deterministic_eigenvalue(p)
        except ValueError:
            return False
        return ev == p.sign

    def stabilizes(self, code: StabilizerCode) -> bool:
        """True iff every signed generator of code stabilizes the state."""
        return all(self.contains(g) for g in code.gens)


@dataclass(frozen=True)
class LogicalFrame:
    """Symplectic pairs of logical representatives for a code: k X-type and
    k Z-type operators with X_i, Z_i anticommuting and all other pairs
    commuting, none in the stabilizer group."""

    logical_x: tuple[PauliOp, ...]
    logical_z: tuple[PauliOp, ...]

    def validate(self, code: StabilizerCode) -> None:
        k = code.k
        if len(self.logical_x) != k or len(self.logical_z) != k:
            raise ValueError(f"frame has wrong rank for k={k}")
        ops = list(self.logical_x) + list(self.logical_z)
        for op in ops:
            if any(not op.commutes(g) for g in code.gens):
                raise ValueError(f"{op} is outside the code normalizer")
            if pauli.in_group(code, op).in_group:
                raise ValueError(f"{op} is a stabilizer, not a logical")
        for i, lx in enumerate(self.logical_x):
            for j, lz in enumerate(self.logical_z):
                want = 1 if i == j else 0
                if gf2.symplectic_product(lx.vector, lz.vector) != want:
                    raise ValueError("frame pairs are not symplectic")


def logical_frame(code: StabilizerCode) -> LogicalFrame:
    """Canonical logical frame from the normalizer kernel, by symplectic
    Gram-Schmidt over the quotient modulo the stabilizer group."""
    g = code.generator_matrix
    cands = [v for v in (gf2.kernel(gf2.swap_xz(g)) if g.shape[0] else gf2.identity(2 * code.n))]
    span = [row for row in g]
    xs: list[np.ndarray] = []
    zs: list[np.ndarray] = []
    while len(xs) < code.k:
        used = np.array(span + xs + zs, dtype=np.uint8).reshape(-1, 2 * code.n)
        u = next(v for v in cands if not gf2.in_rowspace(used, v))
        w = next(v for v in cands if gf2.symplectic_product(u, v) == 1)
        # sweep the remaining candidates so later picks commute with (u, w)
        new_cands = []
        for v in cands:
            if gf2.symplectic_product(v, w) == 1:
                v = (v + u) % 2
            if gf2.symplectic_product(v, u) == 1:
                v = (v + w) % 2
            new_cands.append(v)
        cands = new_cands
        xs.append(u)
        zs.append(w)
    frame = LogicalFrame(
        tuple(PauliOp.from_vector(v) for v in xs),
        tuple(PauliOp.from_vector(v) for v in zs),
    )
    frame.validate(code)
    return frame


def _parse_state_spec(spec, k: int) -> list[tuple[str, int]]:
    if isinstance(spec, str):
        s = spec.strip()
        sign = +1
        if s and s[0] in "+-":
            sign = +1 if s[0] == "+" else -1
            s = s[1:]
        if s not in ("X", "Z"):
            raise InconsistentSpecError(f"unknown state spec {spec!r}")
        return [(s, sign)] * k
    out = []
    for axis, sign in spec:
        if axis not in ("X", "Z") or sign not in (+1, -1):
            raise InconsistentSpecError(f"bad spec entry {(axis, sign)!r}")
        out.append((axis, sign))
    if len(out) != k:
        raise InconsistentSpecError(f"spec lists {len(out)} qubits, code has k={k}")
    return out


def encode(code: StabilizerCode, frame: LogicalFrame, state_spec) -> Tableau:
    """Tableau for the logical eigenstate selected by state_spec.

    state_spec is either a string like "+Z" / "-X" (applied to every
    logical qubit) or a sequence of (axis, sign) pairs, one per logical
    qubit.  The result is stabilized by all code generators plus the
    selected signed logical operators.
    """
    entries = _parse_state_spec(state_spec, code.k)
    stabs = list(code.gens)
    for (axis, sign), lx, lz in zip(entries, frame.logical_x, frame.logical_z):
        base = lx if axis == "X" else lz
        stabs.append(PauliOp(base.x, base.z, base.sign * sign))
    try:
        return Tableau.from_stabilizers(stabs)
    except (pauli.AnticommutingGeneratorsError, pauli.DependentGeneratorsError) as exc:
        raise InconsistentSpecError(str(exc)) from None


def run_step(
    t: Tableau,
    step,
    rng: np.random.Generator | None = None,
    forced: int | None = None,
) -> int:
    """One measure-and-correct conversion step, in place.

    Measures the step's incoming generator; if the observed eigenvalue
    differs from that generator's declared sign, applies the outgoing
    generator as a correction.  Returns the raw measurement outcome.
    """
    outcome = t.measure(step.measure, rng=rng, forced=forced)
    if outcome != step.measure.sign:
        t.apply_pauli(step.correct)
    return outcome


def run_path(
    t: Tableau,
    path,
    rng: np.random.Generator | None = None,
    forced: Sequence[int | None] | None = None,
    record: list | None = None,
) -> Tableau:
    """Run every step of a ConversionPath, in place.

    `forced`, when given, supplies a per-step outcome override (None
    entries fall back to rng).  `record`, when given, receives one dict
    per step with the outcome and whether the correction fired.  After
    the last step the frame must be stabilized by the padded target code
    and every ancilla qubit must be disentangled; a failure raises
    StabilizationFailureError since it indicates an adjacency bug.
    """
    if forced is not None and len(forced) != len(path.steps):
        raise ValueError("forced outcome schedule length != step count")
    for i, step in enumerate(path.steps):
        f = forced[i] if forced is not None else None
        outcome = run_step(t, step, rng=rng, forced=f)
        if record is not None:
            record.append(
                {
                    "step": i,
                    "outcome": outcome,
                    "corrected": outcome != step.measure.sign,
                }
            )
    for q in path.ancilla_qubits:
        single = _ancilla_stabilizer(path.target, q)
        if not t.contains(single):
            raise StabilizationFailureError(
                f"ancilla qubit {q} not disentangled after conversion"
            )
    if not t.stabilizes(path.target):
        raise StabilizationFailureError("final state not stabilized by target code")
    return t


def _ancilla_stabilizer(code: StabilizerCode, q: int) -> PauliOp:
    """The signed single-qubit stabilizer the code holds on qubit q.

    The letter (Z or X) reflects the ancilla's padding type; the sign is
    whatever the signed group dictates, so an ancilla pinned to |1> or
    |-> still counts as disentangled.
    """
    for letter in ("Z", "X"):
        x = gf2.zeros(code.n)
        z = gf2.zeros(code.n)
        (x if letter == "X" else z)[q] = 1
        elem = pauli.group_element(code, np.concatenate([x, z]))
        if elem is not None:
            return elem
    raise ValueError(f"code has no single-qubit stabilizer on qubit {q}")


def transport_logicals(frame: LogicalFrame, path) -> LogicalFrame:
    """Carry logical representatives through a path.

    A representative anticommuting with a step's measured generator is
    multiplied by that step's outgoing generator, which restores
    commutation with the new code while acting identically on the
    encoded state.
    """

    def carry(op: PauliOp) -> PauliOp:
        for step in path.steps:
            if gf2.symplectic_product(op.vector, step.measure.vector) == 1:
                op = op * step.correct
        return op

    out = LogicalFrame(
        tuple(carry(op) for op in frame.logical_x),
        tuple(carry(op) for op in frame.logical_z),
    )
    try:
        out.validate(path.target)
    except ValueError as exc:
        raise TransportFailureError(str(exc)) from None
    return out


class _SyndromeExtractor:
    """Per-intermediate measurement plan for fast simulated syndrome readout.

    For each printed generator the deterministic-measurement expansion
    (which stabilizer rows multiply to it) is fixed by the frame vectors
    alone, so after an error only the row-phase flips need recounting.
    """

    def __init__(self, t: Tableau, code: StabilizerCode):
        self.t = t
        self.code = code
        n = t.n
        rows = np.hstack([t.x, t.z])
        sel_rows = []
        for g in code.gens:
            mask = t._anticommute_mask(g)[:n]
            sel = np.zeros(2 * n, dtype=np.uint8)
            sel[n:] = mask.astype(np.uint8)
            total = (sel @ rows) % 2
            if not np.array_equal(total, g.vector):
                raise ValueError("generator not in simulated stabilizer group")
            if t._deterministic_eigenvalue(g) != g.sign:
                raise ValueError("simulated state not stabilized with printed signs")
            sel_rows.append(sel)
        self.rows_form = gf2.swap_xz(rows)
        self.selection = np.array(sel_rows, dtype=np.uint8)

    def extract(self, error: PauliOp) -> np.ndarray:
        """Syndrome bits a fault-free readout would report after `error`."""
        flips = (self.rows_form @ error.vector) % 2
        return (self.selection @ flips % 2).astype(np.uint8)


@dataclass(frozen=True)
class InjectionReport:
    ok: bool
    failures: tuple[tuple[int, PauliOp], ...]
    errors_checked: int
    syndrome_mismatches: int


def inject_and_check(path, error_weight_cap: int, tableau_check: bool = True) -> InjectionReport:
    """Exhaustively inject every Pauli error of weight <= cap on every
    intermediate code and confirm detectability.

    With tableau_check the simulator's extracted syndrome is also compared
    against the algebraic syndrome map for every injected error.
    """
    n = path.n
    errors = [
        PauliOp.from_vector(v) for v in analysis.error_vectors(n, error_weight_cap)
    ]
    failures = []
    mismatches = 0
    checked = 0
    for idx, code in enumerate(path.intermediates):
        extractor = None
        if tableau_check:
            t = encode(code, logical_frame(code), "+Z")
            extractor = _SyndromeExtractor(t, code)
        for e in errors:
            checked += 1
            if not analysis.detectable(code, e):
                failures.append((idx, e))
            if extractor is not None:
                if not np.array_equal(extractor.extract(e), pauli.syndrome(code, e)):
                    mismatches += 1
    return InjectionReport(
        ok=not failures and mismatches == 0,
        failures=tuple(failures),
        errors_checked=checked,
        syndrome_mismatches=mismatches,
    )
