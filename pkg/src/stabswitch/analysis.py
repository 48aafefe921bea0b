"""Distance verification, error classification and ancilla-overhead bounds.

Minimum distances are computed by exhaustive enumeration: Pauli errors
are listed weight by weight (supports in lexicographic order, letters
X < Y < Z per position), and the first element of the syndrome-map
kernel that falls outside the stabilizer group is the witness.  This is
exponential in the weight cap and intended for desk-scale codes.

The failure-probability bound combines a union bound over low-weight
errors with a Chernoff estimate of their count; see failure_bound for
the exact expression.  min_ancilla inverts it numerically.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from . import gf2, pauli
from .pauli import PauliOp, StabilizerCode


class ZeroLogicalQubitsError(ValueError):
    """Distance is undefined for codes with k = 0."""


class DomainError(ValueError):
    """Bound evaluated outside its region of validity."""


class InfeasibleError(ValueError):
    """Exhaustive enumeration would exceed the configured budget."""


_LETTER_BITS = {"X": (1, 0), "Y": (1, 1), "Z": (0, 1)}


@lru_cache(maxsize=None)
def _errors_at_weight(n: int, w: int) -> np.ndarray:
    """All weight-w error vectors on n qubits, in deterministic order."""
    rows = []
    for supp in itertools.combinations(range(n), w):
        for letters in itertools.product("XYZ", repeat=w):
            v = np.zeros(2 * n, dtype=np.uint8)
            for q, letter in zip(supp, letters):
                xb, zb = _LETTER_BITS[letter]
                v[q] = xb
                v[n + q] = zb
            rows.append(v)
    out = np.array(rows, dtype=np.uint8).reshape(len(rows), 2 * n)
    out.setflags(write=False)
    return out


def error_vectors(n: int, wmax: int) -> np.ndarray:
    """All error vectors of weight 1..wmax on n qubits, weight-ascending."""
    parts = [_errors_at_weight(n, w) for w in range(1, wmax + 1)]
    if not parts:
        return gf2.zeros((0, 2 * n))
    return np.vstack(parts)


@dataclass(frozen=True)
class DistanceReport:
    """Result of a distance enumeration.

    When exact, `distance` is the true minimum logical weight and
    `witness` a minimum-weight logical operator; otherwise the search
    exhausted its cap and `distance` is a strict lower bound (the true
    distance is >= distance).
    """

    distance: int
    exact: bool
    witness: PauliOp | None
    per_weight_counts: dict[int, int]


def detectable(code: StabilizerCode, e: PauliOp) -> bool:
    """True iff e has a nonzero syndrome or lies in the stabilizer group
    (vector level, signs ignored)."""
    if pauli.syndrome(code, e).any():
        return True
    return pauli.in_group(code, e).in_group


def _first_logical(code: StabilizerCode, errs: np.ndarray) -> np.ndarray | None:
    """First row of errs with zero syndrome that is outside the group."""
    g = code.generator_matrix
    syn = (gf2.swap_xz(g).astype(np.int64) @ errs.T.astype(np.int64) % 2) if g.shape[0] else np.zeros((0, len(errs)))
    quiet = np.nonzero(~syn.any(axis=0))[0] if g.shape[0] else np.arange(len(errs))
    for idx in quiet:
        if not gf2.in_rowspace(g, errs[idx]):
            return errs[idx]
    return None


def code_distance(code: StabilizerCode, cap: int) -> DistanceReport:
    """Exact minimum distance if it is <= cap, else a lower bound of cap + 1.

    Enumerates every Pauli of weight 1..cap and returns the first
    zero-syndrome non-member found (weight order makes it minimal).
    """
    if code.k == 0:
        raise ZeroLogicalQubitsError("distance undefined for k = 0")
    if cap < 1:
        raise ValueError("cap must be >= 1")
    counts: dict[int, int] = {}
    for w in range(1, min(cap, code.n) + 1):
        errs = _errors_at_weight(code.n, w)
        counts[w] = len(errs)
        hit = _first_logical(code, errs)
        if hit is not None:
            return DistanceReport(w, True, PauliOp.from_vector(hit), counts)
    return DistanceReport(min(cap, code.n) + 1, False, None, counts)


@dataclass(frozen=True)
class PathReport:
    ok: bool
    failing_index: int | None
    witness: PauliOp | None
    reports: tuple[DistanceReport, ...]


def verify_path(path, d: int) -> PathReport:
    """Check that every intermediate code of a path has distance >= d.

    Stops at the first failing intermediate and reports its index along
    with a minimum-weight logical witness.
    """
    reports: list[DistanceReport] = []
    errs = error_vectors(path.n, d - 1) if d > 1 else gf2.zeros((0, 2 * path.n))
    for idx, code in enumerate(path.intermediates):
        hit = _first_logical(code, errs) if len(errs) else None
        if hit is not None:
            w = int((hit[: path.n] | hit[path.n :]).sum())
            witness = PauliOp.from_vector(hit)
            reports.append(DistanceReport(w, True, witness, {}))
            return PathReport(False, idx, witness, tuple(reports))
        reports.append(DistanceReport(d, False, None, {}))
    return PathReport(True, None, None, tuple(reports))


class ErrorClass(Enum):
    """Where an error sits relative to a pair of stabilizer groups."""

    IN_BOTH_GROUPS = "in_both_groups"
    IN_S_NOT_NORMALIZER_SP = "in_s_not_normalizer_sp"
    IN_SP_NOT_NORMALIZER_S = "in_sp_not_normalizer_s"
    OUTSIDE_BOTH_NORMALIZERS = "outside_both_normalizers"
    OTHER = "other"


def classify_error(e: PauliOp, s: StabilizerCode, sp: StabilizerCode) -> ErrorClass:
    """Partition an error by membership in the two groups and normalizers."""
    if e.n != s.n or e.n != sp.n:
        raise ValueError("qubit count mismatch")
    in_s = pauli.in_group(s, e).in_group
    in_sp = pauli.in_group(sp, e).in_group
    norm_s = not pauli.syndrome(s, e).any()
    norm_sp = not pauli.syndrome(sp, e).any()
    if in_s and in_sp:
        return ErrorClass.IN_BOTH_GROUPS
    if in_s and not norm_sp:
        return ErrorClass.IN_S_NOT_NORMALIZER_SP
    if in_sp and not norm_s:
        return ErrorClass.IN_SP_NOT_NORMALIZER_S
    if not norm_s and not norm_sp:
        return ErrorClass.OUTSIDE_BOTH_NORMALIZERS
    return ErrorClass.OTHER


def step_subsystem_distance(pre_code: StabilizerCode, step) -> int | None:
    """Minimum weight of a dressed logical operator for one conversion step.

    The two exchanged generators act as gauge operators; the remaining
    generators form the stabilizer.  A dressed logical commutes with the
    stabilizer but is not a product of stabilizer elements with at most
    one of the gauge operators (a product involving both would be
    anti-Hermitian, hence not a Pauli error).  Returns None if no such
    operator exists below weight n (possible only for k = 0).

    A step is t-fault-tolerant precisely when this value is >= 2t + 1.
    """
    idx = step.replaced_index
    if not 0 <= idx < len(pre_code.gens):
        raise ValueError("replaced_index out of range")
    outgoing = pre_code.gens[idx]
    if not np.array_equal(outgoing.vector, step.correct.vector):
        raise ValueError("step.correct does not match the replaced generator")
    if gf2.symplectic_product(outgoing.vector, step.measure.vector) != 1:
        raise ValueError("step is not adjacent to pre_code")
    rest = [g.vector for g in pre_code.gens if g is not outgoing]
    rest_mat = np.array(rest, dtype=np.uint8).reshape(len(rest), 2 * pre_code.n)
    gauge = np.vstack([rest_mat, outgoing.vector.reshape(1, -1), step.measure.vector.reshape(1, -1)])
    for w in range(1, pre_code.n + 1):
        errs = _errors_at_weight(pre_code.n, w)
        if rest_mat.shape[0]:
            syn = gf2.swap_xz(rest_mat).astype(np.int64) @ errs.T.astype(np.int64) % 2
            quiet = np.nonzero(~syn.any(axis=0))[0]
        else:
            quiet = np.arange(len(errs))
        for i in quiet:
            v = errs[i]
            try:
                coeff, _ = gf2.solve_affine(gauge.T, v)
            except gf2.InconsistentSystemError:
                return w
            if coeff[-1] and coeff[-2]:
                return w
    return None


class BoundResult(NamedTuple):
    raw: float
    effective: float


def _kl(p: float, q: float) -> float:
    """KL divergence D(p || q) in nats, with the p = 0 limit handled."""
    if p == 0.0:
        return math.log(1.0 / (1.0 - q))
    if p == 1.0:
        return math.log(1.0 / q)
    return p * math.log(p / q) + (1.0 - p) * math.log((1.0 - p) / (1.0 - q))


def failure_bound(n: int, m: int, d: int, gc: int, count_weight_d: bool = False) -> BoundResult:
    """Upper bound on the probability that a random draw leaves some error
    of weight below d undetectable in some intermediate code.

    Evaluates 4^(n+m) * exp(-D(p || 3/4) * (n+m)) * (gc+1) * 2^(-gc) in
    log space, with p = (d-1)/(n+m); `count_weight_d` switches the
    numerator to d (including weight-d errors in the tail count).  The
    raw value is returned untouched; `effective` clamps it into [0, 1].
    """
    if d < 1 or n < 1 or m < 0 or gc < 0:
        raise ValueError("need n, d >= 1 and m, gc >= 0")
    num = d if count_weight_d else d - 1
    total = n + m
    p = num / total
    if not p < 0.75:
        raise DomainError(f"bound needs {num}/(n+m) < 3/4, got {p:.3f}")
    log_raw = (
        total * math.log(4.0)
        - _kl(p, 0.75) * total
        + math.log(gc + 1.0)
        - gc * math.log(2.0)
    )
    raw = math.exp(log_raw)
    return BoundResult(raw, min(1.0, max(0.0, raw)))


class MinAncillaResult(NamedTuple):
    m: int
    asymptotic_reference: float


def min_ancilla(n: int, d: int, epsilon: float, count_weight_d: bool = False) -> MinAncillaResult:
    """Smallest m >= 0 with failure_bound(n, m, d, gc=m) < epsilon.

    Scans m upward (the bound is eventually decreasing in m).  Also
    reports the scale d*ln(n/d) + ln(1/epsilon) for context.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if not 0 < epsilon <= 1:
        raise ValueError("epsilon must be in (0, 1]")
    reference = d * math.log(n / d) + math.log(1.0 / epsilon)
    m = 0
    while True:
        if failure_bound(n, m, d, gc=m, count_weight_d=count_weight_d).raw < epsilon:
            return MinAncillaResult(m, reference)
        m += 1
        if m > 100_000:  # pragma: no cover - the bound decays geometrically
            raise RuntimeError("bound failed to drop below epsilon")


def masking_exact(n: int) -> Fraction:
    """Closed form for the masking probability over GL(F2, n).

    For nonzero v, w in F2^n with zero dot product and uniform invertible
    U, this is the probability that the last set bit of U v precedes the
    first set bit of (U^-1)^T w, computed as
    ((n-2) 2^(n-1) + 1) / ((2^n - 1)(2^(n-1) - 1)).  For n = 1 there are
    no such pairs and the probability is 0 by convention.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return Fraction(0)
    return Fraction((n - 2) * 2 ** (n - 1) + 1, (2**n - 1) * (2 ** (n - 1) - 1))


def _order_stats(mats: np.ndarray, invs: np.ndarray, v: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Boolean mask: last set bit of U v before first set bit of (U^-1)^T w."""
    n = v.shape[0]
    uv = (mats.astype(np.int64) @ v.astype(np.int64)) % 2
    uw = (np.transpose(invs, (0, 2, 1)).astype(np.int64) @ w.astype(np.int64)) % 2
    idx = np.arange(n)
    last = (uv * idx).max(axis=1)
    first = uw.argmax(axis=1)
    return last < first


def masking_enumerate(n: int, v, w, budget: int = 1 << 20) -> Fraction:
    """Exact masking probability by enumerating all of GL(F2, n).

    Filters every n x n bit matrix through an invertibility check, so it
    raises InfeasibleError once 2^(n^2) exceeds the budget (n <= 4 by
    default).
    """
    v = gf2.asbits(v)
    w = gf2.asbits(w)
    if not v.any() or not w.any():
        raise ValueError("v and w must be nonzero")
    total = 1 << (n * n)
    if total > budget:
        raise InfeasibleError(f"2^(n^2) = {total} matrices exceeds budget {budget}")
    bits = ((np.arange(total)[:, None] >> np.arange(n * n)[None, :]) & 1).astype(np.uint8)
    mats = bits.reshape(total, n, n)
    invs, ok = gf2.batch_invert(mats)
    mats = mats[ok]
    invs = invs[ok]
    hits = int(_order_stats(mats, invs, v, w).sum())
    return Fraction(hits, len(mats))


class MonteCarloEstimate(NamedTuple):
    estimate: float
    stderr: float
    hits: int
    trials: int


def masking_mc(n: int, v, w, trials: int, rng: np.random.Generator) -> MonteCarloEstimate:
    """Monte-Carlo estimate of the masking probability with standard error."""
    v = gf2.asbits(v)
    w = gf2.asbits(w)
    if not v.any() or not w.any():
        raise ValueError("v and w must be nonzero")
    hits = 0
    done = 0
    chunk = 200_000
    while done < trials:
        take = min(chunk, trials - done)
        mats, invs = gf2.random_gl_batch(n, take, rng)
        hits += int(_order_stats(mats, invs, v, w).sum())
        done += take
    p = hits / trials
    return MonteCarloEstimate(p, math.sqrt(p * (1 - p) / trials), hits, trials)


@dataclass(frozen=True)
class CommutativityReport:
    gc: int
    invertible: bool
    gc_ge_m: bool
    presentation_rank: int
    basis_change_ranks: tuple[int, ...]

    @property
    def ok(self) -> bool:
        ranks_match = all(r == self.gc for r in self.basis_change_ranks)
        return self.invertible and self.gc_ge_m and self.presentation_rank == self.gc and ranks_match


def commutativity_check(
    s: StabilizerCode,
    sp: StabilizerCode,
    m: int,
    rng: np.random.Generator | None = None,
    basis_trials: int = 0,
) -> CommutativityReport:
    """Check the commutativity matrix of a padded code pair.

    Runs the deterministic basis decomposition, reports whether its
    commutativity matrix is invertible with size gc >= m, and confirms
    that rank(G B G'^T) computed from the input presentations (and,
    optionally, from basis_trials random invertible re-presentations)
    equals gc.
    """
    from . import rewiring  # local import: rewiring depends on this module

    ga, gb, gc_rows, gbp, gcp = rewiring.subspace_bases(
        s.generator_matrix, sp.generator_matrix, normalize=False
    )
    h = gf2.symplectic_products(gcp, gc_rows)
    gc_size = gc_rows.shape[0]
    invertible = gf2.rank(h) == gc_size
    pres_rank = gf2.rank(gf2.symplectic_products(s.generator_matrix, sp.generator_matrix))
    ranks = []
    for _ in range(basis_trials):
        if rng is None:
            raise ValueError("basis_trials needs an rng")
        a1 = gf2.random_gl(len(s.gens), rng)
        a2 = gf2.random_gl(len(sp.gens), rng)
        g1 = (a1 @ s.generator_matrix) % 2
        g2 = (a2 @ sp.generator_matrix) % 2
        ranks.append(gf2.rank(gf2.symplectic_products(g1, g2)))
    return CommutativityReport(
        gc=gc_size,
        invertible=invertible,
        gc_ge_m=gc_size >= m,
        presentation_rank=pres_rank,
        basis_change_ranks=tuple(ranks),
    )
