from decimal import Decimal, getcontext
from fractions import Fraction

import numpy as np
import pytest

from conftest import naive_distance
from stabswitch import analysis, pauli, rewiring
from stabswitch.analysis import ErrorClass
from stabswitch.pauli import PauliOp, StabilizerCode


class TestCodeDistance:
    def test_bare_qubit(self):
        code = StabilizerCode(1, ())
        rep = analysis.code_distance(code, cap=3)
        assert rep.distance == 1 and rep.exact
        assert rep.witness == PauliOp.from_string("X")  # X < Y < Z enumeration order

    def test_catalog_distances(self, perfect5, steane7, shor9):
        for code in (perfect5, steane7, shor9):
            rep = analysis.code_distance(code, cap=3)
            assert rep.exact and rep.distance == 3
            assert rep.witness.weight == 3
            assert not pauli.syndrome(code, rep.witness).any()
            assert not pauli.in_group(code, rep.witness).in_group

    def test_cap_reached_reports_lower_bound(self, perfect5):
        rep = analysis.code_distance(perfect5, cap=2)
        assert not rep.exact and rep.distance == 3 and rep.witness is None

    def test_k_zero_rejected(self):
        code = StabilizerCode.from_strings(["ZZ", "XX"])
        with pytest.raises(analysis.ZeroLogicalQubitsError):
            analysis.code_distance(code, cap=2)

    def test_agrees_with_naive_oracle(self, perfect5, steane7):
        rng = np.random.default_rng(17)
        codes = [perfect5, steane7]
        codes += [pauli.random_stabilizer_code(6, 1, rng) for _ in range(5)]
        codes += [pauli.random_stabilizer_code(4, 2, rng) for _ in range(3)]
        for code in codes:
            rep = analysis.code_distance(code, cap=code.n)
            assert rep.exact
            assert rep.distance == naive_distance(code)


class TestVerifyPath:
    def test_empty_path(self, steane7):
        path = rewiring.build_path(rewiring.decompose(steane7, steane7))
        assert analysis.verify_path(path, 3).ok

    def test_table_fixtures_pass(self, table_paths):
        for name in ("table1", "table2", "table3"):
            assert analysis.verify_path(table_paths[name], 3).ok

    def test_failure_reports_index_and_witness(self, table_paths):
        import dataclasses

        path = table_paths["table1"]
        weak = StabilizerCode.from_strings(
            ["ZIIIIII", "IZIIIII", "IIZIIII", "IIIZIII", "IIIIZII", "IIIIIZI"]
        )
        bad = dataclasses.replace(
            path, intermediates=path.intermediates[:3] + (weak,) + path.intermediates[4:]
        )
        report = analysis.verify_path(bad, 3)
        assert not report.ok
        assert report.failing_index == 3
        assert report.witness.weight < 3
        assert not analysis.detectable(weak, report.witness)

    def test_d1_always_passes(self, table_paths):
        assert analysis.verify_path(table_paths["table2"], 1).ok

    def test_equivalence_with_detectability(self, table_paths):
        # pass at d=3 is the same statement as weight<=2 detectability
        path = table_paths["table1"]
        for code in path.intermediates:
            for v in analysis.error_vectors(path.n, 2):
                assert analysis.detectable(code, PauliOp.from_vector(v))


class TestDetectable:
    def test_group_member(self, steane7):
        assert analysis.detectable(steane7, steane7.gens[3])

    def test_distance_witness_is_undetectable(self, perfect5):
        witness = analysis.code_distance(perfect5, cap=3).witness
        assert not analysis.detectable(perfect5, witness)


class TestClassifyError:
    def test_shared_generator(self, table_decompositions):
        dec = table_decompositions["table1"]
        assert (
            analysis.classify_error(dec.shared[0], dec.source, dec.target)
            == ErrorClass.IN_BOTH_GROUPS
        )

    def test_identity(self, table_decompositions):
        dec = table_decompositions["table1"]
        e = PauliOp.identity(dec.padded_n)
        assert analysis.classify_error(e, dec.source, dec.target) == ErrorClass.IN_BOTH_GROUPS

    def test_weight1_x_outside_both_normalizers(self, table_decompositions):
        dec = table_decompositions["table1"]
        e = PauliOp.from_string("XIIIIII")
        assert (
            analysis.classify_error(e, dec.source, dec.target)
            == ErrorClass.OUTSIDE_BOTH_NORMALIZERS
        )

    def test_classes_partition_consistently(self, table_decompositions):
        dec = table_decompositions["table2"]
        for v in analysis.error_vectors(dec.padded_n, 2)[::7]:
            e = PauliOp.from_vector(v)
            cls = analysis.classify_error(e, dec.source, dec.target)
            in_s = pauli.in_group(dec.source, e).in_group
            in_sp = pauli.in_group(dec.target, e).in_group
            if in_s and in_sp:
                assert cls == ErrorClass.IN_BOTH_GROUPS
            elif cls == ErrorClass.OUTSIDE_BOTH_NORMALIZERS:
                assert pauli.syndrome(dec.source, e).any()
                assert pauli.syndrome(dec.target, e).any()

    def test_shared_block_errors_detectable_everywhere(self, table_paths, table_decompositions):
        # an error inside the shared span stays inside every intermediate group
        for name in ("table1", "table3"):
            dec = table_decompositions[name]
            path = table_paths[name]
            e = pauli.product([op for op in dec.shared], n=dec.padded_n)
            for code in path.intermediates:
                assert analysis.detectable(code, e)
                assert pauli.in_group(code, e).in_group


class TestStepSubsystemDistance:
    def test_single_qubit_gauge(self):
        pre = StabilizerCode.from_strings(["Z"])
        step = rewiring.ConversionStep(
            measure=PauliOp.from_string("X"),
            correct=PauliOp.from_string("Z"),
            replaced_index=0,
        )
        # the only non-gauge Pauli is Y (it needs both gauge generators)
        assert analysis.step_subsystem_distance(pre, step) == 1

    def test_table1_steps_report_positive_distance(self, table_paths):
        path = table_paths["table1"]
        for i, step in enumerate(path.steps):
            dist = analysis.step_subsystem_distance(path.intermediates[i], step)
            assert dist is not None and dist >= 1

    def test_weight1_error_anticommuting_only_with_measured(self):
        # measuring X on one qubit of the ZZ code: a Z error there flips
        # only that measurement, so the -1 explanations are indistinguishable
        pre = StabilizerCode.from_strings(["ZZ"])
        step = rewiring.ConversionStep(
            measure=PauliOp.from_string("XI"),
            correct=PauliOp.from_string("ZZ"),
            replaced_index=0,
        )
        e = PauliOp.from_string("ZI")
        assert not e.commutes(step.measure)
        assert e.commutes(step.correct)
        assert analysis.step_subsystem_distance(pre, step) == 1

    def test_rejects_non_adjacent(self, steane7):
        step = rewiring.ConversionStep(
            measure=steane7.gens[1], correct=steane7.gens[0], replaced_index=0
        )
        with pytest.raises(ValueError):
            analysis.step_subsystem_distance(steane7, step)


def decimal_bound(n: int, m: int, d: int, gc: int) -> Decimal:
    """Arbitrary-precision re-evaluation of the failure bound."""
    getcontext().prec = 60
    total = n + m
    p = Decimal(d - 1) / Decimal(total)
    q = Decimal(3) / Decimal(4)
    if p == 0:
        kl = (1 / (1 - q)).ln()
    else:
        kl = p * (p / q).ln() + (1 - p) * ((1 - p) / (1 - q)).ln()
    log_raw = (
        Decimal(total) * Decimal(4).ln()
        - kl * Decimal(total)
        + Decimal(gc + 1).ln()
        - Decimal(gc) * Decimal(2).ln()
    )
    return log_raw.exp()


class TestFailureBound:
    def test_d1_collapse(self):
        for n, m, gc in ((3, 0, 0), (5, 2, 4), (9, 1, 3)):
            got = analysis.failure_bound(n, m, 1, gc)
            assert got.raw == pytest.approx((gc + 1) * 2.0**-gc, rel=1e-12)

    def test_against_decimal_oracle_spot(self):
        got = analysis.failure_bound(7, 0, 3, 5)
        want = decimal_bound(7, 0, 3, 5)
        assert got.raw == pytest.approx(float(want), rel=1e-12)

    def test_monotone_decreasing_in_gc(self):
        values = [analysis.failure_bound(7, 0, 3, gc).raw for gc in range(1, 8)]
        assert all(a > b for a, b in zip(values, values[1:]))

    def test_effective_clamped(self):
        res = analysis.failure_bound(7, 0, 3, 0)
        assert res.raw > 1.0
        assert res.effective == 1.0

    def test_domain_error(self):
        with pytest.raises(analysis.DomainError):
            analysis.failure_bound(4, 0, 4, 2)

    def test_weight_d_variant(self):
        base = analysis.failure_bound(9, 0, 3, 2).raw
        shifted = analysis.failure_bound(9, 0, 3, 2, count_weight_d=True).raw
        assert shifted > base  # including weight-d errors can only grow the count


class TestMinAncilla:
    def test_d1_epsilon1(self):
        # (m+1) 2^-m dips below 1 first at m = 2
        res = analysis.min_ancilla(3, 1, 1.0)
        assert res.m == 2

    def test_scan_oracle(self):
        res = analysis.min_ancilla(7, 3, 0.5)
        assert analysis.failure_bound(7, res.m, 3, gc=res.m).raw < 0.5
        for m in range(res.m):
            assert analysis.failure_bound(7, m, 3, gc=m).raw >= 0.5

    def test_monotone_in_epsilon(self):
        ms = [analysis.min_ancilla(7, 3, eps).m for eps in (1.0, 0.5, 0.1, 0.01, 0.001)]
        assert all(a <= b for a, b in zip(ms, ms[1:]))


class TestMasking:
    def test_closed_form_values(self):
        assert analysis.masking_exact(1) == 0
        assert analysis.masking_exact(2) == Fraction(1, 3)
        assert analysis.masking_exact(3) == Fraction(5, 21)
        assert analysis.masking_exact(5) == Fraction(49, 465)

    def test_enumerate_matches_closed_form_n3(self):
        v = np.array([1, 0, 0], dtype=np.uint8)
        w = np.array([0, 0, 1], dtype=np.uint8)
        assert analysis.masking_enumerate(3, v, w) == Fraction(5, 21)

    def test_orthogonal_pair_invariance(self):
        # the result depends only on <v, w>, not the particular pair
        pairs3 = [((1, 0, 0), (0, 1, 0)), ((1, 1, 0), (0, 0, 1)), ((1, 1, 1), (1, 1, 0)), ((0, 1, 0), (1, 0, 1))]
        for v, w in pairs3:
            assert sum(a * b for a, b in zip(v, w)) % 2 == 0
            assert analysis.masking_enumerate(3, v, w) == Fraction(5, 21)
        pairs4 = [((1, 0, 0, 0), (0, 0, 0, 1)), ((1, 1, 0, 0), (0, 0, 1, 1))]
        results = {analysis.masking_enumerate(4, v, w) for v, w in pairs4}
        assert len(results) == 1
        assert results.pop() == analysis.masking_exact(4)

    def test_overlapping_pair_gives_zero(self):
        v = np.array([1, 0, 0], dtype=np.uint8)
        assert analysis.masking_enumerate(3, v, v) == 0
        w = np.array([1, 1, 0], dtype=np.uint8)
        u = np.array([1, 0, 1], dtype=np.uint8)
        assert sum(int(a) * int(b) for a, b in zip(w, u)) % 2 == 1
        assert analysis.masking_enumerate(3, w, u) == 0

    def test_bound_holds_for_n_ge_3(self):
        for n in (3, 4):
            assert analysis.masking_exact(n) <= Fraction(n - 1, 2**n)

    def test_n2_exceeds_reference_bound(self):
        # enumerated truth at n = 2 is 1/3, above (n-1) 2^-n = 1/4
        v = np.array([1, 0], dtype=np.uint8)
        w = np.array([0, 1], dtype=np.uint8)
        got = analysis.masking_enumerate(2, v, w)
        assert got == Fraction(1, 3)
        assert got > Fraction(1, 4)

    def test_enumerate_budget(self):
        v = np.zeros(5, dtype=np.uint8)
        w = np.zeros(5, dtype=np.uint8)
        v[0] = w[4] = 1
        with pytest.raises(analysis.InfeasibleError):
            analysis.masking_enumerate(5, v, w)

    def test_mc_matches_enumeration_n3(self):
        v = np.array([1, 0, 0], dtype=np.uint8)
        w = np.array([0, 0, 1], dtype=np.uint8)
        est = analysis.masking_mc(3, v, w, 40_000, np.random.default_rng(18))
        assert abs(est.estimate - 5 / 21) < 4 * est.stderr


class TestCommutativityCheck:
    def test_identical_codes(self, steane7):
        report = analysis.commutativity_check(steane7, steane7, 0)
        assert report.gc == 0 and report.ok

    def test_table1_pair(self, table_decompositions):
        dec = table_decompositions["table1"]
        report = analysis.commutativity_check(dec.source, dec.target, 0)
        assert report.gc == 5
        assert report.invertible
        assert report.presentation_rank == 5

    def test_random_pairs_with_basis_changes(self):
        rng = np.random.default_rng(19)
        for trial in range(10):
            a = pauli.random_stabilizer_code(6, 1, rng)
            b = pauli.random_stabilizer_code(6, 1, rng)
            m = trial % 4
            pa, pb = rewiring.pad(a, b, m)
            report = analysis.commutativity_check(pa, pb, m, rng=rng, basis_trials=5)
            assert report.ok
