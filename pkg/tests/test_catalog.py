import pytest

from stabswitch import analysis, catalog
from stabswitch.pauli import PauliOp


class TestCatalogCodes:
    def test_parameters(self):
        assert (catalog.STEANE7.n, catalog.STEANE7.k) == (7, 1)
        assert (catalog.PERFECT5.n, catalog.PERFECT5.k) == (5, 1)
        assert (catalog.SHOR9.n, catalog.SHOR9.k) == (9, 1)

    def test_advertised_distances(self):
        for name, code in catalog.CATALOG.items():
            rep = analysis.code_distance(code, cap=catalog.CATALOG_DISTANCE[name])
            assert rep.exact and rep.distance == catalog.CATALOG_DISTANCE[name]


class TestPermutations:
    def test_transposition(self):
        st34 = catalog.perm(catalog.STEANE7, "(34)")
        assert st34.gens[0] == PauliOp.from_string("IIXIXXX")  # IIIXXXX with 3<->4

    def test_multi_cycle(self):
        code = catalog.perm(catalog.PERFECT5, "(1 2 3)(45)")
        assert code.n == 5
        # XZZXI: qubit1->2, 2->3, 3->1, 4<->5
        assert code.gens[0] == PauliOp.from_string("ZXZIX")

    def test_permutation_preserves_distance(self):
        st34 = catalog.perm(catalog.STEANE7, "(34)")
        assert analysis.code_distance(st34, cap=3).distance == 3

    def test_involution(self):
        twice = catalog.perm(catalog.perm(catalog.SHOR9, "(19)"), "(19)")
        assert twice == catalog.SHOR9

    def test_bad_cycles(self):
        with pytest.raises(ValueError):
            catalog.parse_cycles("(12", 5)
        with pytest.raises(ValueError):
            catalog.parse_cycles("(18)", 5)
        with pytest.raises(ValueError):
            catalog.parse_cycles("(11)", 5)


class TestResolve:
    def test_catalog_name(self):
        assert catalog.resolve("steane7") is catalog.STEANE7

    def test_perm_expression(self):
        assert catalog.resolve("perm(steane7,(34))") == catalog.perm(catalog.STEANE7, "(34)")

    def test_nested_file(self, tmp_path):
        f = tmp_path / "code.txt"
        f.write_text("+ZZ\n")
        code = catalog.resolve(str(f))
        assert (code.n, code.k) == (2, 1)

    def test_json_file(self, tmp_path):
        f = tmp_path / "code.json"
        f.write_text('{"n": 2, "k": 1, "generators": ["ZZ"]}')
        code = catalog.resolve(str(f))
        assert (code.n, code.k) == (2, 1)

    def test_unknown(self):
        with pytest.raises(KeyError):
            catalog.resolve("nosuchcode")
