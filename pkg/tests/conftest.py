import numpy as np
import pytest

from stabswitch import fixtures, gf2, rewiring
from stabswitch.catalog import PERFECT5, SHOR9, STEANE7
from stabswitch.pauli import PauliOp

I2 = np.eye(2)
XM = np.array([[0, 1], [1, 0]])
ZM = np.array([[1, 0], [0, -1]])
YM = np.array([[0, -1j], [1j, 0]])
DENSE = {"I": I2, "X": XM, "Z": ZM, "Y": YM}


def dense_matrix(op: PauliOp) -> np.ndarray:
    """Kronecker-product matrix of a signed Pauli (independent sign oracle)."""
    out = np.array([[1.0 + 0j]])
    for q in range(op.n):
        out = np.kron(out, DENSE[op.letter(q)])
    return op.sign * out


def naive_distance(code, cap=None) -> int:
    """Independent distance oracle: enumerate the whole syndrome-map kernel
    (2^(n+k) elements) and take the minimum weight outside the group."""
    g = code.generator_matrix
    basis = gf2.kernel(gf2.swap_xz(g)) if g.shape[0] else gf2.identity(2 * code.n)
    dim = basis.shape[0]
    best = None
    for mask in range(1, 1 << dim):
        coeff = np.array([(mask >> i) & 1 for i in range(dim)], dtype=np.uint8)
        v = (coeff @ basis) % 2
        if not v.any() or gf2.in_rowspace(g, v):
            continue
        w = int((v[: code.n] | v[code.n :]).sum())
        best = w if best is None else min(best, w)
    return best


@pytest.fixture(scope="session")
def steane7():
    return STEANE7


@pytest.fixture(scope="session")
def perfect5():
    return PERFECT5


@pytest.fixture(scope="session")
def shor9():
    return SHOR9


@pytest.fixture(scope="session")
def table_decompositions():
    return {
        name: rewiring.load_fixture_decomposition(text)
        for name, text in fixtures.FIXTURES.items()
    }


@pytest.fixture(scope="session")
def table_paths(table_decompositions):
    return {name: rewiring.build_path(dec) for name, dec in table_decompositions.items()}


@pytest.fixture(scope="session")
def searched_steane_to_five():
    cfg = rewiring.RewiringConfig(m=0, seed=12345, max_retries=2000, min_distance=3)
    return rewiring.search(STEANE7, PERFECT5, cfg)
