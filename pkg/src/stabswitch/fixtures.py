"""Bundled reference conversions for the `reproduce` command.

Each fixture records a known distance-preserving conversion verbatim:
the shared (A), bridged (B) and direct (C) generator rows of both padded
codes in conversion order, the bridge operator for each bridged pair,
the ancilla count m, and the original code sizes.  table1 converts the
seven-qubit CSS code to the five-qubit code with no ancillas (17
multi-qubit gates); table2 converts a qubit-permuted seven-qubit code to
the nine-qubit repetition-of-repetition code; table3 converts between
two qubit-labelings of the seven-qubit code and needs two ancillas.
"""

TABLE1 = """\
# [[7,1,3]] -> [[5,1,3]] padded to 7 qubits, m = 0
m = 0
sizes = 7 5
A  -YXXYIZZ  -YXXYIZZ
C  ZZZZIII   IXZZXII
C  -YYXXZZI  XZZXIII
C  -IXZYYZX  XIXZZII
C  -XIYZYZX  ZXIXZII
C  -ZYYZIXX  IIIIIZI
"""

TABLE2 = """\
# (34)-permuted [[7,1,3]] padded to 9 qubits -> [[9,1,3]], m = 0
m = 0
sizes = 7 9
bridge = IIIIIIIXX
A  ZZIIZZIII   ZZIIZZIII
A  IIIIIIIZZ   IIIIIIIZZ
C  YIIYYIYII   -YXYZZIXXX
B  ZZZZIIIZI   ZZIIIIZZI
C  -ZZYYXXIII  IZZZZIIII
C  ZIIZZIZII   -YYXXXXIII
C  -XZZXYIYII  -XYYIIIXXX
C  -IYZXZXYII  IIIZZIIII
"""

TABLE3 = """\
# [[7,1,3]] -> (34)-permuted [[7,1,3]], both padded to 9 qubits, m = 2
m = 2
sizes = 7 7
A  XXIIXXIII  XXIIXXIII
A  ZZZZIIIII  ZZZZIIIII
A  ZZIIZZIII  ZZIIZZIII
A  XXXXIIIII  XXXXIIIII
C  XIXIXIXII  YIIYYIYXX
C  IIIIIIIZZ  XIIXXIXIX
C  ZIZIZIZIZ  IIIIIIIXX
C  YIYIYIYZZ  XIIXXIXXX
"""

FIXTURES = {"table1": TABLE1, "table2": TABLE2, "table3": TABLE3}

# headline facts the reproduce command checks against
EXPECTED = {
    "table1": {"distance": 3, "gates": 17, "steps": 5},
    "table2": {"distance": 3, "steps": 7},
    "table3": {"distance": 3, "steps": 4, "m": 2},
}


def fixture_text(name: str) -> str:
    try:
        return FIXTURES[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}") from None
