"""Signed Paulis, stabilizer codes, syndromes.

Walks through the basic vocabulary: building operators from strings,
checking commutation, computing syndromes against a code, and asking for
a code's minimum distance by exhaustive enumeration.
"""

from stabswitch import analysis, catalog, pauli
from stabswitch.pauli import PauliOp

# Operators read left to right from qubit 1 and carry a sign.
a = PauliOp.from_string("-YXXYIZZ")
b = PauliOp.from_string("ZZZZIII")
print(f"{a} has weight {a.weight} and support {a.support}")
print(f"{a} and {b} commute? {a.commutes(b)}")
print(f"their product is {a * b}")

# The catalog ships the usual small codes.
steane = catalog.STEANE7
print(f"\nsteane7 is a [[{steane.n},{steane.k}]] code with generators:")
for g in steane.gens:
    print("  ", g)

# A single X error flags exactly the Z-type checks that touch its qubit.
err = PauliOp.from_string("IXIIIII")
print(f"\nsyndrome of {err}: {pauli.syndrome(steane, err)}")

# Minimum distance by brute-force enumeration (weight 1, then 2, ...).
rep = analysis.code_distance(steane, cap=3)
print(f"distance of steane7: {rep.distance} (witness {rep.witness})")

# The five-qubit code and a random permutation of it have the same distance.
five = catalog.PERFECT5
shuffled = catalog.perm(five, "(1 2 3 4 5)")
print(f"perfect5 distance: {analysis.code_distance(five, cap=3).distance}")
print(f"cycled perfect5 distance: {analysis.code_distance(shuffled, cap=3).distance}")
