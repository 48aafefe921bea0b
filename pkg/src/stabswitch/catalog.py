"""Built-in codes and the permutation combinator used by the CLI.

Catalog conventions: the Steane code in CSS X/Z form with the usual
binary-counting check supports, the five-qubit code as cyclic shifts of
XZZXI, and Shor's code as weight-2 Z checks plus two weight-6 X checks.
Permutations are written in cycle notation over 1-indexed qubits,
e.g. "(34)" or "(1 2 3)(45)"; digits may be separated by spaces or
commas (required once indices pass 9).
"""

from __future__ import annotations

import os
import re

from .pauli import PauliOp, StabilizerCode, parse_code


STEANE7 = StabilizerCode.from_strings(
    [
        "IIIXXXX",
        "IXXIIXX",
        "XIXIXIX",
        "IIIZZZZ",
        "IZZIIZZ",
        "ZIZIZIZ",
    ]
)

PERFECT5 = StabilizerCode.from_strings(
    [
        "XZZXI",
        "IXZZX",
        "XIXZZ",
        "ZXIXZ",
    ]
)

SHOR9 = StabilizerCode.from_strings(
    [
        "ZZIIIIIII",
        "IZZIIIIII",
        "IIIZZIIII",
        "IIIIZZIII",
        "IIIIIIZZI",
        "IIIIIIIZZ",
        "XXXXXXIII",
        "IIIXXXXXX",
    ]
)

CATALOG: dict[str, StabilizerCode] = {
    "steane7": STEANE7,
    "perfect5": PERFECT5,
    "shor9": SHOR9,
}

# advertised minimum distances, confirmed by the test suite
CATALOG_DISTANCE = {"steane7": 3, "perfect5": 3, "shor9": 3}


def parse_cycles(text: str, n: int) -> list[int]:
    """Cycle notation -> permutation as a list p with p[i] = image of i (0-based)."""
    text = text.strip()
    if not re.fullmatch(r"(\(\s*\d+(?:[\s,]+\d+)*\s*\))+", text):
        raise ValueError(f"bad cycle notation: {text!r}")
    perm = list(range(n))
    for cycle_body in re.findall(r"\(([^)]*)\)", text):
        if re.search(r"[\s,]", cycle_body):
            entries = [int(t) for t in re.split(r"[\s,]+", cycle_body.strip())]
        else:
            entries = [int(ch) for ch in cycle_body.strip()]
        if any(not 1 <= e <= n for e in entries):
            raise ValueError(f"cycle entry out of range 1..{n}: {cycle_body!r}")
        if len(set(entries)) != len(entries):
            raise ValueError(f"repeated entry in cycle {cycle_body!r}")
        for i, e in enumerate(entries):
            perm[e - 1] = entries[(i + 1) % len(entries)] - 1
    return perm


def permute_code(code: StabilizerCode, perm: list[int]) -> StabilizerCode:
    """Relabel qubits: qubit i of the input becomes qubit perm[i]."""
    if sorted(perm) != list(range(code.n)):
        raise ValueError("not a permutation of the code's qubits")
    gens = []
    for g in code.gens:
        x = g.x.copy()
        z = g.z.copy()
        xn = x.copy()
        zn = z.copy()
        for i, p in enumerate(perm):
            xn[p] = x[i]
            zn[p] = z[i]
        gens.append(PauliOp(xn, zn, g.sign))
    return StabilizerCode(code.n, tuple(gens))


def perm(code: StabilizerCode, cycles: str) -> StabilizerCode:
    return permute_code(code, parse_cycles(cycles, code.n))


_PERM_RE = re.compile(r"perm\(\s*([^,]+?)\s*,\s*(.+?)\s*\)$")


def resolve(spec: str) -> StabilizerCode:
    """Resolve a code reference: catalog name, perm(name, cycles), or a
    path to a code file (text or JSON)."""
    spec = spec.strip()
    match = _PERM_RE.fullmatch(spec)
    if match:
        return perm(resolve(match.group(1)), match.group(2))
    if spec in CATALOG:
        return CATALOG[spec]
    if os.path.exists(spec):
        with open(spec, "r", encoding="utf-8") as fh:
            return parse_code(fh.read())
    raise KeyError(f"unknown code {spec!r} (not a catalog name, perm(...), or file)")
