"""Fault-tolerant measurement gadgets for conversion steps.

Each step's incoming generator is measured with a verified cat state of
size equal to the generator's support: one controlled Pauli from each
cat wire onto its data qubit, an X-basis readout of the cat, and a
classically conditioned Pauli correction that fires when the readout
parity disagrees with the generator's declared sign.  Cat preparation
and verification are treated as given resources; the multi-qubit gate
count tallies exactly the cat-to-data controlled Paulis.
"""

from __future__ import annotations

from dataclasses import dataclass

from .pauli import PauliOp


@dataclass(frozen=True)
class Gadget:
    """One measure-and-correct step compiled to a cat-state gadget."""

    step_index: int
    measure: PauliOp
    correct: PauliOp
    cat_size: int
    controls: tuple[tuple[int, int, str], ...]  # (cat wire, data qubit, letter)
    correction_letters: tuple[tuple[int, str], ...]
    target_sign_bit: int  # 0 for +1, 1 for -1

    def to_json(self) -> dict:
        ops: list[dict] = [{"op": "prepare_cat", "size": self.cat_size}]
        for cat, data, letter in self.controls:
            ops.append({"op": "cpauli", "cat": cat, "data": data, "letter": letter})
        ops.append({"op": "measure_cat_x"})
        ops.append(
            {
                "op": "cond_pauli",
                "condition": "parity!=target",
                "target_sign": self.target_sign_bit,
                "letters": {str(q): letter for q, letter in self.correction_letters},
            }
        )
        return {
            "step": self.step_index,
            "measure": self.measure.to_string(),
            "cat_size": self.cat_size,
            "ops": ops,
        }


@dataclass(frozen=True)
class CircuitBundle:
    gadgets: tuple[Gadget, ...]

    @property
    def total_multiqubit_gates(self) -> int:
        return sum(g.cat_size for g in self.gadgets)

    def to_json(self) -> dict:
        return {
            "total_multiqubit_gates": self.total_multiqubit_gates,
            "gadgets": [g.to_json() for g in self.gadgets],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "CircuitBundle":
        gadgets = []
        for gdoc in doc["gadgets"]:
            measure = PauliOp.from_string(gdoc["measure"])
            ops = gdoc["ops"]
            controls = tuple(
                (op["cat"], op["data"], op["letter"]) for op in ops if op["op"] == "cpauli"
            )
            cond = next(op for op in ops if op["op"] == "cond_pauli")
            letters = tuple(sorted((int(q), letter) for q, letter in cond["letters"].items()))
            correct_str = ["I"] * measure.n
            for q, letter in letters:
                correct_str[q] = letter
            gadgets.append(
                Gadget(
                    step_index=gdoc["step"],
                    measure=measure,
                    correct=PauliOp.from_string("".join(correct_str)),
                    cat_size=gdoc["cat_size"],
                    controls=controls,
                    correction_letters=letters,
                    target_sign_bit=cond["target_sign"],
                )
            )
        bundle = cls(tuple(gadgets))
        if bundle.total_multiqubit_gates != doc["total_multiqubit_gates"]:
            raise ValueError("gate count in document disagrees with its gadgets")
        return bundle


def emit_step(index: int, step) -> Gadget:
    support = step.measure.support
    controls = tuple(
        (wire, qubit, step.measure.letter(qubit)) for wire, qubit in enumerate(support)
    )
    letters = tuple((q, step.correct.letter(q)) for q in step.correct.support)
    return Gadget(
        step_index=index,
        measure=step.measure,
        correct=step.correct,
        cat_size=len(support),
        controls=controls,
        correction_letters=letters,
        target_sign_bit=0 if step.measure.sign > 0 else 1,
    )


def emit(path) -> CircuitBundle:
    """Compile every step of a path to a gadget, in step order."""
    return CircuitBundle(tuple(emit_step(i, s) for i, s in enumerate(path.steps)))


def gate_count(path) -> int:
    """Total cat-to-data controlled-Pauli count: the summed support size
    of all measured generators."""
    return sum(step.measure.weight for step in path.steps)
