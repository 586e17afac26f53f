import enum
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple, Union

Label = Optional[Union[str, int]]


class GateKind(enum.Enum):
    INPUT = "INPUT"
    CONST = "CONST"
    ROT = "ROT"
    ALPHA = "ALPHA"
    BETA = "BETA"
    GAMMA = "GAMMA"

    @property
    def operand_count(self) -> int:
        return _OPERAND_COUNTS[self]

    @property
    def is_operator(self) -> bool:
        return self not in (GateKind.INPUT, GateKind.CONST)


_OPERAND_COUNTS = {
    GateKind.INPUT: 0,
    GateKind.CONST: 0,
    GateKind.ROT: 1,
    GateKind.ALPHA: 2,
    GateKind.BETA: 2,
    GateKind.GAMMA: 2,
}


@dataclass(frozen=True)
class Gate:
    id: int
    kind: GateKind
    operands: Tuple[int, ...] = ()
    label: Label = None

    @property
    def key(self) -> Tuple[GateKind, Tuple[int, ...], Label]:
        """Structural identity used for hash-consing."""
        return self.kind, self.operands, self.label

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"id": self.id, "kind": self.kind, "operands": list(self.operands)}
        if self.label is not None:
            data["label"] = self.label
        return data


@dataclass(frozen=True)
class Netlist:
    """Topologically numbered gate DAG with named outputs"""
    gates: Tuple[Gate, ...]
    outputs: Dict[str, int] = field(default_factory=dict)

    @property
    def gate_count(self) -> int:
        return len(self.gates)

    @property
    def operator_count(self) -> int:
        return sum(1 for gate in self.gates if gate.kind.is_operator)

    @property
    def input_names(self) -> Tuple[str, ...]:
        return tuple(sorted(g.label for g in self.gates if g.kind is GateKind.INPUT))

    def outputs_by_gate(self) -> Dict[int, Tuple[str, ...]]:
        marked: Dict[int, Tuple[str, ...]] = {}
        for name in sorted(self.outputs):
            gate_id = self.outputs[name]
            marked[gate_id] = marked.get(gate_id, ()) + (name,)
        return marked

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready form; gate kinds are left as enums for the encoder."""
        return {
            "gates": [gate.to_dict() for gate in self.gates],
            "outputs": {name: self.outputs[name] for name in sorted(self.outputs)},
        }
