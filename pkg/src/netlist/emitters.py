"""
Netlist interchange formats: Graphviz DOT for viewing and a JSON schema

    {"gates": [{"id", "kind", "operands", "label"?}], "outputs": {name: id}}

that reads back to an identical netlist.
"""
import json
from typing import Any, Dict, List, Tuple

import graphviz

from ..models.netlist import Gate, GateKind, Netlist
from ..utils.exceptions import NetlistFormatError
from ..utils.json_encoder import NetlistEncoder
from ..utils.validators import is_valid_identifier, is_valid_trit

GATE_LABELS = {
    GateKind.ROT: "ROT",
    GateKind.ALPHA: "α",
    GateKind.BETA: "β",
    GateKind.GAMMA: "γ",
}
GATE_KEYS = {"id", "kind", "operands", "label"}


def _node_id(gate_id: int) -> str:
    return f"g{gate_id}"


def gate_label(gate: Gate) -> str:
    if gate.kind.is_operator:
        return GATE_LABELS[gate.kind]
    return str(gate.label)


def emit_dot(netlist: Netlist) -> str:
    """DOT text with one node per gate and edges from operands to gates."""
    dot = graphviz.Digraph(name="netlist")
    marked = netlist.outputs_by_gate()
    for gate in netlist.gates:
        attrs = {}
        if gate.id in marked:
            attrs = {"peripheries": "2", "xlabel": ",".join(marked[gate.id])}
        dot.node(_node_id(gate.id), label=gate_label(gate), **attrs)
    for gate in netlist.gates:
        for operand in gate.operands:
            dot.edge(_node_id(operand), _node_id(gate.id))
    return dot.source


def emit_json(netlist: Netlist) -> str:
    return json.dumps(netlist.to_dict(), indent=2, cls=NetlistEncoder)


def _reject_duplicate_keys(pairs: List[Tuple[str, Any]]) -> Dict[str, Any]:
    data: Dict[str, Any] = {}
    for key, value in pairs:
        if key in data:
            raise NetlistFormatError(f"Duplicate key '{key}'")
        data[key] = value
    return data


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _parse_gate(index: int, raw: Any) -> Gate:
    path = f"$.gates[{index}]"
    if not isinstance(raw, dict):
        raise NetlistFormatError("Gate must be an object", path)
    unknown = sorted(set(raw) - GATE_KEYS)
    if unknown:
        raise NetlistFormatError(f"Unknown field '{unknown[0]}'", path)
    for required in ("id", "kind", "operands"):
        if required not in raw:
            raise NetlistFormatError(f"Missing field '{required}'", path)

    if not _is_int(raw["id"]) or raw["id"] != index:
        raise NetlistFormatError(f"Expected id {index}, got {raw['id']!r}", f"{path}.id")
    try:
        kind = GateKind(raw["kind"])
    except ValueError:
        raise NetlistFormatError(f"Unknown gate kind {raw['kind']!r}", f"{path}.kind")

    operands = raw["operands"]
    if not isinstance(operands, list) or len(operands) != kind.operand_count:
        raise NetlistFormatError(f"{kind.value} takes {kind.operand_count} operands", f"{path}.operands")
    for position, operand in enumerate(operands):
        if not _is_int(operand) or not 0 <= operand < index:
            raise NetlistFormatError(
                f"Operand must be the id of an earlier gate, got {operand!r}", f"{path}.operands[{position}]")

    label = raw.get("label")
    label_path = f"{path}.label"
    if kind is GateKind.INPUT and not is_valid_identifier(label):
        raise NetlistFormatError(f"INPUT needs a variable name label, got {label!r}", label_path)
    if kind is GateKind.CONST and not is_valid_trit(label):
        raise NetlistFormatError(f"CONST needs a 0, 1 or 2 label, got {label!r}", label_path)
    if kind.is_operator and "label" in raw:
        raise NetlistFormatError(f"{kind.value} gates take no label", label_path)
    return Gate(index, kind, tuple(operands), label)


def parse_json(text: str) -> Netlist:
    """Read and validate netlist JSON; errors name the offending JSON path."""
    try:
        data = json.loads(text, object_pairs_hook=_reject_duplicate_keys)
    except json.JSONDecodeError as e:
        raise NetlistFormatError(f"Invalid JSON: {e.msg} at line {e.lineno} column {e.colno}")
    if not isinstance(data, dict):
        raise NetlistFormatError("Netlist must be an object")
    unknown = sorted(set(data) - {"gates", "outputs"})
    if unknown:
        raise NetlistFormatError(f"Unknown field '{unknown[0]}'")
    if not isinstance(data.get("gates"), list):
        raise NetlistFormatError("Expected a list of gates", "$.gates")
    if not isinstance(data.get("outputs"), dict):
        raise NetlistFormatError("Expected an object of outputs", "$.outputs")

    gates = []
    seen: Dict[Tuple, int] = {}
    for index, raw in enumerate(data["gates"]):
        gate = _parse_gate(index, raw)
        if gate.key in seen:
            raise NetlistFormatError(f"Duplicates gate {seen[gate.key]}", f"$.gates[{index}]")
        seen[gate.key] = index
        gates.append(gate)

    outputs: Dict[str, int] = {}
    for name, gate_id in data["outputs"].items():
        path = f"$.outputs.{name}"
        if not is_valid_identifier(name):
            raise NetlistFormatError(f"Invalid output name {name!r}", path)
        if not _is_int(gate_id) or not 0 <= gate_id < len(gates):
            raise NetlistFormatError(f"Unknown gate id {gate_id!r}", path)
        outputs[name] = gate_id

    reachable = set(outputs.values())
    for gate in reversed(gates):
        if gate.id in reachable:
            reachable.update(gate.operands)
    for gate in gates:
        if gate.id not in reachable:
            raise NetlistFormatError(f"Gate {gate.id} is not reachable from any output", f"$.gates[{gate.id}]")
    return Netlist(tuple(gates), {name: outputs[name] for name in sorted(outputs)})
