from typing import Dict, List, Mapping, Tuple

from ..algebra.operators import DYADIC_TABLES, ROTATE_TABLE
from ..expr.evaluator import postorder
from ..models.expr import Alpha, Assignment, Beta, Const, Expr, Gamma, Rotate, Var
from ..models.netlist import Gate, GateKind, Label, Netlist
from ..models.trit import TRITS, Trit
from ..utils.decorators import log_timing
from ..utils.exceptions import UnboundVariableError, ValidationError
from ..utils.logger import CustomLogger
from ..utils.validators import is_valid_identifier

logger = CustomLogger("Netlist")

KIND_BY_NODE = {Rotate: GateKind.ROT, Alpha: GateKind.ALPHA, Beta: GateKind.BETA, Gamma: GateKind.GAMMA}
SYMBOL_BY_KIND = {GateKind.ALPHA: '*', GateKind.BETA: '+', GateKind.GAMMA: '@'}


class _GateBuilder:
    """Hash-consing gate allocator; ids follow creation order"""

    def __init__(self):
        self.gates: List[Gate] = []
        self.by_key: Dict[Tuple[GateKind, Tuple[int, ...], Label], int] = {}

    def intern(self, kind: GateKind, operands: Tuple[int, ...] = (), label: Label = None) -> int:
        key = (kind, operands, label)
        if key not in self.by_key:
            gate = Gate(len(self.gates), kind, operands, label)
            self.gates.append(gate)
            self.by_key[key] = gate.id
        return self.by_key[key]


@log_timing(logger)
def lower(named_exprs: Mapping[str, Expr]) -> Netlist:
    """
    Hash-consed gate DAG for several named expressions.

    Outputs are visited in name order and each expression depth-first, so a
    gate's operands always carry smaller ids. Output names must be
    identifiers, as in the JSON form.
    """
    for name in named_exprs:
        if not is_valid_identifier(name):
            raise ValidationError(f"Invalid output name {name!r}")
    builder = _GateBuilder()
    ids: Dict[Expr, int] = {}
    outputs: Dict[str, int] = {}
    for name in sorted(named_exprs):
        e = named_exprs[name]
        for node in postorder(e):
            if node in ids:
                continue
            if isinstance(node, Const):
                ids[node] = builder.intern(GateKind.CONST, label=node.value)
            elif isinstance(node, Var):
                ids[node] = builder.intern(GateKind.INPUT, label=node.name)
            else:
                operands = tuple(ids[child] for child in node.children())
                ids[node] = builder.intern(KIND_BY_NODE[type(node)], operands)
        outputs[name] = ids[e]
    netlist = Netlist(tuple(builder.gates), outputs)
    logger.debug(f"Lowered {len(outputs)} outputs to {netlist.gate_count} gates")
    return netlist


def simulate(netlist: Netlist, env: Assignment) -> Dict[str, Trit]:
    """One forward pass over the gates; returns the value of every output."""
    missing = [name for name in netlist.input_names if name not in env]
    if missing:
        raise UnboundVariableError(missing[0])
    values: List[int] = []
    for gate in netlist.gates:
        if gate.kind is GateKind.INPUT:
            values.append(Trit.of(env[gate.label]))
        elif gate.kind is GateKind.CONST:
            values.append(gate.label)
        elif gate.kind is GateKind.ROT:
            values.append(ROTATE_TABLE[values[gate.operands[0]]])
        else:
            left, right = gate.operands
            values.append(DYADIC_TABLES[SYMBOL_BY_KIND[gate.kind]][3 * values[left] + values[right]])
    return {name: TRITS[values[netlist.outputs[name]]] for name in sorted(netlist.outputs)}
