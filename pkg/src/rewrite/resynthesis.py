"""
Cone resynthesis.

A sub-expression over few variables is re-derived from its truth table and
replaced when the new form is strictly cheaper. One-variable functions come
from a precomputed library of small forms. For more variables the cheaper of
two constructions is used:

* a greedy selector-cube cover, where payload-2 cubes cover the 2-rows and
  payload-0 cubes cover the 0-rows (they may overlap 2-rows, which dominate
  under GAMMA);
* a cofactor split along one variable, GAMMA over `selector(v = i) + g_i`.

Neither construction is minimal.
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from src import config
from ..expr.evaluator import postorder
from ..expr.printer import pretty_print
from ..expr.transform import substitute
from ..models.expr import Alpha, Beta, Binary, Const, Expr, Gamma, Rotate, Var, rotated
from ..models.trit import PermOp
from ..models.truth_table import TruthTable
from ..synth.permutations import reconstruction
from ..truthtab.tables import realizes, table_of
from ..utils.logger import CustomLogger
from .canonical import build_chain, flatten
from .cost import cost

logger = CustomLogger("Resynthesis")

TEMPLATE_X = Var('x')
TEMPLATE_Y = Var('y')
FULL_MASK = 0b111
CONSTANT_STEPS = tuple((operator, Const(c)) for operator in (Gamma, Alpha, Beta) for c in range(3))


def form_key(e: Expr) -> Tuple[int, str]:
    """Cheapest first, ties broken by printed text."""
    return cost(e), pretty_print(e)


def _keep_cheapest(library: Dict[Tuple[int, ...], Expr], e: Expr, variables: Sequence[str]) -> None:
    outputs = table_of(e, variables).outputs
    if outputs not in library or form_key(e) < form_key(library[outputs]):
        library[outputs] = e


@lru_cache(maxsize=None)
def monadic_library() -> Dict[Tuple[int, ...], Expr]:
    """Cheapest known form over `x` for each of the 27 one-variable tables."""
    library: Dict[Tuple[int, ...], Expr] = {}
    rotations = [rotated(TEMPLATE_X, times) for times in range(3)]
    forms: List[Expr] = [Const(c) for c in range(3)] + rotations
    for m in rotations:
        for first, c1 in CONSTANT_STEPS:
            inner = first(m, c1)
            forms.append(inner)
            forms.extend(second(inner, c2) for second, c2 in CONSTANT_STEPS)
    forms.extend(reconstruction(p) for p in PermOp)
    for form in forms:
        _keep_cheapest(library, form, ('x',))
    return library


@lru_cache(maxsize=None)
def dyadic_library() -> Dict[Tuple[int, ...], Expr]:
    """Single-operator forms over `x` and `y` with rotated inputs and output."""
    library: Dict[Tuple[int, ...], Expr] = {}
    for a, b, outer in product(range(3), repeat=3):
        for operator in (Alpha, Beta, Gamma):
            form = rotated(operator(rotated(TEMPLATE_X, a), rotated(TEMPLATE_Y, b)), outer)
            _keep_cheapest(library, form, ('x', 'y'))
    return library


@lru_cache(maxsize=None)
def _zero_set_library() -> Dict[FrozenSet[int], Expr]:
    """Cheapest one-variable form with exactly the given zero set, any other values."""
    library: Dict[FrozenSet[int], Expr] = {}
    for outputs, form in monadic_library().items():
        zeros = frozenset(v for v in range(3) if outputs[v] == 0)
        if zeros not in library or form_key(form) < form_key(library[zeros]):
            library[zeros] = form
    return library


def _monadic_form(outputs: Tuple[int, ...], name: str) -> Expr:
    return substitute(monadic_library()[outputs], {'x': Var(name)})


def _exact_literal(zeros: FrozenSet[int], name: str) -> Expr:
    """0 on `zeros`, 1 elsewhere."""
    return _monadic_form(tuple(0 if v in zeros else 1 for v in range(3)), name)


def _mask_values(mask: int) -> FrozenSet[int]:
    return frozenset(v for v in range(3) if mask & (1 << v))


@dataclass(frozen=True)
class _Cube:
    masks: Tuple[int, ...]
    rows: FrozenSet[int]
    core: Expr
    estimate: int


def _cube_core(masks: Tuple[int, ...], names: Sequence[str]) -> Tuple[Expr, int]:
    """{0,1}-valued expression that is 0 exactly on the cube, with its estimated cost."""
    constrained = [(name, _mask_values(mask)) for name, mask in zip(names, masks) if mask != FULL_MASK]
    if not constrained:
        return Const(0), 0
    exact = [_exact_literal(zeros, name) for name, zeros in constrained]
    exact_estimate = sum(cost(literal) for literal in exact) + len(exact) - 1
    loose = [substitute(_zero_set_library()[zeros], {'x': Var(name)}) for name, zeros in constrained]
    has_two = any(2 in table_of(literal).outputs for literal in loose)
    loose_estimate = sum(cost(literal) for literal in loose) + len(loose) - 1 + (1 if has_two else 0)
    if exact_estimate <= loose_estimate:
        return build_chain(Beta, exact), exact_estimate
    core = build_chain(Beta, loose)
    return (Alpha(core, Const(1)) if has_two else core), loose_estimate


def _greedy_cover(targets: Set[int], allowed: Set[int], names: Sequence[str]) -> List[Expr]:
    arity = len(names)
    cubes = []
    for masks in product(range(1, FULL_MASK + 1), repeat=arity):
        rows = frozenset(
            sum(v * 3 ** (arity - 1 - k) for k, v in enumerate(inputs))
            for inputs in product(*(sorted(_mask_values(m)) for m in masks)))
        if rows <= allowed:
            core, estimate = _cube_core(masks, names)
            cubes.append(_Cube(masks, rows, core, estimate))
    uncovered = set(targets)
    chosen = []
    while uncovered:
        best = min(cubes, key=lambda cube: (-len(cube.rows & uncovered), cube.estimate, cube.masks))
        chosen.append(best.core)
        uncovered -= best.rows
    return chosen


def cube_cover(table: TruthTable) -> Expr:
    """GAMMA of a payload-2 group and payload-0 cubes covering `table`."""
    twos = {i for i, v in enumerate(table.outputs) if v == 2}
    zeros = {i for i, v in enumerate(table.outputs) if v == 0}
    terms = []
    if twos:
        terms.append(Beta(build_chain(Gamma, _greedy_cover(twos, twos, table.var_names)), Const(2)))
    if zeros:
        terms.extend(_greedy_cover(zeros, zeros | twos, table.var_names))
    return build_chain(Gamma, terms) if terms else Const(1)


def cofactor_form(table: TruthTable, position: int) -> Expr:
    """GAMMA over `selector(v = i) + g_i` for the cofactors g_i along one variable."""
    name = table.var_names[position]
    terms = []
    for value in range(3):
        sub = table.cofactor(position, value)
        g = best_form(sub.outputs, sub.var_names)
        if g == Const(1):
            continue
        selector = _exact_literal(frozenset((value,)), name)
        terms.append(selector if g == Const(0) else Beta(selector, g))
    return build_chain(Gamma, terms) if terms else Const(1)


@lru_cache(maxsize=4096)
def best_form(outputs: Tuple[int, ...], var_names: Tuple[str, ...]) -> Expr:
    """Cheapest form this module can build for a table."""
    if len(set(outputs)) == 1:
        return Const(outputs[0])
    table = TruthTable(len(var_names), outputs, var_names)
    for position in range(table.arity):
        cofactors = [table.cofactor(position, value) for value in range(3)]
        if cofactors[0].outputs == cofactors[1].outputs == cofactors[2].outputs:
            return best_form(cofactors[0].outputs, cofactors[0].var_names)
    if table.arity == 1:
        return _monadic_form(outputs, var_names[0])
    candidates = [cube_cover(table)]
    candidates.extend(cofactor_form(table, position) for position in range(table.arity))
    if table.arity == 2 and outputs in dyadic_library():
        candidates.append(substitute(dyadic_library()[outputs],
                                     {'x': Var(var_names[0]), 'y': Var(var_names[1])}))
    return min(candidates, key=form_key)


def _cheaper_form(e: Expr, names: FrozenSet[str]) -> Optional[Expr]:
    table = table_of(e, sorted(names))
    candidate = best_form(table.outputs, table.var_names)
    if cost(candidate) < cost(e) and realizes(candidate, table):
        return candidate
    return None


def _variables_by_node(e: Expr) -> Dict[Expr, FrozenSet[str]]:
    variables: Dict[Expr, FrozenSet[str]] = {}
    for node in postorder(e):
        if isinstance(node, Var):
            variables[node] = frozenset((node.name,))
        else:
            variables[node] = frozenset().union(*(variables[c] for c in node.children()))
    return variables


def resynthesize_cones(e: Expr, max_vars: Optional[int] = None) -> Expr:
    """Replace every maximal sub-expression over at most `max_vars` variables by a cheaper equivalent."""
    limit = max_vars or config.RESYNTHESIS_MAX_VARS
    variables = _variables_by_node(e)
    done: Dict[Expr, Expr] = {}

    def visit(node: Expr) -> Expr:
        if isinstance(node, (Const, Var)):
            return node
        if node in done:
            return done[node]
        names = variables[node]
        result = _cheaper_form(node, names) if len(names) <= limit else None
        if result is None:
            if isinstance(node, Rotate):
                result = Rotate(visit(node.child))
            else:
                result = build_chain(type(node), _visit_operands(node))
        done[node] = result
        return result

    def _visit_operands(node: Binary) -> List[Expr]:
        # Operands over the same few variables are re-derived together
        groups: Dict[FrozenSet[str], List[Expr]] = {}
        for operand in flatten(node):
            groups.setdefault(variables[operand], []).append(operand)
        operands = []
        for names, group in groups.items():
            if len(group) > 1 and len(names) <= limit:
                replacement = _cheaper_form(build_chain(type(node), group), names)
                if replacement is not None:
                    operands.append(replacement)
                    continue
            operands.extend(visit(operand) for operand in group)
        return operands

    result = visit(e)
    if result != e:
        logger.debug(f"Resynthesized cones: cost {cost(e)} -> {cost(result)}")
    return result

