from .evaluator import evaluate, evaluate_columns, free_vars, postorder
from .parser import parse
from .printer import pretty_print
from .transform import substitute

__all__ = ['parse', 'pretty_print', 'evaluate', 'evaluate_columns', 'free_vars', 'postorder', 'substitute']
