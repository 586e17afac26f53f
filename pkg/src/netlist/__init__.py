from .emitters import emit_dot, emit_json, parse_json
from .lowering import lower, simulate

__all__ = ['lower', 'simulate', 'emit_dot', 'emit_json', 'parse_json']
