from .canonical import canonicalize
from .cost import cost
from .rules import lookup_rule, rule_catalog
from .simplifier import rewrite_pass, simplify

__all__ = ['canonicalize', 'cost', 'rule_catalog', 'lookup_rule', 'rewrite_pass', 'simplify']
