from .permutations import RECONSTRUCTIONS, reconstruction
from .regular_formula import SelectorTerm, selector_terms, selector_value, synthesize

__all__ = ['SelectorTerm', 'selector_terms', 'selector_value', 'synthesize', 'RECONSTRUCTIONS', 'reconstruction']
