from ..synth.permutations import reconstruction
from .census import monadic_census
from .laws import check_laws
from .library import all_cells, cell, cell_names, circuit, circuit_names
from .verification import verify_all

__all__ = ['cell', 'circuit', 'cell_names', 'circuit_names', 'all_cells', 'reconstruction',
           'verify_all', 'monadic_census', 'check_laws']
