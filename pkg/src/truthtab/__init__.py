from .formats import format_rows, format_table, parse_table
from .tables import equivalent, realizes, table_of

__all__ = ['table_of', 'equivalent', 'realizes', 'parse_table', 'format_table', 'format_rows']
