class TernaryError(Exception):
    """Base exception class for ternary-toolkit errors"""
    def __init__(self, message: str = None):
        self.message = message
        super().__init__(self.message)

class ConfigError(TernaryError):
    """Raised when there's an error in configuration"""
    pass

class ValidationError(TernaryError):
    """Raised when a value fails validation"""
    pass

class ParseError(ValidationError):
    """Raised when expression text is malformed"""
    def __init__(self, message: str = None, offset: int = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} at byte {offset}"
        super().__init__(message)

    def __eq__(self, other):
        return isinstance(other, ParseError) and str(self) == str(other)

    __hash__ = Exception.__hash__

class UnboundVariableError(ValidationError):
    """Raised when an assignment misses a free variable"""
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"Unbound variable '{name}'")

class ArityLimitError(ValidationError):
    """Raised when exhaustive enumeration would exceed the arity limit"""
    def __init__(self, arity: int, limit: int):
        self.arity = arity
        self.limit = limit
        super().__init__(f"Arity {arity} exceeds the limit of {limit} variables")

class TableFormatError(ValidationError):
    """Raised when truth-table text is malformed"""
    def __init__(self, message: str = None, line: int = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)

class TableLengthError(TableFormatError):
    """Raised when a table has the wrong number of outputs or row inputs"""
    pass

class DuplicateRowError(TableFormatError):
    """Raised when a row is listed twice"""
    pass

class MissingRowError(TableFormatError):
    """Raised when a row-format table leaves rows undefined"""
    pass

class InvalidCharacterError(TableFormatError):
    """Raised when a table holds a character that is not a trit"""
    pass

class NetlistFormatError(ValidationError):
    """Raised when netlist JSON violates the schema"""
    def __init__(self, message: str = None, path: str = "$"):
        self.path = path
        super().__init__(f"{path}: {message}")

class UnknownCellError(ValidationError):
    """Raised when a library cell name is not known"""
    def __init__(self, name: str, known=()):
        self.name = name
        message = f"Unknown cell '{name}'"
        if known:
            message += f" (known: {', '.join(known)})"
        super().__init__(message)

class RuleError(TernaryError):
    """Raised when a rewrite rule is ill-formed or unsound"""
    def __init__(self, message: str = None, rule: str = None):
        self.rule = rule
        super().__init__(message)

class CommandError(TernaryError):
    """Raised when there's an error interpreting a command"""
    pass
