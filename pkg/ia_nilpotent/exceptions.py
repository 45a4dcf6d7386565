# Copyright (c) 2025, ia_nilpotent Contributors
# For license information, please see license.txt

"""
Error hierarchy for ia_nilpotent

Every error raised on purpose by the library derives from IaNilpotentError,
so callers (and the CLI) can catch one type.
"""

from typing import Optional


class IaNilpotentError(Exception):
    """Base class for all library errors"""


class SettingsError(IaNilpotentError):
    """Invalid settings value"""


class ParseError(IaNilpotentError):
    """Malformed descriptor, word, presentation or group file"""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.reason = message
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column or 1}: {message}"
        super().__init__(message)


class UnknownGenerator(ParseError):
    """A word mentions a generator the presentation does not declare"""


class CollectionBudgetExceeded(IaNilpotentError):
    """Collection did not reach a normal form within the rewrite budget"""


class ConsistencyError(IaNilpotentError):
    """A presentation or table does not define a group of the claimed order"""


class CapExceeded(IaNilpotentError):
    """A group or search space is larger than the configured cap"""


class NotAbelian(IaNilpotentError):
    pass


class NotNormal(IaNilpotentError):
    pass


class NotNilpotent(IaNilpotentError):
    pass


class NotClass2(IaNilpotentError):
    """Input has nilpotency class 3 or more"""


class ThetaNotHomomorphism(IaNilpotentError):
    pass


class YNotCentral(IaNilpotentError):
    pass


class InadmissibleTriple(IaNilpotentError):
    """A (G/Z, G/G', G') triple no class-2 group can have"""

    def __init__(self, constraint: str, detail: str = ""):
        self.constraint = constraint
        super().__init__(f"{constraint}: {detail}" if detail else constraint)


class PreconditionError(IaNilpotentError):
    """A check was called on input outside its hypotheses"""


class NotApplicable(PreconditionError):
    """The hypotheses of a theorem do not hold for this input"""


class TheoremViolation(IaNilpotentError):
    """A computed fact contradicts a proved statement"""


class RecordError(IaNilpotentError):
    """A record does not match its doctype declaration"""
