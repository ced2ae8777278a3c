"""
Author: Antlampas
CC BY-SA 4.0
https://creativecommons.org/licenses/by-sa/4.0/
"""

class GuardExceededError(RuntimeError):
    """
    Raised when an exhaustive enumeration would exceed the active size guard.
    The message states the enumeration size, the guard and how to lift it.
    """
    def __init__(self,what,size,guard,override=None):
        self.what     = what
        self.size     = size
        self.guard    = guard
        self.override = override
        message = f"{what} needs {size} steps, above the guard {guard}"
        if override:
            message += f" (use {override} to raise it)"
        super().__init__(message)

class ContractViolationError(ValueError):
    """
    Raised when a mathematical precondition on the input does not hold.
    """
    pass

class HypothesisError(ValueError):
    """
    Raised when the extension degree b is smaller than 2.
    """
    def __init__(self,b):
        self.b = b
        super().__init__(f"extension degree b={b} is not allowed: the census requires b > 1")

class CriterionMismatchError(RuntimeError):
    """
    Raised when two independent oracles disagree on the same input.
    """
    pass
