"""Exception types shared across the package.

The CLI maps DomainError (and click usage errors) to exit code 2 and
verification failures to exit code 1, so raising the right class here is
part of the external contract.
"""


class DomainError(ValueError):
    """An argument violates a documented precondition."""


class BudgetExceededError(DomainError):
    """An enumeration would exceed the documented size budget."""


class BracketExhaustedError(RuntimeError):
    """A root bracket could not be established within its growth cap."""


class InapplicableBoundError(DomainError):
    """A bound's applicability condition fails for these inputs."""
