"""Exception types shared across the package."""


class SchemaError(ValueError):
    """A category/group/functor description is malformed or incomplete."""


class InvalidInput(ValueError):
    """An argument refers to unknown labels or violates a precondition."""


class AxiomViolation(RuntimeError):
    """A construction produced data violating a categorical axiom.

    Carries the offending diagram instance so reports can name it.
    """

    def __init__(self, check: str, instance=None, detail: str = ""):
        self.check = check
        self.instance = instance
        self.detail = detail
        loc = f" at {instance!r}" if instance is not None else ""
        extra = f": {detail}" if detail else ""
        super().__init__(f"{check}{loc}{extra}")


class SearchOverflow(RuntimeError):
    """An exhaustive search would exceed the configured resource bound."""
