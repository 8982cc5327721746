"""Exception types shared across the package."""


class SoftIdealError(ValueError):
    """Base class for every error raised by softideal."""


class UnknownNameError(SoftIdealError):
    def __init__(self, kind: str, name: str):
        super().__init__(f"unknown {kind} {name!r}")
        self.kind = kind
        self.name = name


class ContextMismatchError(SoftIdealError):
    """Operands live over different universes or parameter sets."""


class NotASubsetError(SoftIdealError):
    """A soft set is not contained in the ambient soft set."""


class PointOutsideSpaceError(SoftIdealError):
    pass


class CapacityError(SoftIdealError):
    """A configured size bound was exceeded."""


class AxiomViolation(SoftIdealError):
    """A family of soft sets fails one of the topology axioms.

    ``axiom`` is one of ``"(i)"``..``"(iv)"`` or ``"subset"``; ``witness`` holds the
    offending open set(s).
    """

    def __init__(self, axiom: str, message: str, witness: tuple = ()):
        super().__init__(f"axiom {axiom} violated: {message}")
        self.axiom = axiom
        self.witness = witness


class TrivialIdealError(SoftIdealError):
    """The generators cover all but finitely many naturals."""


class PreconditionError(SoftIdealError):
    pass


class InfiniteSetError(SoftIdealError):
    pass
