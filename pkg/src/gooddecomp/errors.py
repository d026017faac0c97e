"""Exceptions shared by the solvers and the CLI."""

from __future__ import annotations


class PreconditionError(ValueError):
    """Input graph is outside a solver's class.

    ``code`` is one of PRECONDITION_DISCONNECTED, PRECONDITION_NOT_SUBCUBIC,
    PRECONDITION_NOT_CLAWFREE; ``witness`` carries e.g. the claw found.
    """

    def __init__(self, code: str, message: str, witness=None):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.witness = witness


class TheoremViolation(AssertionError):
    """A branch the induction rules out was reached.

    Either a bug or a counterexample to the claw-free construction; carries the
    offending graph in graph6 form and the trace up to that point.
    """

    code = "THEOREM_VIOLATION"

    def __init__(self, message: str, graph6: str | None = None, trace=None):
        detail = message
        if graph6 is not None:
            detail += f" [graph6 {graph6}]"
        super().__init__(f"THEOREM_VIOLATION: {detail}")
        self.graph6 = graph6
        self.trace = trace
