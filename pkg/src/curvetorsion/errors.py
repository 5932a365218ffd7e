"""Shared error types for the verification pipeline."""


class OracleError(RuntimeError):
    """Hard failure of the exact graded oracle.

    Raised for cutoff violations, unstable truncation windows, graded
    containment violations, and disagreement between independent routes.
    These are never swallowed: a computation that cannot certify its own
    truncation must not return a number.
    """


class FormulaNotApplicable(ValueError):
    """A closed-form length formula was invoked outside its hypotheses."""
