"""
Result records shared by the checkers.
"""

from dataclasses import dataclass, field
from typing import Any, List, Optional, Tuple


@dataclass(frozen=True)
class Verdict:
    """
    The answer of a predicate. On a false answer, witness holds the
    lexicographically least counterexample.
    """
    holds: bool
    witness: Optional[Tuple] = None

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class Violation:
    """
    One failed axiom or identity together with its least counterexample.
    """
    axiom: str
    witness: Tuple

    def __str__(self):
        return f'{self.axiom} at {self.witness}'


@dataclass
class VerificationReport:
    """
    The outcome of an axiom or identity check.

    :param violations: One Violation per failed axiom, in check order
    :param gyrogroup: The validated Gyrogroup when the check passed
    """
    violations: List[Violation] = field(default_factory=list)
    gyrogroup: Any = None

    @property
    def passed(self):
        return len(self.violations) == 0

    def axioms(self):
        return [viol.axiom for viol in self.violations]

    def find(self, axiom):
        for viol in self.violations:
            if viol.axiom == axiom:
                return viol
        return None
