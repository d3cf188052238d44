from dataclasses import dataclass, field
from fractions import Fraction

from .dataset import canonical
from .values import INF


@dataclass(frozen=True)
class Rule:
    """Association rule ``X -> XY`` stored with disjoint sides.

    ``consequent`` holds only the ``Y`` part; ``full`` gives ``XY``.
    ``support`` is the absolute support of ``XY`` and ``confidence`` the
    exact quotient ``s(XY) / s(X)``.
    """

    antecedent: frozenset
    consequent: frozenset
    support: int = field(compare=False)
    confidence: Fraction = field(compare=False)

    def __post_init__(self):
        if not self.consequent:
            raise ValueError("rule consequent must be nonempty")
        if self.antecedent & self.consequent:
            raise ValueError("rule sides must be disjoint")

    @classmethod
    def of(cls, db, antecedent, consequent):
        """Build a rule measured on ``db``; antecedent items are dropped
        from the consequent."""
        x = frozenset(antecedent)
        y = frozenset(consequent) - x
        sx = db.support(x)
        if sx == 0:
            raise ZeroDivisionError("rule antecedent has zero support")
        sxy = db.support(x | y)
        return cls(x, y, sxy, Fraction(sxy, sx))

    @property
    def full(self):
        return self.antecedent | self.consequent

    def sort_key(self):
        return (canonical(self.antecedent), canonical(self.consequent))

    def describe(self, db):
        lhs = db.label(self.antecedent) or "{}"
        return f"{lhs} -> {db.label(self.consequent)}"


def rank_key(db, rule, value):
    """Ordering for reports: measure descending (infinite first), then
    confidence, support, and rule text."""
    infinite = value is INF
    return (not infinite, 0 if infinite else -value, -rule.confidence, -rule.support, rule.describe(db))


def rule_set_labels(db, rules):
    """``{"A -> BC", ...}``; handy for comparing rule sets in tests and logs."""
    return {r.describe(db) for r in rules}
