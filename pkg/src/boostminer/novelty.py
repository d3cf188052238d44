"""Interestingness measures and boost-threshold filters.

All arithmetic is exact: supports are integers and every ratio is a
``Fraction`` (or ``INF``), so threshold comparisons never depend on
rounding.  Comparisons are cross-multiplied where a denominator could be
zero.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .bases import bstar_basis, implication_rules, min_max_rules, representative_rules
from .lattice import build_lattice
from .rules import Rule
from .values import INF, as_fraction, quotient

WIDTH_PRESET_OFFSET = 2


@dataclass(frozen=True)
class Thresholds:
    """Support count ``tau`` (strict), confidence ``gamma`` (inclusive)
    and boost bound ``b``; ratios are stored as exact fractions."""

    tau: int = 0
    gamma: Fraction = Fraction(1, 2)
    b: Fraction = Fraction(23, 20)

    def __post_init__(self):
        object.__setattr__(self, "gamma", as_fraction(self.gamma))
        object.__setattr__(self, "b", as_fraction(self.b))
        if int(self.tau) != self.tau or self.tau < 0:
            raise ValueError(f"tau must be a non-negative count, got {self.tau!r}")
        if not 0 < self.gamma <= 1:
            raise ValueError(f"gamma must lie in (0, 1], got {self.gamma}")
        if self.b <= 1:
            raise ValueError(f"boost bound must exceed 1, got {self.b}")

    def basis_floor(self, n):
        """Confidence used to mine the auxiliary basis: ``gamma / b``,
        never below ``1 / n`` (every rule with positive support reaches it)."""
        return max(self.gamma / self.b, Fraction(1, max(n, 1)))


def width_threshold_preset(gamma):
    """Heuristic width bound ``2 - gamma``; has no formal backing."""
    return WIDTH_PRESET_OFFSET - as_fraction(gamma)


# -- simple measures ----------------------------------------------------------


def confidence(db, rule):
    s_x = db.support(rule.antecedent)
    if s_x == 0:
        raise ZeroDivisionError("antecedent has zero support")
    return Fraction(db.support(rule.full), s_x)


def lift(db, rule):
    """``s(XY) * n / (s(X) * s(Y))``; 1 for an empty antecedent."""
    return confidence(db, rule) * db.n / db.support(rule.consequent)


def support_ratio(db, rule, lattice=None, tau=0):
    """Support of ``XY`` over the largest support of a frequent proper
    superset, ``INF`` if there is none."""
    full = rule.full
    if not db.is_closed(full):
        return Fraction(1)  # the closure is a superset of equal support
    if lattice is not None and full in lattice:
        return lattice.support_ratio(full, tau)
    s = db.support(full)
    best = max((db.support(full | {a}) for a in db.universe - full), default=0)
    return quotient(s, best) if best > tau else INF


def blocking_quotient(db, z, rule):
    """``(s(XY) - c(Z -> ZY) s(X)) / (c(Z -> ZY) s(X))``."""
    z = frozenset(z)
    predicted = Fraction(db.support(z | rule.consequent), db.support(z)) * db.support(rule.antecedent)
    return quotient(db.support(rule.full) - predicted, predicted)


def blocks(db, z, rule, b_block):
    """Whether the proper subset ``z`` of the antecedent blocks ``rule``
    at blocking threshold ``b_block``."""
    z = frozenset(z)
    if not z < rule.antecedent:
        raise ValueError("blocking set must be a proper subset of the antecedent")
    return blocking_quotient(db, z, rule) <= as_fraction(b_block)


def width(db, pool, rule, tau=0):
    """Confidence over the best confidence of a different rule in ``pool``
    that makes ``rule`` redundant.

    ``pool`` must contain every min-max rule with support above ``tau``
    regardless of confidence (e.g. ``min_max_rules(db, lattice, tau)``);
    the strongest rule making ``rule`` redundant is always one of them.
    """
    x, full = rule.antecedent, rule.full
    best = max(
        (r.confidence for r in pool
         if r.support > tau and r.antecedent <= x and full <= r.full
         and (r.antecedent, r.full) != (x, full)),
        default=None,
    )
    return INF if best is None else rule.confidence / best


def boost_value(db, rule, tau=0):
    """Exact confidence boost.

    The best competing rule either keeps ``Y`` with a strictly smaller
    antecedent (shrinking the consequent only raises confidence) or keeps
    ``X`` and adds one item to ``Y``.
    """
    x, y = rule.antecedent, rule.consequent
    best = None
    for size in range(len(x)):
        for sub in combinations(sorted(x), size):
            sub = frozenset(sub)
            c = Fraction(db.support(sub | y), db.support(sub))
            best = c if best is None or c > best else best
    s_x = db.support(x)
    for a in db.universe - rule.full:
        s_a = db.support(rule.full | {a})
        if s_a > tau:
            c = Fraction(s_a, s_x)
            best = c if best is None or c > best else best
    return INF if best is None else rule.confidence / best


def cl_boost_value(db, rule, lattice=None, tau=0):
    """Exact closure-based boost of a rule whose antecedent and full
    consequent are closed: the least of its support ratio and the ratios
    ``c(X -> XY) / c(Z -> ZY)`` over closed proper subsets ``Z`` of ``X``."""
    _require_closed(db, rule)
    lattice = lattice or build_lattice(db, tau)
    value = support_ratio(db, rule, lattice, tau)
    for z in _closed_proper_subsets(lattice, rule.antecedent):
        c_z = Fraction(db.support(z | rule.consequent), db.support(z))
        value = min(value, quotient(rule.confidence, c_z))
    return value


def _require_closed(db, rule):
    if not (db.is_closed(rule.antecedent) and db.is_closed(rule.full)):
        raise ValueError(f"{rule.describe(db)}: antecedent and full consequent must be closed")


def _closed_proper_subsets(lattice, x):
    return [lattice.nodes[i].itemset for i in sorted(lattice.ancestors(x))]


def _at_most(c, b, num, den):
    """``c <= b * num / den`` without dividing by ``den``."""
    return c * den <= b * num


# -- threshold filters --------------------------------------------------------


class BoostFilter:
    """Boost-threshold tests sharing one lattice and auxiliary bases.

    Parameters
    ----------
    db : TransactionDB
    thresholds : Thresholds
    lattice : ClosureLattice, optional
        Must hold every closure with support above ``thresholds.tau``;
        mined on first use when omitted.
    """

    def __init__(self, db, thresholds, lattice=None):
        self.db = db
        self.thresholds = thresholds
        self._lattice = lattice
        self._rr = None
        self._bstar = None

    @property
    def lattice(self):
        if self._lattice is None:
            self._lattice = build_lattice(self.db, self.thresholds.tau)
        return self._lattice

    @property
    def floor(self):
        return self.thresholds.basis_floor(self.db.n)

    @property
    def representative(self):
        if self._rr is None:
            self._rr = representative_rules(self.db, self.lattice, self.thresholds.tau, self.floor)
        return self._rr

    @property
    def bstar(self):
        """Closure-based basis at ``gamma / b`` plus the full implications
        it leaves out; rules with a non-closed antecedent need the latter."""
        if self._bstar is None:
            tau = self.thresholds.tau
            self._bstar = (bstar_basis(self.db, self.lattice, tau, self.floor)
                           + implication_rules(self.db, self.lattice, tau))
        return self._bstar

    def _check(self, rule):
        th = self.thresholds
        s_x = self.db.support(rule.antecedent)
        s_xy = self.db.support(rule.full)
        if s_xy <= th.tau:
            raise ValueError(f"{rule.describe(self.db)}: support {s_xy} not above {th.tau}")
        if Fraction(s_xy, s_x) < th.gamma:
            raise ValueError(f"{rule.describe(self.db)}: confidence below {th.gamma}")
        return Fraction(s_xy, s_x)

    def boost_exceeds(self, rule):
        """Whether the confidence boost of ``rule`` exceeds ``b``, decided
        against the representative rules at confidence ``gamma / b``."""
        db, tau, b = self.db, self.thresholds.tau, self.thresholds.b
        c = self._check(rule)
        x, y, full = rule.antecedent, rule.consequent, rule.full
        s_x = db.support(x)
        for r in self.representative:
            if not (r.antecedent <= x and y <= r.consequent):
                continue
            rest = sorted(x - r.antecedent)
            for size in range(len(rest)):
                for z in combinations(rest, size):
                    ante = r.antecedent.union(z)
                    if _at_most(c, b, db.support(ante | y), db.support(ante)):
                        return False
            for a in r.consequent - full:
                s_a = db.support(full | {a})
                if s_a > tau and _at_most(c, b, s_a, s_x):
                    return False
        return True

    def cl_boost_exceeds(self, rule):
        """Whether the closure-based boost of ``rule`` exceeds ``b``,
        decided against the closure-based basis at confidence ``gamma / b``."""
        db, tau, b = self.db, self.thresholds.tau, self.thresholds.b
        c = self._check(rule)
        x, y, full = rule.antecedent, rule.consequent, rule.full
        cl_x, cl_full = db.closure(x), db.closure(full)
        s_x = db.support(x)
        for r in self.bstar:
            if not (r.antecedent <= cl_x and y <= db.closure(r.full)):
                continue
            rest = sorted(cl_x - r.antecedent)
            for size in range(len(rest)):
                for z in combinations(rest, size):
                    ante = r.antecedent.union(z)
                    if db.closure(ante) == cl_x:
                        continue
                    num, den = self._best_with_antecedent(ante, y)
                    if _at_most(c, b, num, den):
                        return False
            for a in r.full - cl_full:
                s_a = db.support(full | {a})
                if s_a > tau and _at_most(c, b, s_a, s_x):
                    return False
        return True

    def _best_with_antecedent(self, ante, y):
        """Support pair of the most confident rule ``ante -> W`` whose
        closure covers ``y``.  Usually ``W = ante | y``; when ``y`` already
        sits inside ``ante`` the consequent must still be nonempty."""
        db = self.db
        s = db.support(ante)
        if not y <= ante:
            return db.support(ante | y), s
        if not db.is_closed(ante):
            return s, s
        best = max((db.support(ante | {a}) for a in db.universe - ante), default=0)
        return (best, s) if best > self.thresholds.tau else (0, s)

    def cl_boost_exceeds_alt(self, rule):
        """Closure-based boost test for rules with closed antecedent and
        closed full consequent, using only the lattice."""
        db, b = self.db, self.thresholds.b
        c = self._check(rule)
        _require_closed(db, rule)
        if support_ratio(db, rule, self.lattice, self.thresholds.tau) <= b:
            return False
        y = rule.consequent
        for z in _closed_proper_subsets(self.lattice, rule.antecedent):
            if _at_most(c, b, db.support(z | y), db.support(z)):
                return False
        return True


def boost_exceeds(db, rule, thresholds, lattice=None):
    return BoostFilter(db, thresholds, lattice).boost_exceeds(rule)


def cl_boost_exceeds(db, rule, thresholds, lattice=None):
    return BoostFilter(db, thresholds, lattice).cl_boost_exceeds(rule)


def cl_boost_exceeds_alt(db, lattice, rule, thresholds):
    return BoostFilter(db, thresholds, lattice).cl_boost_exceeds_alt(rule)


def min_max_pool(db, lattice, tau=0):
    """Every min-max rule above ``tau``: the pool :func:`width` needs."""
    return min_max_rules(db, lattice, tau, 0)


__all__ = [
    "Rule", "Thresholds", "BoostFilter", "confidence", "lift", "support_ratio",
    "blocking_quotient", "blocks", "width", "boost_value", "cl_boost_value",
    "boost_exceeds", "cl_boost_exceeds", "cl_boost_exceeds_alt", "min_max_pool",
    "width_threshold_preset",
]
