"""Exhaustive reference implementations of every measure and basis.

Everything here follows the definitions literally by enumerating
itemsets, so it is only usable on tiny universes (see ``MAX_ITEMS``).
The production modules are checked against these functions; nothing in
this module calls into them.
"""

import weakref
from fractions import Fraction

from .rules import Rule
from .values import INF

MAX_ITEMS = 12


class OracleLimitError(ValueError):
    """The universe is too large for exhaustive enumeration."""


class _Tables:
    """Support and closure of every subset of the universe, by item mask."""

    def __init__(self, db):
        k = db.n_items
        if k > MAX_ITEMS:
            raise OracleLimitError(
                f"oracle refuses {k} items (limit {MAX_ITEMS})"
            )
        self.db = db
        self.k = k
        self.full = (1 << k) - 1
        tids = [db.all_tids] * (1 << k)
        for m in range(1, 1 << k):
            low = m & -m
            tids[m] = tids[m ^ low] & db.item_tids[low.bit_length() - 1]
        self.supp = [t.bit_count() for t in tids]
        self.clos = [to_mask(db.closure_of_mask(t)) for t in tids]

    def conf(self, x, xy):
        return Fraction(self.supp[xy], self.supp[x])


_cache = weakref.WeakKeyDictionary()


def _tables(db):
    t = _cache.get(db)
    if t is None:
        t = _cache[db] = _Tables(db)
    return t


def to_mask(itemset):
    m = 0
    for i in itemset:
        m |= 1 << i
    return m


def from_mask(m):
    return frozenset(i for i in range(m.bit_length()) if m >> i & 1)


def submasks(m):
    sub = m
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & m


def supermasks(m, full):
    for extra in submasks(full & ~m):
        yield m | extra


def _rule(t, x, y):
    return Rule(from_mask(x), from_mask(y), t.supp[x | y], t.conf(x, x | y))


def _masks(rule):
    return to_mask(rule.antecedent), to_mask(rule.consequent)


# -- itemsets -----------------------------------------------------------------


def brute_all_closed(db, tau=None):
    """Set of ``(closed itemset, support)``; with ``tau``, only support > tau."""
    t = _tables(db)
    out = set()
    for m in range(1 << t.k):
        if t.clos[m] == m and (tau is None or t.supp[m] > tau):
            out.add((from_mask(m), t.supp[m]))
    return out


def brute_minimal_generators(db, closed):
    t = _tables(db)
    c = to_mask(closed)
    gens = [g for g in submasks(c) if t.clos[g] == c]
    return {
        from_mask(g)
        for g in gens
        if not any(h != g and h & g == h for h in gens)
    }


def measured_rule(db, antecedent, consequent):
    """Rule with support and confidence read from the exhaustive tables."""
    t = _tables(db)
    x = to_mask(antecedent)
    return _rule(t, x, to_mask(consequent) & ~x)


def all_rules(db, tau):
    """Every rule ``X -> XY`` with disjoint nonempty ``Y`` and ``s(XY) > tau``."""
    t = _tables(db)
    out = []
    for xy in range(1 << t.k):
        if t.supp[xy] <= tau:
            continue
        for x in submasks(xy):
            if x != xy:
                out.append(_rule(t, x, xy ^ x))
    out.sort(key=Rule.sort_key)
    return out


# -- measures -----------------------------------------------------------------


def _quotient(conf, best):
    return INF if best is None else conf / best


def brute_support_ratio(db, tau, rule):
    t = _tables(db)
    x, y = _masks(rule)
    xy = x | y
    best = None
    for z in supermasks(xy, t.full):
        if z != xy and t.supp[z] > tau:
            best = t.supp[z] if best is None else max(best, t.supp[z])
    return INF if best is None else Fraction(t.supp[xy], best)


def brute_width(db, tau, rule):
    """Confidence over the best confidence among different rules
    ``X' -> X'Y'`` with ``X' <= X`` and ``XY <= X'Y'``."""
    t = _tables(db)
    x, y = _masks(rule)
    xy = x | y
    best = None
    for x1 in submasks(x):
        for w in supermasks(xy, t.full):
            if (x1, w) == (x, xy) or t.supp[w] <= tau:
                continue
            c = t.conf(x1, w)
            best = c if best is None or c > best else best
    return _quotient(rule.confidence, best)


def brute_boost(db, tau, rule):
    """Confidence over the best confidence among different rules
    ``X' -> X'Y'`` with ``X' <= X`` and ``Y <= Y'``."""
    t = _tables(db)
    x, y = _masks(rule)
    best = None
    for x1 in submasks(x):
        for y1 in supermasks(y, t.full & ~x1):
            if (x1, y1) == (x, y) or t.supp[x1 | y1] <= tau:
                continue
            c = t.conf(x1, x1 | y1)
            best = c if best is None or c > best else best
    return _quotient(rule.confidence, best)


def brute_cl_boost(db, tau, rule):
    """Closure-based boost: denominator rules ``X' -> X'Y'`` with
    ``X' <= cl(X)``, ``Y <= cl(X'Y')`` and a different closure pair."""
    t = _tables(db)
    x, y = _masks(rule)
    clx, clxy = t.clos[x], t.clos[x | y]
    best = None
    for x1 in submasks(clx):
        for y1 in submasks(t.full & ~x1):
            if y1 == 0:
                continue
            w = x1 | y1
            if t.supp[w] <= tau or y & t.clos[w] != y:
                continue
            if t.clos[x1] == clx and t.clos[w] == clxy:
                continue
            c = t.conf(x1, w)
            best = c if best is None or c > best else best
    return _quotient(rule.confidence, best)


def brute_lift(db, rule):
    t = _tables(db)
    x, y = _masks(rule)
    return Fraction(t.supp[x | y] * db.n, t.supp[x] * t.supp[y])


# -- bases --------------------------------------------------------------------


def brute_representative_rules(db, tau, gamma):
    """Rules with confidence >= gamma and support > tau that no different
    rule meeting both thresholds makes redundant."""
    t = _tables(db)
    out = set()
    for r in all_rules(db, tau):
        if r.confidence < gamma:
            continue
        x, y = _masks(r)
        xy = x | y
        redundant = any(
            (x1, w) != (x, xy) and w != x1
            and t.supp[w] > tau and t.conf(x1, w) >= gamma
            for x1 in submasks(x)
            for w in supermasks(xy, t.full)
        )
        if not redundant:
            out.add(r)
    return out


def brute_bstar(db, tau, gamma):
    """Partial rules with closed antecedent and closed full consequent
    that are irredundant under closure-based redundancy among all rules
    meeting the thresholds."""
    t = _tables(db)
    rules = [r for r in all_rules(db, tau) if r.confidence >= gamma]
    out = set()
    for r in rules:
        if r.confidence >= 1:
            continue
        x, y = _masks(r)
        xy = x | y
        if t.clos[x] != x or t.clos[xy] != xy:
            continue
        redundant = False
        for r1 in rules:
            x1, y1 = _masks(r1)
            w1 = x1 | y1
            if (t.clos[x1], t.clos[w1]) == (x, xy):
                continue  # closure-equivalent to r
            if x1 & x == x1 and xy & t.clos[w1] == xy:
                redundant = True
                break
        if not redundant:
            out.add(r)
    return out


def brute_is_mmr(db, tau, gamma, rule):
    t = _tables(db)
    x, y = _masks(rule)
    if rule.confidence < gamma or rule.support <= tau:
        return False
    for x1 in submasks(x):
        for y1 in supermasks(y, t.full & ~x1):
            if (x1, y1) == (x, y):
                continue
            if t.supp[x1 | y1] > tau and t.conf(x1, x1 | y1) >= gamma:
                return False
    return True


def brute_mmr(db, tau, gamma):
    return {r for r in all_rules(db, tau) if brute_is_mmr(db, tau, gamma, r)}
