"""Minimal generators and rule bases computed from a closure lattice.

Conventions: a rule needs support strictly above ``tau`` and confidence
at least ``gamma``; ``gamma`` is compared exactly, so pass a
``Fraction`` (floats are converted through their decimal repr).
"""

import enum
from fractions import Fraction
from itertools import combinations

from .rules import Rule
from .values import INF, as_fraction


class BasisKind(enum.Enum):
    REPRESENTATIVE = "rr"
    BSTAR = "bstar"
    MINMAX = "minmax"
    MMR = "mmr"


def minimal_transversals(edges):
    """Inclusion-minimal sets hitting every set in ``edges`` (Berge)."""
    hitting = {frozenset()}
    for edge in sorted(set(edges), key=len):
        grown = set()
        for h in hitting:
            if h & edge:
                grown.add(h)
            else:
                grown.update(h | {x} for x in edge)
        hitting = _minimal(grown)
    return hitting


def _minimal(sets):
    ordered = sorted(sets, key=len)
    kept = []
    for s in ordered:
        if not any(k <= s for k in kept):
            kept.append(s)
    return set(kept)


def minimal_generators(db, closed, lattice=None):
    """All minimal itemsets whose closure is ``closed``.

    With a lattice, a subset of ``closed`` generates it exactly when it
    escapes every immediate predecessor, so the generators are the
    minimal transversals of the faces ``closed - P``.  Without one, a
    levelwise search over subsets is used.
    """
    closed = frozenset(closed)
    if db.closure(closed) != closed:
        raise ValueError(f"{db.label(closed)!r} is not closed")
    if lattice is not None and closed in lattice:
        idx = lattice.index[closed]
        faces = [closed - lattice.nodes[p].itemset for p in lattice.preds[idx]]
        return minimal_transversals(faces)

    found = set()
    for size in range(len(closed) + 1):
        for combo in combinations(sorted(closed), size):
            g = frozenset(combo)
            if any(f <= g for f in found):
                continue
            if db.closure(g) == closed:
                found.add(g)
    return found


class _Generators:
    def __init__(self, db, lattice):
        self.db = db
        self.lattice = lattice
        self.cache = {}

    def __getitem__(self, idx):
        gens = self.cache.get(idx)
        if gens is None:
            node = self.lattice.nodes[idx]
            gens = self.cache[idx] = minimal_generators(self.db, node.itemset, self.lattice)
        return gens


def _frequent(lattice, tau):
    return [i for i, n in enumerate(lattice.nodes) if n.support > tau]


def _best_successor(lattice, idx, tau):
    return max(
        (lattice.nodes[s].support for s in lattice.succs[idx] if lattice.nodes[s].support > tau),
        default=0,
    )


def _closed_antecedents(lattice, idx, gamma):
    """Indices of closed subsets ``K`` of node ``idx`` (itself included)
    with ``s(node) / s(K) >= gamma``."""
    supp = lattice.nodes[idx].support
    limit = supp / gamma if gamma > 0 else None
    return lattice.ancestors(idx, min_support=limit) | {idx}


def min_max_rules(db, lattice, tau=0, gamma=0):
    """Rules ``G -> C`` with ``C`` closed and ``G`` a minimal generator
    (of ``cl(G)``, a closed subset of ``C``), ``G != C``."""
    gamma = as_fraction(gamma)
    gens = _Generators(db, lattice)
    out = []
    for c in _frequent(lattice, tau):
        closed = lattice.nodes[c].itemset
        supp = lattice.nodes[c].support
        for k in _closed_antecedents(lattice, c, gamma):
            conf = Fraction(supp, lattice.nodes[k].support)
            if conf < gamma:
                continue
            for g in gens[k]:
                if g != closed:
                    out.append(Rule(g, closed - g, supp, conf))
    out.sort(key=Rule.sort_key)
    return out


def representative_rules(db, lattice, tau, gamma):
    """Representative rules at confidence ``gamma``.

    Candidates are the min-max rules reaching ``gamma``.  A candidate
    ``G -> C`` is made redundant by some different rule meeting the
    thresholds exactly when either dropping one item of ``G`` keeps the
    confidence of reaching ``C`` at ``gamma``, or ``G`` reaches a frequent
    proper superset of ``C`` with confidence ``gamma``.
    """
    gamma = as_fraction(gamma)
    out = []
    for rule in min_max_rules(db, lattice, tau, gamma):
        c = lattice.index[rule.full]
        s_g = rule.support / rule.confidence
        if _best_successor(lattice, c, tau) >= gamma * s_g:
            continue
        if any(rule.support >= gamma * db.support(rule.antecedent - {g})
               for g in rule.antecedent):
            continue
        out.append(rule)
    return out


def bstar_basis(db, lattice, tau, gamma):
    """Closed-to-closed partial rules irredundant under closure-based
    redundancy at confidence ``gamma``.

    ``X -> C`` survives unless an immediate predecessor of ``X`` reaches
    ``C`` with confidence ``gamma``, or ``X`` reaches a frequent proper
    superset of ``C`` with confidence ``gamma``; every other stronger
    closed rule is dominated by one of those.
    """
    gamma = as_fraction(gamma)
    out = []
    for c in _frequent(lattice, tau):
        out.extend(bstar_rules_for(lattice, c, tau, gamma))
    out.sort(key=Rule.sort_key)
    return out


def bstar_rules_for(lattice, c, tau, gamma):
    """The rules of :func:`bstar_basis` whose full consequent is node ``c``.

    Needs every closed subset of ``c`` and, for the redundancy test, the
    largest frequent successor of ``c`` to be present already.
    """
    gamma = as_fraction(gamma)
    node = lattice.nodes[c]
    best_succ = _best_successor(lattice, c, tau)
    out = []
    for x in sorted(_closed_antecedents(lattice, c, gamma) - {c}):
        s_x = lattice.nodes[x].support
        if Fraction(node.support, s_x) < gamma or best_succ >= gamma * s_x:
            continue
        if any(node.support >= gamma * lattice.nodes[p].support for p in lattice.preds[x]):
            continue
        ante = lattice.nodes[x].itemset
        out.append(Rule(ante, node.itemset - ante, node.support, Fraction(node.support, s_x)))
    return out


def implication_rules(db, lattice, tau=0):
    """Full implications ``G -> cl(G)`` for every minimal generator ``G``
    of a frequent closure other than the closure itself.

    They complement the partial rules of :func:`bstar_basis`.
    """
    return [r for r in min_max_rules(db, lattice, tau, 1) if r.confidence == 1]


def mmr_rules(db, tau, gamma, lattice=None):
    """Minimal-antecedent, maximal-consequent rules.

    Every such rule is representative, so the representative rules are
    filtered: a rule goes when a smaller antecedent keeps ``Y`` at
    confidence ``gamma``, or one more consequent item does.
    """
    from .lattice import build_lattice

    gamma = as_fraction(gamma)
    lattice = lattice or build_lattice(db, tau)
    out = []
    for rule in representative_rules(db, lattice, tau, gamma):
        x, y, full = rule.antecedent, rule.consequent, rule.full
        s_x = db.support(x)
        dominated = False
        for size in range(len(x)):
            for sub in combinations(sorted(x), size):
                sub = frozenset(sub)
                if db.support(sub | y) >= gamma * db.support(sub):
                    dominated = True
                    break
            if dominated:
                break
        if not dominated:
            for a in db.universe - full:
                s_a = db.support(full | {a})
                if s_a > tau and s_a >= gamma * s_x:
                    dominated = True
                    break
        if not dominated:
            out.append(rule)
    return out


def compute_basis(kind, db, lattice, tau, gamma):
    kind = BasisKind(kind)
    if kind is BasisKind.REPRESENTATIVE:
        return representative_rules(db, lattice, tau, gamma)
    if kind is BasisKind.BSTAR:
        return bstar_basis(db, lattice, tau, gamma)
    if kind is BasisKind.MINMAX:
        return min_max_rules(db, lattice, tau, gamma)
    return mmr_rules(db, tau, gamma, lattice)


def mmr_boost_bounds_check(db, tau, gamma):
    """Check both boost bounds for MMR / non-MMR rules exhaustively.

    Returns a list of violation messages; it should always be empty.
    Oracle-scale databases only.
    """
    from . import oracle

    gamma = as_fraction(gamma)
    violations = []
    for rule in oracle.all_rules(db, tau):
        if rule.confidence < gamma:
            continue
        boost = oracle.brute_boost(db, tau, rule)
        by_conf = rule.confidence / gamma
        if oracle.brute_is_mmr(db, tau, gamma, rule):
            by_supp = INF if tau == 0 else Fraction(rule.support, 1) / as_fraction(tau)
            bound = min(by_supp, by_conf)
            if boost < bound:
                violations.append(f"MMR {rule.describe(db)}: boost {boost} < {bound}")
        elif boost > by_conf:
            violations.append(f"non-MMR {rule.describe(db)}: boost {boost} > {by_conf}")
    return violations
