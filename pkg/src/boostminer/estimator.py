"""Scikit-learn style front end."""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .autotune import AutoConfig, run_parameterfree
from .bases import bstar_basis, representative_rules
from .lattice import build_lattice
from .miner import MinerConfig
from .novelty import BoostFilter, Thresholds, boost_value, cl_boost_value
from .rules import rank_key
from .validation import (
    check_boost, check_choice, check_confidence, check_support, check_transactions,
)

BASES = ("rr", "bstar")
ALGORITHMS = ("alg1", "alg2", "alg3")


class BoostMiner(TransformerMixin, BaseEstimator):
    """Mine association rules and keep the ones with high confidence boost.

    Parameters
    ----------
    support : float or int, optional
        Support threshold; a fraction in ``[0, 1)`` is taken relative to the
        number of transactions (rounded up), an integer as an absolute count.
        Rules need support strictly above it.  ``None`` selects the
        parameter-free mode, where support and boost tune themselves.
    confidence : float, default=0.8
        Confidence threshold (inclusive).  Ignored in parameter-free mode.
    boost : float, optional
        Keep only rules whose boost exceeds this bound (> 1).  ``None``
        keeps the whole basis.
    basis : {'rr', 'bstar'}, default='rr'
        Representative rules (plain boost is reported) or the closed-set
        basis (closure-based boost is reported).
    algorithm : {'alg1', 'alg2', 'alg3'}, default='alg1'
        Boost filter: ``alg1`` tests plain boost, ``alg2`` and ``alg3``
        closure-based boost (``alg3`` needs ``basis='bstar'``).
    top_k : int, optional
        Keep the best ``top_k`` rules by reported boost.  Parameter-free
        mode defaults to 50.

    Attributes
    ----------
    db_ : TransactionDB
    rules_ : list of Rule
    boosts_ : list
        Reported boost of each rule (``Fraction`` or ``INF``).
    tau_ : int
        Absolute support threshold in force at the end.
    boost_ : Fraction or None
        Final boost bound.
    tau_history_ : list of (int, int)
    lattice_ : ClosureLattice or None
    """

    def __init__(self, support=None, confidence=0.8, boost=None, basis="rr",
                 algorithm="alg1", top_k=None):
        self.support = support
        self.confidence = confidence
        self.boost = boost
        self.basis = basis
        self.algorithm = algorithm
        self.top_k = top_k

    def fit(self, X, y=None):
        db = check_transactions(X)
        self.db_ = db
        if self.support is None:
            return self._fit_auto(db)
        tau = check_support(self.support, db.n)
        gamma = check_confidence(self.confidence)
        check_choice("basis", self.basis, BASES)
        check_choice("algorithm", self.algorithm, ALGORITHMS)
        if self.algorithm == "alg3" and self.basis != "bstar":
            raise ValueError("alg3 needs closed antecedents: use basis='bstar'")

        lattice = build_lattice(db, tau)
        if self.basis == "rr":
            rules = representative_rules(db, lattice, tau, gamma)
            measure = lambda r: boost_value(db, r, tau)
        else:
            rules = bstar_basis(db, lattice, tau, gamma)
            measure = lambda r: cl_boost_value(db, r, lattice, tau)
        if self.boost is not None:
            f = BoostFilter(db, Thresholds(tau, gamma, check_boost(self.boost)), lattice)
            test = {"alg1": f.boost_exceeds, "alg2": f.cl_boost_exceeds,
                    "alg3": f.cl_boost_exceeds_alt}[self.algorithm]
            rules = [r for r in rules if test(r)]
        scored = sorted(((r, measure(r)) for r in rules), key=lambda rv: rank_key(db, *rv))
        if self.top_k is not None:
            scored = scored[: self.top_k]
        self._store(scored, tau, None if self.boost is None else check_boost(self.boost),
                    [(0, tau)], lattice)
        self.log_ = []
        return self

    def _fit_auto(self, db):
        if self.boost is not None:
            raise ValueError("boost cannot be set in parameter-free mode")
        config = AutoConfig(top_k=self.top_k or 50, miner=MinerConfig())
        result = run_parameterfree(db, config)
        self._store(result.rules, result.tau, result.boost_b, result.tau_history, result.lattice)
        self.log_ = list(result.log)
        return self

    def _store(self, scored, tau, boost, history, lattice):
        self.rules_ = [r for r, _ in scored]
        self.boosts_ = [v for _, v in scored]
        self.tau_ = tau
        self.boost_ = boost
        self.tau_history_ = history
        self.lattice_ = lattice
        self.n_features_in_ = self.db_.n_items

    def _rows(self, X):
        check_is_fitted(self, "rules_")
        # plain arrays carry no column names; assume the fitted item order
        plain = _is_matrix(X) and not hasattr(X, "columns")
        db = check_transactions(X, self.db_.item_names if plain else None)
        index = {name: i for i, name in enumerate(self.db_.item_names)}
        rows = []
        for row in db.transactions:
            names = (db.item_names[i] for i in row)
            rows.append(frozenset(index[n] for n in names if n in index))
        return rows

    def transform(self, X):
        """Indicator matrix: entry ``(t, r)`` is 1 when transaction ``t``
        contains the antecedent of rule ``r``."""
        rows = self._rows(X)
        out = np.zeros((len(rows), len(self.rules_)), dtype=np.int8)
        for t, row in enumerate(rows):
            for j, rule in enumerate(self.rules_):
                if rule.antecedent <= row:
                    out[t, j] = 1
        return out

    def predict(self, X):
        """Items each transaction lacks but some firing rule concludes."""
        out = []
        for row in self._rows(X):
            items = set()
            for rule in self.rules_:
                if rule.antecedent <= row:
                    items |= rule.consequent - row
            out.append(sorted(self.db_.item_names[i] for i in items))
        return out

    def describe_rules(self):
        """``(antecedent names, consequent names, confidence, support, boost)``
        per rule, in report order."""
        check_is_fitted(self, "rules_")
        db = self.db_
        return [
            (db.names(r.antecedent), db.names(r.consequent), r.confidence, r.support, v)
            for r, v in zip(self.rules_, self.boosts_)
        ]


def _is_matrix(X):
    return hasattr(X, "columns") or (hasattr(X, "shape") and len(X.shape) == 2)
