"""Parameter-free mining: closures stream into the lattice, closure-based
rules are generated per consequent, and both the support threshold and
the boost bound adjust themselves along the way.

Support is raised by the miner whenever its heap outgrows the limits.
The boost bound starts at 23/20 and is lowered when the lifts of
single-antecedent rules keep decreasing below it; those lifts equal
the closure-based boost of the rule, so they are a cheap probe of how
much boost the data actually shows.  Consequent nodes whose support
ratio does not exceed the current bound cannot yield a rule above it,
so they are held back and only released if the bound drops.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from .bases import bstar_rules_for
from .lattice import ClosureLattice
from .miner import ClosureMiner, MinerConfig
from .novelty import cl_boost_value, lift
from .rules import Rule, rank_key
from .values import as_fraction

logger = logging.getLogger(__name__)

EXPAND, HOLD, RELEASE = "expand", "hold", "release"


@dataclass
class AutoConfig:
    """Constants of the self-tuning loop.

    ``trend_length`` consecutive strictly decreasing recorded lifts count
    as a decreasing trend; the bound then moves to
    ``keep * b + (1 - keep) * last_lift``, never below ``boost_floor``.
    """

    confidence_floor: Fraction = Fraction(2, 3)
    initial_boost: Fraction = Fraction(23, 20)
    boost_floor: Fraction = Fraction(21, 20)
    keep: Fraction = Fraction(4, 5)
    trend_length: int = 3
    top_k: int = 50
    miner: MinerConfig = field(default_factory=MinerConfig)

    def __post_init__(self):
        for name in ("confidence_floor", "initial_boost", "boost_floor", "keep"):
            setattr(self, name, as_fraction(getattr(self, name)))
        if not 1 < self.boost_floor <= self.initial_boost:
            raise ValueError("need 1 < boost_floor <= initial_boost")
        if not 0 <= self.keep < 1:
            raise ValueError("keep must lie in [0, 1)")
        if self.trend_length < 2:
            raise ValueError("trend_length must be at least 2")


@dataclass
class AutoState:
    boost_b: Fraction
    boost_floor: Fraction = Fraction(21, 20)
    keep: Fraction = Fraction(4, 5)
    trend_length: int = 3
    lift_trace: list = field(default_factory=list)
    held: dict = field(default_factory=dict)
    tau_history: list = field(default_factory=list)

    @classmethod
    def from_config(cls, config):
        return cls(config.initial_boost, config.boost_floor, config.keep, config.trend_length)

    def decreasing(self):
        tail = self.lift_trace[-self.trend_length:]
        return len(tail) == self.trend_length and all(a > b for a, b in zip(tail, tail[1:]))


def observe_lift(state, value):
    """Record a single-antecedent lift below the bound and lower the bound
    on a decreasing trend.  Returns True when the bound changed."""
    value = as_fraction(value)
    if value >= state.boost_b:
        return False
    state.lift_trace.append(value)
    if not state.decreasing():
        return False
    new_b = max(state.boost_floor, state.keep * state.boost_b + (1 - state.keep) * value)
    if new_b >= state.boost_b:
        return False
    state.boost_b = new_b
    return True


def hold_or_release(state, key, sigma):
    """Disposition of a consequent node with support ratio ``sigma``.

    Held nodes come back as ``RELEASE`` once the bound falls below their
    ratio; the hold store is updated in place.
    """
    if sigma > state.boost_b:
        return RELEASE if state.held.pop(key, None) is not None else EXPAND
    state.held[key] = sigma
    return HOLD


@dataclass
class AutoResult:
    rules: list
    boost_b: Fraction
    tau: int
    tau_history: list
    log: list
    n_closures: int
    n_held: int
    lattice: object = None


class _Run:
    def __init__(self, db, config):
        self.db = db
        self.config = config
        self.state = AutoState.from_config(config)
        self.lattice = ClosureLattice(db)
        self.miner = ClosureMiner(db, config.miner)
        self.generated = {}  # node index -> (tau at generation, rules)
        self.log = []

    def note(self, message, echo=True):
        self.log.append(message)
        if echo:
            logger.info(message)

    @property
    def tau(self):
        return self.miner.tau

    def sigma(self, idx):
        return self.lattice.support_ratio(idx, self.tau)

    def dispose(self, idx):
        if self.lattice.nodes[idx].support <= self.tau:
            return
        if hold_or_release(self.state, idx, self.sigma(idx)) != HOLD:
            self.expand(idx)

    def expand(self, idx):
        rules = bstar_rules_for(self.lattice, idx, self.tau, self.config.confidence_floor)
        self.generated[idx] = (self.tau, rules)
        lowered = False
        for rule in rules:
            if self._probe(rule):
                lowered = True
        if lowered:
            self.release()

    def _probe(self, rule):
        x = rule.antecedent
        if len(x) != 1 or self.db.support(x) >= self.db.n:
            return False
        if not observe_lift(self.state, lift(self.db, rule)):
            return False
        self.note(f"BOOST LOWERED to {float(self.state.boost_b):.4f}")
        return True

    def release(self):
        for idx in sorted(self.state.held):
            if idx in self.state.held and self.state.held[idx] > self.state.boost_b:
                hold_or_release(self.state, idx, self.state.held[idx])
                self.expand(idx)

    def run(self):
        awaiting = set()
        seen_raises = 1
        for node in self.miner:
            history = self.miner.tau_history
            for seq, tau in history[seen_raises:]:
                self.note(f"TAU RAISED to {tau} at closure #{seq}", echo=False)
            seen_raises = len(history)
            idx = self.lattice.add_node(node)
            # the first successor to arrive has the largest support,
            # which fixes the support ratio of each predecessor
            for p in self.lattice.preds[idx]:
                if p in awaiting:
                    awaiting.discard(p)
                    self.dispose(p)
            awaiting.add(idx)
        for seq, tau in self.miner.tau_history[seen_raises:]:
            self.note(f"TAU RAISED to {tau} at closure #{seq}", echo=False)
        for idx in sorted(awaiting):
            self.dispose(idx)
        return self.finish()

    def finish(self):
        tau, state = self.tau, self.state
        self.lattice.tau = tau
        # ratios may only grow with tau; give held nodes a last chance
        for idx in sorted(state.held):
            state.held[idx] = self.sigma(idx)
        for idx in sorted(state.held):
            if self.lattice.nodes[idx].support > tau and state.held[idx] > state.boost_b:
                del state.held[idx]
                self.generated[idx] = (None, None)
        scored = []
        for idx in sorted(self.generated):
            if self.lattice.nodes[idx].support <= tau:
                continue
            gen_tau, rules = self.generated[idx]
            if gen_tau != tau:
                rules = bstar_rules_for(self.lattice, idx, tau, self.config.confidence_floor)
            for rule in rules:
                value = cl_boost_value(self.db, rule, self.lattice, tau)
                if value > state.boost_b:
                    scored.append((rule, value))
        scored.sort(key=lambda rv: rank_key(self.db, *rv))
        state.tau_history = list(self.miner.tau_history)
        n_held = sum(1 for idx in state.held if self.lattice.nodes[idx].support > tau)
        self.note(
            f"DONE closures={len(self.lattice)} tau={tau} boost={float(state.boost_b):.4f} "
            f"held={n_held} rules={min(len(scored), self.config.top_k)}"
        )
        return AutoResult(
            rules=scored[: self.config.top_k],
            boost_b=state.boost_b,
            tau=tau,
            tau_history=state.tau_history,
            log=self.log,
            n_closures=len(self.lattice),
            n_held=n_held,
            lattice=self.lattice,
        )


def run_parameterfree(db, config=None):
    """Mine the top closure-based-boost rules of ``db`` without user
    thresholds.  Returns an :class:`AutoResult`."""
    return _Run(db, config or AutoConfig()).run()


__all__ = [
    "AutoConfig", "AutoState", "AutoResult", "Rule", "observe_lift",
    "hold_or_release", "run_parameterfree", "EXPAND", "HOLD", "RELEASE",
]
