"""Frequent closed itemsets in non-increasing support order.

A best-first variant of ChARM-style closure enumeration: every emitted
closure is extended by one item at a time, the closures of those
extensions go to a max-support heap, and the heap always yields the
largest-support closure not yet emitted.  Because emission order follows
support, raising the support threshold mid-run never invalidates what
was emitted before; that is how resource pressure is absorbed.
"""

import heapq
import logging
from dataclasses import dataclass, field

from .dataset import canonical, mask_to_tids

logger = logging.getLogger(__name__)


@dataclass
class MinerConfig:
    """Support floor and heap limits.

    ``initial_support`` is an absolute count; closures must have support
    strictly above the threshold in force.  The heap overflows when any of
    its length, its estimated size in bytes, or the total length of its
    tidsets exceeds the matching limit.
    """

    initial_support: int = 5
    max_heap_len: int = 10_000
    max_heap_bytes: int = 256 * 1024 * 1024
    max_tidlist_total: int = 2_000_000
    bytes_per_tid: int = 16

    def __post_init__(self):
        if self.initial_support < 0:
            raise ValueError("initial_support must be non-negative")
        for name in ("max_heap_len", "max_heap_bytes", "max_tidlist_total", "bytes_per_tid"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    @classmethod
    def unlimited(cls, initial_support=0):
        big = 1 << 62
        return cls(initial_support, big, big, big)


@dataclass(frozen=True)
class ClosedNode:
    itemset: frozenset
    support: int
    tids: int = field(repr=False)
    seqno: int

    @property
    def tidset(self):
        return mask_to_tids(self.tids)


class ClosureMiner:
    """Lazy iterator over the frequent closures of ``db``.

    The threshold history is available as ``tau_history``: a list of
    ``(seqno, tau)`` pairs, where ``seqno`` counts the closures emitted
    when the threshold took that value.
    """

    def __init__(self, db, config=None):
        self.db = db
        self.config = config or MinerConfig()
        self.tau = self.config.initial_support
        self.tau_history = [(0, self.tau)]
        self.pending = []
        self.pending_keys = set()
        self.pending_tids = 0
        self.emitted = set()
        self.n_emitted = 0
        self.n_evicted = 0
        self._started = False

    def __iter__(self):
        if self._started:
            raise RuntimeError("a ClosureMiner can only be iterated once")
        self._started = True
        return self._run()

    def _run(self):
        db = self.db
        if db.n > self.tau:
            self._push(db.closure_of_mask(db.all_tids), db.all_tids)
        while self.pending:
            neg_supp, _, itemset, tids = heapq.heappop(self.pending)
            self.pending_keys.discard(itemset)
            self.pending_tids += neg_supp
            if -neg_supp <= self.tau:
                continue
            node = ClosedNode(itemset, -neg_supp, tids, self.n_emitted)
            self.n_emitted += 1
            self.emitted.add(itemset)
            self.expand(node)
            yield node

    def _push(self, itemset, tids):
        supp = tids.bit_count()
        heapq.heappush(self.pending, (-supp, canonical(itemset), itemset, tids))
        self.pending_keys.add(itemset)
        self.pending_tids += supp

    def expand(self, node):
        """Queue the closures of every one-item extension of ``node`` that
        stays above the threshold; returns the newly queued itemsets."""
        db = self.db
        base = node.itemset
        ext = []
        for i, occ in enumerate(db.item_tids):
            if i in base:
                continue
            t = node.tids & occ
            c = t.bit_count()
            if c > self.tau:
                ext.append((c, i, t))
        seen = set()
        added = []
        for c, i, t in ext:
            # tau may have risen while this node was being expanded
            if t in seen or c <= self.tau:
                continue
            seen.add(t)
            # items whose extension tidset contains t; all of them are in ext
            closure = base.union(j for _, j, t2 in ext if t2 & t == t)
            if closure in self.emitted or closure in self.pending_keys:
                continue
            self._push(closure, t)
            added.append(closure)
            self.maybe_raise_threshold()
        return added

    def _overflow(self, count, tid_total):
        cfg = self.config
        return (
            count > cfg.max_heap_len
            or tid_total > cfg.max_tidlist_total
            or tid_total * cfg.bytes_per_tid > cfg.max_heap_bytes
        )

    def maybe_raise_threshold(self):
        """Raise ``tau`` just enough for the surviving heap to fit the limits.

        Entries with support at or below the new threshold are dropped for
        good.  Returns the (possibly unchanged) threshold.
        """
        if not self._overflow(len(self.pending), self.pending_tids):
            return self.tau
        supports = sorted((-e[0] for e in self.pending), reverse=True)
        new_tau = supports[0]
        count = total = 0
        k = 0
        while k < len(supports):
            s = supports[k]
            j = k
            while j < len(supports) and supports[j] == s:
                j += 1
            group = j - k
            if self._overflow(count + group, total + group * s):
                new_tau = s
                break
            count += group
            total += group * s
            k = j
        else:  # pragma: no cover - overflow guarantees an early break
            return self.tau
        new_tau = max(new_tau, self.tau)
        survivors = [e for e in self.pending if -e[0] > new_tau]
        self.n_evicted += len(self.pending) - len(survivors)
        for e in self.pending:
            if -e[0] <= new_tau:
                self.pending_keys.discard(e[2])
        heapq.heapify(survivors)
        self.pending = survivors
        self.pending_tids = sum(-e[0] for e in survivors)
        if new_tau != self.tau:
            self.tau = new_tau
            self.tau_history.append((self.n_emitted, new_tau))
            logger.info("TAU RAISED to %d at closure #%d", new_tau, self.n_emitted)
        return self.tau


def mine_closures(db, config=None):
    """Iterate the frequent closed itemsets of ``db`` by decreasing support."""
    return iter(ClosureMiner(db, config))
