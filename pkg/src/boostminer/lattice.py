"""Incremental Hasse diagram over closures arriving by decreasing support."""

from .miner import ClosureMiner, MinerConfig
from .values import INF, quotient


class ClosureLattice:
    """Closed itemsets linked to their immediate closed predecessors.

    Nodes must be added in non-increasing support order, which is what
    :class:`~boostminer.miner.ClosureMiner` produces.  Predecessors are
    found with a border algorithm: intersect the new closure with every
    current maximal node and keep the maximal intersections.
    """

    def __init__(self, db=None):
        self.db = db
        self.nodes = []
        self.index = {}
        self.preds = []
        self.succs = []
        self._border = set()
        self.tau = None

    def __len__(self):
        return len(self.nodes)

    def __contains__(self, itemset):
        return itemset in self.index

    def __iter__(self):
        return iter(self.nodes)

    def add_node(self, node):
        """Insert ``node`` and link it; returns its index."""
        itemset = node.itemset
        if itemset in self.index:
            raise ValueError(f"closure {sorted(itemset)} already present")
        if self.nodes and node.support > self.nodes[-1].support:
            raise ValueError("nodes must arrive in non-increasing support order")
        if self.db is not None and self.db.closure(itemset) != itemset:
            raise ValueError(f"{sorted(itemset)} is not closed")

        meets = {itemset & self.nodes[b].itemset for b in self._border}
        preds = []
        for m in sorted(meets, key=len, reverse=True):
            if not any(m < self.nodes[p].itemset for p in preds):
                preds.append(self.index[m])

        idx = len(self.nodes)
        self.nodes.append(node)
        self.index[itemset] = idx
        self.preds.append(sorted(preds))
        self.succs.append([])
        for p in preds:
            self.succs[p].append(idx)
        self._border = {b for b in self._border if not self.nodes[b].itemset < itemset}
        self._border.add(idx)
        return idx

    def node(self, itemset):
        return self.nodes[self.index[itemset]]

    def _idx(self, key):
        return key if isinstance(key, int) else self.index[frozenset(key)]

    def support_ratio(self, key, tau=0):
        """Support over the largest support among frequent proper closed
        supersets; ``INF`` when there is none.

        Only immediate successors need checking, since support is antitone.
        Until a node has a successor its ratio is provisional.
        """
        idx = self._idx(key)
        best = max(
            (self.nodes[s].support for s in self.succs[idx] if self.nodes[s].support > tau),
            default=None,
        )
        if best is None:
            return INF
        return quotient(self.nodes[idx].support, best)

    def ancestors(self, key, min_support=None):
        """Indices of all closed proper subsets; with ``min_support``,
        the walk stops at nodes whose support exceeds it."""
        start = self._idx(key)
        seen = set()
        stack = list(self.preds[start])
        while stack:
            p = stack.pop()
            if p in seen:
                continue
            if min_support is not None and self.nodes[p].support > min_support:
                continue
            seen.add(p)
            stack.extend(self.preds[p])
        return seen

    def edges(self):
        return [(self.nodes[p].itemset, n.itemset)
                for i, n in enumerate(self.nodes) for p in self.preds[i]]

    def to_dot(self, db=None):
        db = db or self.db
        name = (lambda s: db.label(s) or "{}") if db else (lambda s: ",".join(map(str, sorted(s))) or "{}")
        lines = ["digraph closures {", "  rankdir=BT;"]
        for i, n in enumerate(self.nodes):
            lines.append(f'  n{i} [label="{name(n.itemset)} ({n.support})"];')
        for i, ps in enumerate(self.preds):
            lines.extend(f"  n{p} -> n{i};" for p in ps)
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_lattice(db, tau=0, config=None):
    """Mine every closure with support > ``tau`` and link them.

    Without a ``config`` the heap is unbounded, so ``tau`` stays fixed.
    """
    cfg = config or MinerConfig.unlimited(tau)
    lattice = ClosureLattice(db)
    miner = ClosureMiner(db, cfg)
    for node in miner:
        lattice.add_node(node)
    lattice.tau = miner.tau
    return lattice
