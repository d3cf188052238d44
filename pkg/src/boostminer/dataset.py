"""Transaction databases and the support / closure queries over them.

Itemsets are ``frozenset`` of dense integer item ids.  Tidsets are kept
internally as Python ints used as bitsets (bit ``t`` set when transaction
``t`` contains the itemset), which makes intersection a single ``&`` and
support a popcount.
"""

import io
import re
from functools import reduce


class DataError(ValueError):
    """Raised for unreadable or unusable transaction data."""


_TOKEN_SPLIT = re.compile(r"[\s,]+")


def canonical(itemset):
    """Strictly ascending tuple of item ids; the canonical itemset order."""
    return tuple(sorted(itemset))


class TransactionDB:
    """Immutable transaction store with per-item occurrence bitsets.

    Parameters
    ----------
    transactions : list of iterable of str
        One entry per transaction; duplicate items collapse.
    item_names : list of str, optional
        Fixes the item id order.  When omitted, items are interned in
        order of first appearance.
    """

    def __init__(self, transactions, item_names=None):
        names = list(item_names) if item_names is not None else []
        index = {name: i for i, name in enumerate(names)}
        if len(index) != len(names):
            raise DataError("duplicate item names")
        rows = []
        for raw in transactions:
            row = set()
            for token in raw:
                token = str(token)
                if token not in index:
                    if item_names is not None:
                        raise DataError(f"unknown item {token!r}")
                    index[token] = len(names)
                    names.append(token)
                row.add(index[token])
            rows.append(frozenset(row))
        if not rows:
            raise DataError("dataset has no transactions")

        self.item_names = tuple(names)
        self._index = index
        self.transactions = tuple(rows)
        self.n = len(rows)
        self.all_tids = (1 << self.n) - 1
        item_tids = [0] * len(names)
        for tid, row in enumerate(rows):
            bit = 1 << tid
            for item in row:
                item_tids[item] |= bit
        self.item_tids = tuple(item_tids)
        self.universe = frozenset(range(len(names)))

    @classmethod
    def from_file(cls, path):
        try:
            with open(path, encoding="utf-8") as fh:
                return load_transactions(fh)
        except OSError as exc:
            raise DataError(f"cannot read {path}: {exc}") from exc

    def __repr__(self):
        return f"TransactionDB(n={self.n}, items={len(self.item_names)})"

    @property
    def n_items(self):
        return len(self.item_names)

    # -- naming -------------------------------------------------------------

    def item_id(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown item {name!r}") from None

    def itemset(self, names):
        """Itemset from item names; a plain string is split into characters
        only when it is not itself an item name."""
        if isinstance(names, str):
            if names in self._index:
                names = [names]
            else:
                names = [tok for tok in _TOKEN_SPLIT.split(names) if tok]
                if len(names) == 1 and names[0] not in self._index:
                    names = list(names[0])
        return frozenset(self.item_id(name) for name in names)

    def names(self, itemset):
        """Item names of ``itemset``, sorted by name."""
        return sorted(self.item_names[i] for i in itemset)

    def label(self, itemset):
        return "".join(self.names(itemset)) if all(
            len(self.item_names[i]) == 1 for i in itemset
        ) else " ".join(self.names(itemset))

    # -- queries ------------------------------------------------------------

    def _check(self, itemset):
        for item in itemset:
            if not 0 <= item < len(self.item_names):
                raise KeyError(f"unknown item id {item!r}")

    def tidmask(self, itemset):
        """Bitset of transactions containing ``itemset``."""
        self._check(itemset)
        return reduce(lambda acc, i: acc & self.item_tids[i], itemset, self.all_tids)

    def support(self, itemset):
        """Number of transactions containing ``itemset``; ``n`` for the empty set."""
        return self.tidmask(itemset).bit_count()

    def tidset(self, itemset):
        """Ascending transaction ids of the transactions containing ``itemset``."""
        return mask_to_tids(self.tidmask(itemset))

    def closure_of_mask(self, tids):
        """Items common to every transaction in the bitset ``tids``.

        An empty bitset yields the whole universe (intersection over an
        empty family).
        """
        return frozenset(
            i for i, occ in enumerate(self.item_tids) if occ & tids == tids
        )

    def closure(self, itemset):
        return self.closure_of_mask(self.tidmask(itemset))

    def is_closed(self, itemset):
        itemset = frozenset(itemset)
        return self.closure(itemset) == itemset

    def is_free(self, itemset):
        """True when every maximal proper subset has strictly larger support."""
        itemset = frozenset(itemset)
        s = self.support(itemset)
        return all(self.support(itemset - {i}) > s for i in itemset)


def mask_to_tids(mask):
    tids = []
    while mask:
        low = mask & -mask
        tids.append(low.bit_length() - 1)
        mask ^= low
    return tuple(tids)


def load_transactions(source, format="basket"):
    """Read a basket file: one transaction per nonempty line.

    Tokens are separated by whitespace or commas; lines starting with
    ``#`` are comments.  ``source`` is a text stream or a string holding
    the file contents.
    """
    if format != "basket":
        raise ValueError(f"unsupported format {format!r}")
    if isinstance(source, str):
        source = io.StringIO(source)
    rows = []
    try:
        for line in source:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            rows.append([tok for tok in _TOKEN_SPLIT.split(line) if tok])
    except (OSError, UnicodeDecodeError) as exc:
        raise DataError(f"cannot read transactions: {exc}") from exc
    return TransactionDB(rows)
