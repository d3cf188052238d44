"""Input checks shared by the estimator and the command line."""

import math
from fractions import Fraction
from numbers import Real

import numpy as np
from sklearn.utils.validation import check_array

from .dataset import DataError, TransactionDB
from .values import as_fraction


def check_transactions(X, item_names=None):
    """Coerce ``X`` to a :class:`TransactionDB`.

    Accepts a ``TransactionDB``, a list of item collections, or a binary
    matrix (array or DataFrame, one row per transaction).  Matrix columns
    are named after the DataFrame columns, ``item_names``, or their
    position.
    """
    if isinstance(X, TransactionDB):
        return X
    if hasattr(X, "columns") and item_names is None:
        item_names = [str(c) for c in X.columns]
    if _looks_like_matrix(X):
        M = check_array(X, dtype=None, ensure_all_finite=True, ensure_min_samples=1)
        if M.dtype != bool:
            if not np.isin(M, (0, 1)).all():
                raise DataError("a transaction matrix must be binary")
            M = M.astype(bool)
        names = [str(n) for n in item_names] if item_names is not None else [str(j) for j in range(M.shape[1])]
        if len(names) != M.shape[1]:
            raise DataError(f"{len(names)} item names for {M.shape[1]} columns")
        rows = [[names[j] for j in np.flatnonzero(row)] for row in M]
        return TransactionDB(rows, names)
    if isinstance(X, (str, bytes)):
        raise DataError("expected a collection of transactions, got a string")
    rows = []
    for row in X:
        if isinstance(row, str):
            raise DataError("each transaction must be a collection of items, not a string")
        rows.append(list(row))
    return TransactionDB(rows, item_names)


def _looks_like_matrix(X):
    if hasattr(X, "columns") or isinstance(X, np.ndarray):
        return True
    return hasattr(X, "shape") and len(getattr(X, "shape")) == 2


def check_support(support, n):
    """Absolute support threshold from a fraction in ``[0, 1)`` (rounded
    up against ``n``) or a non-negative integer count."""
    if isinstance(support, bool) or not isinstance(support, (Real, Fraction, str)):
        raise ValueError(f"support must be a number, got {support!r}")
    value = as_fraction(support)
    if value < 0:
        raise ValueError(f"support must be non-negative, got {support}")
    if value < 1:
        return math.ceil(value * n)
    if value.denominator != 1:
        raise ValueError(f"support {support} is neither a fraction below 1 nor a count")
    return int(value)


def check_confidence(confidence):
    value = as_fraction(confidence)
    if not 0 < value <= 1:
        raise ValueError(f"confidence must lie in (0, 1], got {confidence}")
    return value


def check_boost(boost):
    value = as_fraction(boost)
    if value <= 1:
        raise ValueError(f"boost bound must exceed 1, got {boost}")
    return value


def check_choice(name, value, choices):
    if value not in choices:
        raise ValueError(f"{name} must be one of {sorted(choices)}, got {value!r}")
    return value
