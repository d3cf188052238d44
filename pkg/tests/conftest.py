import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from boostminer.dataset import TransactionDB
from boostminer.lattice import build_lattice

# running example: 12 transactions over five items
EXAMPLE_ROWS = (
    [list("ABCDE")] * 6 + [list("ABC")] * 2 + [list("AB")] * 2 + [list("CDE"), list("BC")]
)
EXAMPLE_BASKET = "\n".join(" ".join(row) for row in EXAMPLE_ROWS) + "\n"

CORPUS_SEED = 20111
CORPUS_SIZE = 200
GAMMAS = (Fraction(1, 2), Fraction(7, 10), Fraction(9, 10))
BOOSTS = (Fraction(21, 20), Fraction(6, 5), Fraction(3, 2))


def example_db():
    return TransactionDB(EXAMPLE_ROWS)


def random_rows(rng, max_items=6, max_rows=12):
    k = rng.randint(1, max_items)
    n = rng.randint(1, max_rows)
    density = rng.uniform(0.3, 0.85)
    items = [chr(ord("A") + i) for i in range(k)]
    return [[a for a in items if rng.random() < density] for _ in range(n)]


def make_corpus(size=CORPUS_SIZE, seed=CORPUS_SEED):
    """Seeded small datasets: at most 6 items and 12 transactions each."""
    rng = random.Random(seed)
    return [TransactionDB(random_rows(rng)) for _ in range(size)]


_CORPUS = None


def corpus():
    global _CORPUS
    if _CORPUS is None:
        _CORPUS = make_corpus()
    return _CORPUS


@pytest.fixture
def db():
    return example_db()


@pytest.fixture
def lattice(db):
    return build_lattice(db, 0)


@pytest.fixture(scope="session")
def small_corpus():
    return corpus()


@st.composite
def transaction_dbs(draw, max_items=5, max_rows=10):
    k = draw(st.integers(1, max_items))
    items = [chr(ord("A") + i) for i in range(k)]
    rows = draw(st.lists(st.sets(st.sampled_from(items)), min_size=1, max_size=max_rows))
    return TransactionDB([sorted(r) for r in rows])
