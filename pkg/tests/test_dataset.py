import io

import pytest
from hypothesis import given

from boostminer.dataset import DataError, TransactionDB, load_transactions
from conftest import EXAMPLE_BASKET, transaction_dbs


def test_load_basket_file(tmp_path):
    path = tmp_path / "example_db.basket"
    path.write_text(EXAMPLE_BASKET)
    db = TransactionDB.from_file(path)
    assert db.n == 12
    assert db.n_items == 5
    assert sorted(db.item_names) == list("ABCDE")


def test_comments_blank_lines_and_commas():
    db = load_transactions("# header\nA,B\n\n  C  \nA C\n")
    assert db.n == 3
    assert db.support(db.itemset("A")) == 2


def test_load_rejects_empty_input():
    with pytest.raises(DataError):
        load_transactions("# nothing\n\n")


def test_missing_file_is_data_error(tmp_path):
    with pytest.raises(DataError):
        TransactionDB.from_file(tmp_path / "absent.basket")


def test_fixed_item_names_reject_unknown_items():
    with pytest.raises(DataError):
        TransactionDB([["A", "Z"]], item_names=["A", "B"])
    with pytest.raises(DataError):
        TransactionDB([["A"]], item_names=["A", "A"])


@pytest.mark.parametrize("items, expected", [
    ("ABCDE", 6), ("", 12), ("B", 11), ("BC", 9), ("AB", 10), ("CDE", 7),
])
def test_supports(db, items, expected):
    assert db.support(db.itemset(items)) == expected


def test_tidsets(db):
    d_tids = db.tidset(db.itemset("D"))
    assert len(d_tids) == 7
    assert db.tidset(frozenset()) == tuple(range(12))
    ad = db.tidmask(db.itemset("A")) & db.tidmask(db.itemset("D"))
    assert ad.bit_count() == 6
    assert ad == db.tidmask(db.itemset("AD"))


@pytest.mark.parametrize("items, closure", [
    ("A", "AB"), ("D", "CDE"), ("", ""), ("E", "CDE"), ("BC", "BC"), ("AC", "ABC"),
])
def test_closures(db, items, closure):
    assert db.closure(db.itemset(items)) == db.itemset(closure)


def test_closure_of_empty_tidset_is_universe(db):
    assert db.closure_of_mask(0) == db.universe


def test_item_lookup_errors(db):
    with pytest.raises(KeyError):
        db.itemset("Q")
    with pytest.raises(KeyError):
        db.support(frozenset({99}))


def test_multi_character_names():
    db = TransactionDB([["milk", "bread"], ["milk"]])
    assert db.itemset("milk bread") == db.itemset(["bread", "milk"])
    assert db.label(db.itemset("milk bread")) == "bread milk"


def test_free_sets(db):
    assert db.is_free(db.itemset("A"))
    assert not db.is_free(db.itemset("AB"))
    assert db.is_free(db.itemset("BC"))


@given(transaction_dbs())
def test_closure_operator_laws(db):
    for row in db.transactions[:4]:
        x = frozenset(sorted(row)[:2])
        cx = db.closure(x)
        assert x <= cx
        assert db.closure(cx) == cx
        assert db.support(cx) == db.support(x)
        assert db.closure(frozenset()) <= cx


@given(transaction_dbs())
def test_support_is_antitone(db):
    items = sorted(db.universe)
    for i in items:
        for j in items:
            assert db.support(frozenset({i, j})) <= db.support(frozenset({i}))
