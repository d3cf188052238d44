"""Frozen reference values of the exhaustive oracle on the running example."""

from fractions import Fraction

import pytest

from boostminer import oracle
from boostminer.dataset import TransactionDB
from boostminer.rules import Rule, rule_set_labels
from boostminer.values import INF

EXAMPLE_CLOSED = {
    "": 12, "B": 11, "C": 10, "AB": 10, "BC": 9, "ABC": 8, "CDE": 7, "ABCDE": 6,
}
RR_08 = {"A -> BC", "B -> C", "C -> AB", "D -> ABCE", "E -> ABCD", "{} -> AB", "{} -> C"}
BSTAR_08 = {"AB -> C", "CDE -> AB", "C -> AB", "B -> C", "{} -> C", "{} -> AB"}


def rule(db, x, y):
    return Rule.of(db, db.itemset(x), db.itemset(y))


def test_closed_sets(db):
    got = {db.label(c): s for c, s in oracle.brute_all_closed(db)}
    assert got == EXAMPLE_CLOSED


def test_closed_sets_above_threshold(db):
    got = {db.label(c) for c, _ in oracle.brute_all_closed(db, tau=8)}
    assert got == {"", "B", "C", "AB", "BC"}


@pytest.mark.parametrize("closed, gens", [
    ("AB", {"A"}), ("CDE", {"D", "E"}), ("BC", {"BC"}), ("", {""}),
    ("ABCDE", {"AD", "AE", "BD", "BE"}),
])
def test_minimal_generators(db, closed, gens):
    got = {db.label(g) for g in oracle.brute_minimal_generators(db, db.itemset(closed))}
    assert got == gens


def test_measures_on_running_example(db):
    a_bc = rule(db, "A", "BC")
    assert oracle.brute_lift(db, a_bc) == Fraction(16, 15)
    assert oracle.brute_boost(db, 0, a_bc) == Fraction(16, 15)
    assert oracle.brute_width(db, 0, a_bc) == Fraction(6, 5)
    assert oracle.brute_support_ratio(db, 0, a_bc) == Fraction(4, 3)
    assert oracle.brute_cl_boost(db, 0, a_bc) == Fraction(44, 45)
    assert oracle.brute_width(db, 0, rule(db, "ABC", "D")) == 1
    assert oracle.brute_boost(db, 0, rule(db, "", "ABCDE")) is INF
    assert oracle.brute_width(db, 0, rule(db, "", "ABCDE")) is INF


def test_closure_boost_of_cde_ab(db):
    # the empty antecedent reaching AB competes: (6/7) / (10/12)
    assert oracle.brute_cl_boost(db, 0, rule(db, "CDE", "AB")) == Fraction(36, 35)


def test_bases(db):
    assert rule_set_labels(db, oracle.brute_representative_rules(db, 0, Fraction(4, 5))) == RR_08
    assert rule_set_labels(db, oracle.brute_bstar(db, 0, Fraction(4, 5))) == BSTAR_08
    assert rule_set_labels(db, oracle.brute_mmr(db, 0, Fraction(4, 5))) == {
        "A -> BC", "D -> ABCE", "E -> ABCD", "{} -> AB", "{} -> C",
    }
    assert rule_set_labels(db, oracle.brute_representative_rules(db, 0, 1)) == {
        "A -> B", "AC -> B", "AD -> BCE", "AE -> BCD", "BD -> ACE", "BE -> ACD",
        "D -> CE", "E -> CD",
    }


def test_bc_a_is_representative_but_not_mmr(db):
    gamma = Fraction(8, 9)
    bc_a = rule(db, "BC", "A")
    assert bc_a in oracle.brute_representative_rules(db, 0, gamma)
    assert not oracle.brute_is_mmr(db, 0, gamma, bc_a)


def test_all_rules_count(db):
    # every (X, XY) pair with X a proper subset of XY and s(XY) > 0
    supported = [c for c in range(32) if oracle._tables(db).supp[c] > 0]
    expected = sum(2 ** bin(c).count("1") - 1 for c in supported)
    assert len(oracle.all_rules(db, 0)) == expected


def test_limit():
    wide = TransactionDB([[f"i{k}" for k in range(oracle.MAX_ITEMS + 1)]])
    with pytest.raises(oracle.OracleLimitError):
        oracle.brute_all_closed(wide)
