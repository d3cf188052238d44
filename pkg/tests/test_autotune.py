import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from boostminer import oracle
from boostminer.autotune import (
    EXPAND, HOLD, RELEASE, AutoConfig, AutoState, hold_or_release, observe_lift,
    run_parameterfree,
)
from boostminer.dataset import TransactionDB
from boostminer.miner import MinerConfig
from boostminer.novelty import BoostFilter, Thresholds
from boostminer.rules import rank_key
from boostminer.values import INF
from conftest import transaction_dbs

F = Fraction


def drifting_db(seed=5, k=8, n=60):
    """Independent items with varied frequencies; lowers the bound once."""
    rng = random.Random(seed)
    probs = [rng.uniform(0.2, 0.8) for _ in range(k)]
    rows = [[f"i{j}" for j in range(k) if rng.random() < probs[j]] for _ in range(n)]
    return TransactionDB(rows)


def expected_rules(db, result, floor=F(2, 3), top_k=50):
    basis = oracle.brute_bstar(db, result.tau, floor)
    scored = [(r, oracle.brute_cl_boost(db, result.tau, r)) for r in basis]
    scored = [(r, v) for r, v in scored if v > result.boost_b]
    scored.sort(key=lambda rv: rank_key(db, *rv))
    return scored[:top_k]


def test_observe_lift_trend():
    state = AutoState(F(23, 20))
    assert not observe_lift(state, F(114, 100))
    assert not observe_lift(state, F(112, 100))
    assert state.boost_b == F(23, 20)
    assert observe_lift(state, F(110, 100))
    assert state.boost_b == F(4, 5) * F(23, 20) + F(1, 5) * F(110, 100)
    # the trend continues, so the bound keeps moving toward the lifts
    assert observe_lift(state, F(108, 100))
    assert state.boost_b < F(114, 100)


def test_observe_lift_single_or_high_observations():
    state = AutoState(F(23, 20))
    assert not observe_lift(state, F(110, 100))
    assert not observe_lift(state, F(12, 10))  # above the bound, not recorded
    assert state.lift_trace == [F(110, 100)]
    assert state.boost_b == F(23, 20)


def test_observe_lift_clamps_to_floor():
    state = AutoState(F(106, 100))
    for value in (F(1), F(9, 10), F(1, 2)):
        observe_lift(state, value)
    assert state.boost_b == F(21, 20)


def test_hold_and_release():
    state = AutoState(F(23, 20))
    assert hold_or_release(state, "n", F(11, 10)) == HOLD
    assert state.held == {"n": F(11, 10)}
    state.boost_b = F(21, 20)
    assert hold_or_release(state, "n", F(11, 10)) == RELEASE
    assert state.held == {}
    assert hold_or_release(state, "m", INF) == EXPAND


def test_running_example(db):
    result = run_parameterfree(db)
    assert result.tau == 5
    assert result.boost_b == F(23, 20)
    assert [(r.describe(db), v) for r, v in result.rules] == [
        ("{} -> ABC", F(4, 3)), ("C -> DE", F(7, 6)),
    ]
    assert result.rules == expected_rules(db, result)
    assert result.tau_history == [(0, 5)]
    assert result.log[-1].startswith("DONE")


def test_single_item_database():
    db = TransactionDB([["A"]] * 10)
    result = run_parameterfree(db, AutoConfig(miner=MinerConfig(initial_support=0)))
    assert result.rules == []


def test_single_item_with_empty_rows():
    # empty rows make the empty set closed, so {} -> A is a genuine rule
    db = TransactionDB([["A"]] * 7 + [[]] * 3)
    result = run_parameterfree(db, AutoConfig(miner=MinerConfig(initial_support=0)))
    assert [(r.describe(db), v) for r, v in result.rules] == [("{} -> A", INF)]
    assert result.rules == expected_rules(db, result)


def test_bound_lowers_and_nodes_come_back():
    db = drifting_db()
    result = run_parameterfree(db, AutoConfig(miner=MinerConfig(initial_support=3)))
    lowered = [line for line in result.log if line.startswith("BOOST LOWERED to")]
    assert lowered
    assert F(21, 20) <= result.boost_b < F(23, 20)
    assert result.rules == expected_rules(db, result)


def test_heap_pressure_raises_support():
    db = drifting_db(seed=11, k=10, n=80)
    config = AutoConfig(miner=MinerConfig(initial_support=0, max_heap_len=12))
    result = run_parameterfree(db, config)
    taus = [t for _, t in result.tau_history]
    assert len(taus) > 1 and taus == sorted(set(taus))
    assert sum("TAU RAISED to" in line for line in result.log) == len(taus) - 1
    assert result.rules == expected_rules(db, result)


def test_determinism_and_post_hoc_check():
    db = drifting_db()
    config = AutoConfig(miner=MinerConfig(initial_support=3))
    first = run_parameterfree(db, config)
    second = run_parameterfree(db, config)
    assert first.rules == second.rules
    assert [v for _, v in first.rules] == [v for _, v in second.rules]
    assert first.tau_history == second.tau_history
    f = BoostFilter(db, Thresholds(first.tau, F(2, 3), first.boost_b), first.lattice)
    assert all(f.cl_boost_exceeds_alt(r) for r, _ in first.rules)


def test_held_nodes_cannot_pass():
    db = drifting_db()
    from boostminer.autotune import _Run

    run = _Run(db, AutoConfig(miner=MinerConfig(initial_support=3)))
    result = run.run()
    for idx, sigma in run.state.held.items():
        if run.lattice.nodes[idx].support > result.tau:
            assert sigma <= result.boost_b
            assert sigma == run.lattice.support_ratio(idx, result.tau)


def test_top_k_caps_output():
    db = drifting_db()
    result = run_parameterfree(db, AutoConfig(top_k=3, miner=MinerConfig(initial_support=3)))
    assert len(result.rules) == 3
    assert result.rules == expected_rules(db, result, top_k=3)


@settings(max_examples=60, deadline=None)
@given(transaction_dbs(max_items=6, max_rows=12), st.integers(0, 2), st.integers(1, 6))
def test_matches_oracle_on_small_data(db, support, heap):
    config = AutoConfig(miner=MinerConfig(initial_support=support, max_heap_len=heap))
    result = run_parameterfree(db, config)
    assert result.rules == expected_rules(db, result)
    assert F(21, 20) <= result.boost_b <= F(23, 20)
