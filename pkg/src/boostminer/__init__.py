"""Association rule mining with confidence-boost novelty filtering."""

from .autotune import AutoConfig, run_parameterfree
from .bases import (
    BasisKind, bstar_basis, compute_basis, min_max_rules, minimal_generators,
    mmr_boost_bounds_check, mmr_rules, representative_rules,
)
from .dataset import DataError, TransactionDB, load_transactions
from .estimator import BoostMiner
from .lattice import ClosureLattice, build_lattice
from .miner import ClosureMiner, MinerConfig, mine_closures
from .novelty import (
    BoostFilter, Thresholds, blocking_quotient, blocks, boost_exceeds, boost_value,
    cl_boost_exceeds, cl_boost_exceeds_alt, cl_boost_value, confidence, lift,
    support_ratio, width,
)
from .rules import Rule
from .values import INF

__version__ = "0.1.0"
