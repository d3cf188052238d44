"""Command line entry point.

Exit status: 0 on success, 2 on a usage error, 1 on a data error or a
failed ``--verify``.
"""

import argparse
import os
import sys
from datetime import datetime
from fractions import Fraction

from . import oracle
from .dataset import DataError, TransactionDB
from .estimator import BoostMiner
from .validation import check_boost, check_confidence, check_support
from .values import format_measure

LOG_DIR_ENV = "BOOSTMINER_LOG_DIR"


def build_parser():
    p = argparse.ArgumentParser(
        prog="boostminer",
        description="Mine association rules filtered by confidence boost.",
    )
    p.add_argument("--input", required=True, help="basket file, one transaction per line")
    p.add_argument("--mode", choices=("auto", "fixed"), default="fixed")
    p.add_argument("--support", help="fraction in [0, 1) or absolute count; rules need more")
    p.add_argument("--confidence", help="confidence threshold in (0, 1]")
    p.add_argument("--boost", help="boost bound above 1; omit to keep the whole basis")
    p.add_argument("--basis", choices=("rr", "bstar"), default="rr")
    p.add_argument("--algorithm", choices=("alg1", "alg2", "alg3"),
                   help="boost filter (default: alg1 for rr, alg3 for bstar)")
    p.add_argument("--top-k", type=int, help="keep only the best K rules")
    p.add_argument("--output", help="rules file (default: <input>.rules)")
    p.add_argument("--verify", action="store_true",
                   help="recompute every printed measure exhaustively (at most %d items)" % oracle.MAX_ITEMS)
    p.add_argument("--dot", metavar="PATH", help="write the closure lattice in Graphviz format")
    return p


def _number(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a number: {text!r}") from None


def _support(text):
    value = _number(text)
    if value >= 1 and value.denominator == 1:
        return int(value)
    return value


def format_rule(db, rule, boost):
    return "\t".join([
        format_measure(rule.confidence),
        f"{100 * rule.support / db.n:.2f}",
        format_measure(boost),
        " ".join(db.names(rule.antecedent)),
        "=>",
        " ".join(db.names(rule.consequent)),
    ])


def write_rules(rules, boosts, path, db):
    """One tab-separated line per rule: confidence, support percentage,
    boost, antecedent items, ``=>``, consequent items."""
    with open(path, "w", encoding="utf-8") as fh:
        for rule, boost in zip(rules, boosts):
            fh.write(format_rule(db, rule, boost) + "\n")


def read_rules(path, db):
    """Parse a rules file back into ``(rule, printed line)`` pairs; the
    rules are measured by the exhaustive oracle."""
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            fields = line.split("\t")
            if len(fields) != 6 or fields[4] != "=>":
                raise DataError(f"malformed rule line: {line!r}")
            x = frozenset(db.item_id(t) for t in fields[3].split())
            y = frozenset(db.item_id(t) for t in fields[5].split())
            out.append((oracle.measured_rule(db, x, y), line))
    return out


def verify_rules(path, db, tau, closure_based):
    """Recompute every line of a rules file exhaustively; returns the
    mismatching lines as ``(printed, recomputed)`` pairs."""
    measure = oracle.brute_cl_boost if closure_based else oracle.brute_boost
    bad = []
    for rule, printed in read_rules(path, db):
        expected = format_rule(db, rule, measure(db, tau, rule))
        if expected != printed:
            bad.append((printed, expected))
    return bad


def _log_path(input_path):
    base = os.path.basename(input_path) + ".log"
    log_dir = os.environ.get(LOG_DIR_ENV)
    if log_dir:
        return os.path.join(log_dir, base)
    return input_path + ".log"


def _write_log(path, lines):
    stamp = datetime.now().isoformat(timespec="seconds")
    with open(path, "w", encoding="utf-8") as fh:
        for line in lines:
            fh.write(f"{stamp} {line}\n")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        if args.mode == "auto":
            given = [f for f in ("support", "confidence", "boost") if getattr(args, f) is not None]
            if given:
                parser.error(f"--mode auto tunes its own thresholds; drop --{', --'.join(given)}")
            miner = BoostMiner(support=None, top_k=args.top_k)
        else:
            if args.support is None or args.confidence is None:
                parser.error("--mode fixed needs --support and --confidence")
            algorithm = args.algorithm or ("alg3" if args.basis == "bstar" else "alg1")
            support = _support(args.support)
            check_support(support, 1)
            boost = None if args.boost is None else check_boost(_number(args.boost))
            miner = BoostMiner(
                support=support,
                confidence=check_confidence(_number(args.confidence)),
                boost=boost,
                basis=args.basis,
                algorithm=algorithm,
                top_k=args.top_k,
            )
        if args.top_k is not None and args.top_k < 0:
            parser.error("--top-k must be non-negative")
    except ValueError as exc:
        parser.error(str(exc))

    try:
        db = TransactionDB.from_file(args.input)
        if args.verify and db.n_items > oracle.MAX_ITEMS:
            raise DataError(
                f"--verify handles at most {oracle.MAX_ITEMS} items; {args.input} has {db.n_items}"
            )
    except DataError as exc:
        print(f"boostminer: {exc}", file=sys.stderr)
        return 1

    try:
        miner.fit(db)
    except ValueError as exc:
        parser.error(str(exc))

    out_path = args.output or args.input + ".rules"
    log_lines = list(miner.log_)
    log_lines.append(
        f"SUMMARY mode={args.mode} transactions={db.n} items={db.n_items} "
        f"tau={miner.tau_} rules={len(miner.rules_)}"
        + ("" if miner.boost_ is None else f" boost={format_measure(miner.boost_)}")
    )
    try:
        write_rules(miner.rules_, miner.boosts_, out_path, db)
        if args.dot:
            with open(args.dot, "w", encoding="utf-8") as fh:
                fh.write(miner.lattice_.to_dot(db))
        if args.verify:
            closure_based = args.mode == "auto" or args.basis == "bstar"
            bad = verify_rules(out_path, db, miner.tau_, closure_based)
            log_lines.append(f"VERIFY checked={len(miner.rules_)} mismatches={len(bad)}")
            for printed, expected in bad:
                print(f"mismatch: {printed!r} recomputed as {expected!r}", file=sys.stderr)
        _write_log(_log_path(args.input), log_lines)
    except OSError as exc:
        print(f"boostminer: {exc}", file=sys.stderr)
        return 1
    if args.verify and bad:
        return 1
    print(f"{len(miner.rules_)} rules written to {out_path}")
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
