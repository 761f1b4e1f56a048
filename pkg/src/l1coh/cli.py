"""Command-line front end.

Exit codes: 0 ok, 1 an example failed to reproduce (or an oracle suite
failed), 2 parse error, 3 invalid state, 4 decomposition does not match the
state, 5 output path not writable.
"""

from __future__ import annotations

import argparse
import sys

from .coherence import c_l1
from .detectors import TOL_DETECT, classify
from .errors import DecompositionMismatch, L1CohError
from .oracle import SUITES
from .qstate import ParseError, StateValidationError, format_state, load_decomposition, load_state
from .reproduce import figure1_csv, figure1_rows, run_examples
from .states import partial_trace

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_INVALID, EXIT_MISMATCH, EXIT_UNWRITABLE = range(6)


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def _load(path, loader, **kw):
    try:
        return loader(path, **kw)
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from None


def cmd_coherence(args) -> int:
    s = _load(args.path, load_state)
    print(f"{c_l1(s):.12f}")
    return EXIT_OK


def cmd_classify(args) -> int:
    s = _load(args.path, load_state)
    d = _load(args.decomposition, load_decomposition) if args.decomposition else None
    report = classify(s, d, tol=args.tol)
    for line in report.lines():
        print(line)
    return EXIT_OK


def cmd_reduce(args) -> int:
    s = _load(args.path, load_state)
    keep = [int(k) for part in args.keep for k in part.split(",") if k]
    try:
        r = partial_trace(s, keep)
    except L1CohError as e:
        _err(str(e))
        return EXIT_INVALID
    sys.stdout.write(format_state(r))
    return EXIT_OK


def cmd_figure1(args) -> int:
    if args.steps < 2:
        _err("--steps must be at least 2")
        return EXIT_PARSE
    text = figure1_csv(figure1_rows(args.steps, tol=args.tol))
    if args.out is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    except OSError as e:
        _err(f"cannot write {args.out}: {e.strerror}")
        return EXIT_UNWRITABLE
    return EXIT_OK


def cmd_examples(args) -> int:
    rows = run_examples()
    for row in rows:
        print(row.line())
    n_pass = sum(r.passed for r in rows)
    print(f"{n_pass}/{len(rows)} rows PASS")
    return EXIT_OK if n_pass == len(rows) else EXIT_FAIL


def cmd_oracle(args) -> int:
    rep = SUITES[args.suite](args.trials, args.seed)
    print(rep.summary())
    for f in rep.failures[:20]:
        print(f"  seed={f.seed} trial={f.trial}: {f.description}")
    return EXIT_OK if rep.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="l1coh", description="l1-norm coherence entanglement checks")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("coherence", help="print the l1 norm of coherence of a state file")
    c.add_argument("path")
    c.set_defaults(func=cmd_coherence)

    c = sub.add_parser("classify", help="run every check and print a verdict")
    c.add_argument("path")
    c.add_argument("decomposition", nargs="?", help="optional `mixed` file with cut-tagged components")
    c.add_argument("--tol", type=float, default=TOL_DETECT)
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("reduce", help="print a reduced density matrix")
    c.add_argument("path")
    c.add_argument("--keep", nargs="+", required=True, help="subsystem indices, e.g. `--keep 0 2` or `--keep 0,2`")
    c.set_defaults(func=cmd_reduce)

    c = sub.add_parser("figure1", help="CSV sweep of coherence against the single-cut bound")
    c.add_argument("--steps", type=int, default=141)
    c.add_argument("--out")
    c.add_argument("--tol", type=float, default=TOL_DETECT)
    c.set_defaults(func=cmd_figure1)

    c = sub.add_parser("examples", help="reproduce every worked example")
    c.set_defaults(func=cmd_examples)

    c = sub.add_parser("oracle", help="run a brute-force verification suite")
    c.add_argument("suite", choices=sorted(SUITES))
    c.add_argument("--trials", type=int, default=1000)
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        _err(str(e))
        return EXIT_PARSE
    except DecompositionMismatch as e:
        _err(str(e))
        return EXIT_MISMATCH
    except (StateValidationError, L1CohError) as e:
        _err(str(e))
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
