"""Command-line interface: ``symplectic-index {element,index,sample,order,selftest}``.

Exit codes: 0 on success, 1 for domain errors (index out of range,
non-symplectic input, failed self-test), 2 for usage or parse errors.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time

import numpy as np

from . import _backend
from .clifford import (
    CliffordElement,
    clifford_order,
    clifford_to_index,
    index_to_clifford,
    make_rng,
    uniform_below,
)
from .gf2 import NotSymplecticError, SympMatrix, is_symplectic
from .indexer import (
    sp_order,
    symplectic_inverse,
    symplectic_n3,
    symplectic_n4,
    transvection_factorization,
)
from .sympgs import complete_basis_bits
from .transvect import apply_bits, apply_seq_to_matrix, find_transvection_bits

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class DomainError(Exception):
    pass


class ParseError(Exception):
    pass


def _order(n, group):
    return clifford_order(n) if group == "clifford" else sp_order(n)


def _group_name(n, group):
    return f"C_{n}" if group == "clifford" else f"Sp({2 * n})"


def element_document(n, index, group, S, r=None, s=None, factorization=None):
    doc = {"n": n, "group": group, "index": str(index), "matrix": S.to_rows()}
    if group == "clifford":
        doc["r"] = list(r)
        doc["s"] = list(s)
    if factorization is not None:
        doc["factorization"] = [[(h >> j) & 1 for j in range(2 * n)] for h in factorization.hs()]
    return doc


def dump_json(doc):
    return json.dumps(doc, separators=(",", ":"))


def render_text(doc):
    lines = ["".join(map(str, row)) for row in doc["matrix"]]
    if "r" in doc:
        lines.append("r " + "".join(map(str, doc["r"])))
        lines.append("s " + "".join(map(str, doc["s"])))
    return "\n".join(lines)


def build_element(n, index, group, algorithm="n3", with_factorization=False):
    order = _order(n, group)
    if not 0 <= index < order:
        raise DomainError(f"index {index} out of range: valid indices for {_group_name(n, group)} are 0 <= index < {order}")
    if group == "clifford":
        if algorithm != "n3":
            raise DomainError("the Clifford index map is defined through the n3 algorithm only")
        c = index_to_clifford(n, index)
        S, r, s = c.S, c.r, c.s
    else:
        S = symplectic_n4(n, index) if algorithm == "n4" else symplectic_n3(n, index)
        r = s = None
    fact = transvection_factorization(S) if with_factorization else None
    return element_document(n, index, group, S, r, s, fact)


def _parse_bits(text, what):
    text = text.strip()
    if not text or set(text) - {"0", "1"}:
        raise ParseError(f"{what}: expected a string of 0/1 characters, got {text!r}")
    return [int(ch) for ch in text]


def parse_element(text):
    """Parse a JSON document or the text format into ``(matrix rows, r, s, group)``.

    ``group`` is only known for JSON documents; it is None for text input.
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
            rows = doc["matrix"]
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise ParseError(f"invalid element document: {exc}") from None
        if isinstance(rows, list) and rows and isinstance(rows[0], str):
            rows = [_parse_bits(row, "matrix row") for row in rows]
        return rows, doc.get("r"), doc.get("s"), doc.get("group")
    rows, r, s = [], None, None
    for line in stripped.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("r "):
            r = _parse_bits(line[2:], "r")
        elif line.startswith("s "):
            s = _parse_bits(line[2:], "s")
        else:
            rows.append(_parse_bits(line, "matrix row"))
    return rows, r, s, None


def index_of(n, text, group=None):
    rows, r, s, doc_group = parse_element(text)
    group = group or doc_group or ("clifford" if r is not None else "sp")
    if group not in ("sp", "clifford"):
        raise ParseError(f"unknown group {group!r}")
    try:
        S = SympMatrix.from_rows(rows)
    except (ValueError, TypeError) as exc:
        raise ParseError(f"invalid matrix: {exc}") from None
    if S.n != n:
        raise ParseError(f"matrix is {2 * S.n}x{2 * S.n} but n={n} expects {2 * n}x{2 * n}")
    try:
        if group == "clifford":
            if r is None or s is None:
                raise ParseError("a Clifford element needs r and s phase bits")
            try:
                c = CliffordElement(S, tuple(r), tuple(s))
            except (ValueError, TypeError) as exc:
                raise ParseError(str(exc)) from None
            return clifford_to_index(n, c)
        return symplectic_inverse(n, S)
    except NotSymplecticError as exc:
        raise DomainError(str(exc)) from None


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _index_arg(text):
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"index must be a decimal integer, got {text!r}") from None
    return value


def _seed_arg(text):
    value = int(text, 0)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return value


def cmd_element(args, out):
    doc = build_element(args.n, args.index, args.group, args.algorithm, args.with_factorization)
    out.write((dump_json(doc) if args.format == "json" else render_text(doc)) + "\n")


def cmd_index(args, out):
    try:
        if args.file == "-":
            text = sys.stdin.read()
        else:
            with open(args.file) as fh:
                text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {args.file}: {exc}") from None
    out.write(f"{index_of(args.n, text, args.group)}\n")


def cmd_sample(args, out):
    rng = make_rng(args.seed)
    order = _order(args.n, args.group)
    for _ in range(args.count):
        i = uniform_below(order, rng)
        doc = build_element(args.n, i, args.group, with_factorization=args.with_factorization)
        out.write(dump_json(doc) + "\n")


def cmd_order(args, out):
    out.write(f"{_order(args.n, args.group)}\n")


def run_selftest(max_n=6, trials=200, seed=0, log=print):
    """Exhaustive checks at n = 1, 2 and random property checks up to ``max_n``."""
    failures = []

    def check(name, ok, detail=""):
        log(f"{'PASS' if ok else 'FAIL'}  {name}{(': ' + detail) if detail else ''}")
        if not ok:
            failures.append(name)

    for n in (1, 2):
        order = sp_order(n)
        members = _brute_force_members(n)
        check(f"brute-force |Sp({2 * n})|", len(members) == order, f"{len(members)} members, formula {order}")
        for name, fn in (("n3", symplectic_n3), ("n4", symplectic_n4)):
            images = {fn(n, i).cols for i in range(order)}
            check(f"{name} bijection n={n}", images == members, f"{len(images)} distinct images")
        ok = all(symplectic_inverse(n, symplectic_n3(n, i)) == i for i in range(order))
        check(f"inverse round-trip n={n}", ok, f"{order} indices")

    rnd = random.Random(seed)
    for n in range(3, max_n + 1):
        bad = 0
        for _ in range(trials):
            i = rnd.randrange(sp_order(n))
            g = symplectic_n3(n, i)
            fact = transvection_factorization(g)
            if (
                not is_symplectic(g)
                or symplectic_inverse(n, g) != i
                or not is_symplectic(symplectic_n4(n, i))
                or len(fact) > 4 * n
                or apply_seq_to_matrix(fact, SympMatrix.identity(n)) != g
            ):
                bad += 1
        check(f"random properties n={n}", bad == 0, f"{trials} trials, {bad} failures")
        bad = 0
        for _ in range(trials):
            x, y = rnd.randrange(1, 1 << 2 * n), rnd.randrange(1, 1 << 2 * n)
            hs = find_transvection_bits(x, y, 2 * n)
            if len(hs) > 2 or apply_bits(hs, x, 2 * n) != y:
                bad += 1
            cols = complete_basis_bits(x, 2 * n)
            if cols[0] != x or not is_symplectic(SympMatrix(n, tuple(cols))):
                bad += 1
        check(f"transvection/Gram-Schmidt n={n}", bad == 0, f"{trials} trials, {bad} failures")
    return failures


def _brute_force_members(n):
    """Column tuples of every 2n x 2n matrix with S Lambda S^T = Lambda, by enumeration."""
    size = 2 * n
    codes = np.arange(1 << (size * size), dtype=np.int64)
    shifts = np.arange(size * size, dtype=np.int64)
    # entry (row a, column b) of matrix `code` is bit b * size + a
    mats = ((codes[:, None] >> shifts) & 1).reshape(-1, size, size).transpose(0, 2, 1)
    lam = np.kron(np.eye(n, dtype=np.int64), np.array([[0, 1], [1, 0]]))
    prods = np.einsum("kab,bc,kdc->kad", mats, lam, mats) % 2
    hits = codes[(prods == lam).all(axis=(1, 2))]
    col_mask = (1 << size) - 1
    return {tuple((int(c) >> (size * b)) & col_mask for b in range(size)) for c in hits}


def cmd_selftest(args, out):
    start = time.perf_counter()
    out.write(f"backend: {_backend.get_backend()}\n")
    failures = run_selftest(args.max_n, args.trials, args.seed, log=lambda line: out.write(line + "\n"))
    out.write(f"{'FAILED' if failures else 'OK'} in {time.perf_counter() - start:.2f}s\n")
    if failures:
        raise DomainError(f"{len(failures)} self-test check(s) failed: {', '.join(failures)}")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="symplectic-index",
        description="Index, construct and sample elements of Sp(2n, F2) and the n-qubit Clifford group.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_group(p, default="sp", help="group to work in (default: %(default)s)"):
        p.add_argument("--group", choices=("sp", "clifford"), default=default, help=help)

    def add_n(p):
        p.add_argument("n", type=_positive_int, help="number of qubits; matrices are 2n x 2n")

    def add_factorization(p):
        p.add_argument(
            "--with-factorization",
            action="store_true",
            help="include a transvection factorization of the symplectic part",
        )

    p = sub.add_parser("element", help="construct the element with a given index")
    add_n(p)
    p.add_argument("index", type=_index_arg, help="decimal index in [0, group order)")
    add_group(p)
    p.add_argument(
        "--algorithm",
        choices=("n3", "n4"),
        default="n3",
        help="n3: transvections (invertible by 'index'); n4: Gram-Schmidt, a different map",
    )
    p.add_argument("--format", choices=("text", "json"), default="text", help="output format")
    add_factorization(p)
    p.set_defaults(func=cmd_element)

    p = sub.add_parser("index", help="print the index of an element read from a file ('-' for stdin)")
    add_n(p)
    p.add_argument("file", help="text or JSON element document, '-' for stdin")
    add_group(p, default=None, help="override the group; inferred from the document by default")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("sample", help="draw uniformly random elements as JSON lines")
    add_n(p)
    p.add_argument("--count", type=_positive_int, default=1, help="number of samples")
    p.add_argument("--seed", type=_seed_arg, default=None, help="64-bit seed for PCG64 (default: fresh entropy)")
    add_group(p)
    add_factorization(p)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("order", help="print the group order")
    add_n(p)
    add_group(p)
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("selftest", help="run exhaustive and randomized consistency checks")
    p.add_argument("--max-n", type=int, default=6, help="largest n for randomized round trips")
    p.add_argument("--trials", type=_positive_int, default=200, help="random indices per n")
    p.add_argument("--seed", type=int, default=0, help="seed for the random indices")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
