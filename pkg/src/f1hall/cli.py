"""Command-line interface over the library.

Subcommands: enumerate, indecomposables, decompose, hall-mult, hall-comult,
serre, roots, rho-report, family-verify.  Quivers and representations are
read from small text files; classes are addressed by canonical hex keys or
by family pretty names (S<i>, N<m>, I[<k>,<r>], R[<a>,<b>], joined by `+`
for direct sums).  Output is deterministic; exit code 0 means success,
1 a failed mathematical verdict, 2 a usage or input error.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction

from .families import (
    CyclicIndec,
    cyclic_bracket,
    cyclic_indec_key,
    engine_cyclic_bracket,
    typeA_indecomposables,
    verify_jordan_iso,
    verify_psi_homomorphism,
)
from .hall import HallElement, hall_coproduct, hall_product
from .kacmoody import (
    cartan_matrix,
    positive_roots,
    rho_defect_report,
    serre_check,
)
from .quiver import Quiver, cyclic_quiver, jordan_quiver, make_rep, rep_direct_sum
from .structure import (
    CanonicalKey,
    canonical_key,
    enumerate_indecomposables,
    enumerate_reps,
    indecomposable_summands,
    jordan_rep_of_partition,
    simple,
)


class CliError(Exception):
    """Usage or input error; maps to exit code 2."""


# ---------------------------------------------------------------------------
# input files
# ---------------------------------------------------------------------------


def _significant_lines(text):
    """(line_number, fields) for every non-blank, non-comment line."""
    out = []
    for num, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((num, line.split()))
    return out


def parse_quiver_text(text, source="<input>"):
    lines = _significant_lines(text)
    if not lines or lines[0][1][0] != "vertices" or len(lines[0][1]) != 2:
        num = lines[0][0] if lines else 1
        raise CliError(f"{source}:{num}: expected 'vertices <r>' header")
    try:
        r = int(lines[0][1][1])
    except ValueError:
        raise CliError(f"{source}:{lines[0][0]}: vertex count must be an integer")
    edges = []
    for num, fields in lines[1:]:
        if fields[0] != "edge" or len(fields) != 3:
            raise CliError(f"{source}:{num}: expected 'edge <src> <tgt>'")
        try:
            s, t = int(fields[1]), int(fields[2])
        except ValueError:
            raise CliError(f"{source}:{num}: edge endpoints must be integers")
        if not (0 <= s < r and 0 <= t < r):
            raise CliError(f"{source}:{num}: vertex out of range 0..{r - 1}")
        edges.append((s, t))
    return Quiver(r, tuple(edges))


def parse_quiver_file(path):
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise CliError(f"cannot read quiver file: {exc}")
    return parse_quiver_text(text, source=path)


def parse_rep_text(quiver, text, source="<input>"):
    """`dims d0 ... d{r-1}` then one `map e<k>: a1 ... a{d_src}` per edge."""
    lines = _significant_lines(text)
    if not lines or lines[0][1][0] != "dims":
        num = lines[0][0] if lines else 1
        raise CliError(f"{source}:{num}: expected 'dims d0 d1 ...' header")
    num, fields = lines[0]
    if len(fields) != quiver.num_vertices + 1:
        raise CliError(f"{source}:{num}: need {quiver.num_vertices} dimensions")
    try:
        dims = tuple(int(x) for x in fields[1:])
    except ValueError:
        raise CliError(f"{source}:{num}: dimensions must be integers")
    images = [None] * quiver.num_edges
    for num, fields in lines[1:]:
        if fields[0] != "map" or len(fields) < 2 or not re.fullmatch(
            r"e\d+:", fields[1]
        ):
            raise CliError(f"{source}:{num}: expected 'map e<k>: a1 a2 ...'")
        k = int(fields[1][1:-1])
        if not 0 <= k < quiver.num_edges:
            raise CliError(f"{source}:{num}: edge index e{k} out of range")
        if images[k] is not None:
            raise CliError(f"{source}:{num}: duplicate line for edge e{k}")
        try:
            images[k] = tuple(int(x) for x in fields[2:])
        except ValueError:
            raise CliError(f"{source}:{num}: image entries must be integers")
        if len(images[k]) != dims[quiver.edges[k][0]]:
            raise CliError(
                f"{source}:{num}: edge e{k} needs "
                f"{dims[quiver.edges[k][0]]} image entries"
            )
        bound = dims[quiver.edges[k][1]]
        if any(not 0 <= a <= bound for a in images[k]):
            raise CliError(
                f"{source}:{num}: edge e{k} image entries must lie in 0..{bound}"
            )
    for k, img in enumerate(images):
        if img is None:
            raise CliError(f"{source}: missing 'map e{k}:' line")
    try:
        return make_rep(quiver, dims, tuple(images))
    except ValueError as exc:
        raise CliError(f"{source}: invalid representation: {exc}")


def parse_rep_file(quiver, path):
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise CliError(f"cannot read representation file: {exc}")
    return parse_rep_text(quiver, text, source=path)


# ---------------------------------------------------------------------------
# class names
# ---------------------------------------------------------------------------

_NAME_RE = re.compile(r"S(\d+)|N(\d+)|I\[(\d+),(\d+)\]|R\[(\d+),(\d+)\]")


def _interval_rep(quiver, a, b):
    """Thin representation supported on vertices a..b (1-based, inclusive)."""
    dims = tuple(1 if a - 1 <= v <= b - 1 else 0 for v in range(quiver.num_vertices))
    images = tuple(
        (1,) if dims[s] and dims[t] else (0,) * dims[s] for s, t in quiver.edges
    )
    return make_rep(quiver, dims, images)


def _component_rep(quiver, text):
    match = _NAME_RE.fullmatch(text)
    if match is None:
        raise CliError(f"unrecognized class name: {text!r}")
    s_i, n_m, i_k, i_r, r_a, r_b = match.groups()
    if s_i is not None:
        i = int(s_i)
        if not 0 <= i < quiver.num_vertices:
            raise CliError(f"vertex {i} out of range for S{i}")
        return simple(quiver, i)
    if n_m is not None:
        if quiver != jordan_quiver():
            raise CliError("N<m> names require the one-loop quiver")
        return jordan_rep_of_partition((int(n_m),))
    if i_k is not None:
        n = quiver.num_vertices
        if n < 2 or quiver != cyclic_quiver(n):
            raise CliError("I[<k>,<r>] names require a cyclic quiver")
        return cyclic_indec_key(CyclicIndec(n, int(i_k), int(i_r))).to_rep(quiver)
    a, b = int(r_a), int(r_b)
    if not 1 <= a <= b <= quiver.num_vertices:
        raise CliError(f"interval R[{a},{b}] out of range")
    return _interval_rep(quiver, a, b)


def parse_class_key(quiver, text):
    """A class key: canonical hex, or pretty names joined with `+`."""
    if text.startswith("f1k1:"):
        try:
            return CanonicalKey.from_hex(text)
        except ValueError as exc:
            raise CliError(str(exc))
    rep = None
    for part in text.split("+"):
        comp = _component_rep(quiver, part.strip())
        rep = comp if rep is None else rep_direct_sum(rep, comp)
    if rep is None:
        raise CliError("empty class name")
    return canonical_key(rep)


def _indec_name(quiver, key):
    rep = key.to_rep(quiver)
    nonzero = [v for v, d in enumerate(key.dims) if d]
    if quiver == jordan_quiver():
        return f"N{key.total_dim}"
    if key.total_dim == 1:
        return f"S{nonzero[0]}"
    n = quiver.num_vertices
    if n >= 2 and quiver == cyclic_quiver(n):
        for k in range(n):
            if cyclic_indec_key(CyclicIndec(n, k, key.total_dim)) == key:
                return f"I[{k},{key.total_dim}]"
    if not quiver.has_self_loops() and quiver.num_edges == n - 1:
        a, b = min(nonzero) + 1, max(nonzero) + 1
        try:
            if canonical_key(_interval_rep(quiver, a, b)) == key:
                return f"R[{a},{b}]"
        except ValueError:
            pass
    return None


def class_name(quiver, key):
    """Pretty name of a class if every summand has one, else the hex key."""
    if key.total_dim == 0:
        return "1"
    dec = indecomposable_summands(key.to_rep(quiver))
    parts = []
    # larger summands first, partition style
    for comp, mult in sorted(dec.summands, key=lambda s: (-s[0].total_dim, s[0])):
        name = _indec_name(quiver, comp)
        if name is None:
            return key.to_hex()
        parts.extend([name] * mult)
    return "+".join(parts)


def _key_label(quiver, key, fmt):
    return key.to_hex() if fmt == "tsv" else class_name(quiver, key)


def _format_coeff(value):
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else str(value)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _require(args, name):
    value = getattr(args, name.replace("-", "_"))
    if value is None:
        raise CliError(f"--{name} is required for this command")
    return value


def _parse_dim(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise CliError(f"bad dimension vector: {text!r}")


def cmd_enumerate(args):
    quiver = parse_quiver_file(_require(args, "quiver"))
    dims = _parse_dim(_require(args, "dim"))
    if len(dims) != quiver.num_vertices:
        raise CliError("dimension vector length does not match the quiver")
    keys = enumerate_reps(quiver, dims, nilpotent_only=args.nilpotent)
    for key in keys:
        print(f"{key.to_hex()}\t{_key_label(quiver, key, args.format)}")
    if args.format == "text":
        print(f"classes: {len(keys)}")
    return 0


def cmd_indecomposables(args):
    quiver = parse_quiver_file(_require(args, "quiver"))
    keys = enumerate_indecomposables(
        quiver, _require(args, "max_dim"), nilpotent_only=args.nilpotent
    )
    for key in keys:
        print(f"{key.to_hex()}\t{_key_label(quiver, key, args.format)}")
    if args.format == "text":
        print(f"indecomposables: {len(keys)}")
    return 0


def cmd_decompose(args):
    quiver = parse_quiver_file(_require(args, "quiver"))
    if args.rep is not None:
        rep = parse_rep_file(quiver, args.rep)
    elif args.key:
        rep = parse_class_key(quiver, args.key[0]).to_rep(quiver)
    else:
        raise CliError("decompose needs --rep <file> or a class key argument")
    dec = indecomposable_summands(rep)
    for key, mult in dec.summands:
        print(f"{mult}\t{key.to_hex()}\t{_key_label(quiver, key, args.format)}")
    if args.format == "text":
        print(f"class: {class_name(quiver, canonical_key(rep))}")
    return 0


def cmd_hall_mult(args):
    quiver = parse_quiver_file(_require(args, "quiver"))
    if len(args.key) != 2:
        raise CliError("hall-mult needs exactly two class keys")
    m_key = parse_class_key(quiver, args.key[0])
    n_key = parse_class_key(quiver, args.key[1])
    product = hall_product(
        HallElement.basis(quiver, m_key), HallElement.basis(quiver, n_key)
    )
    for r_key in sorted(product.terms):
        row = (
            _key_label(quiver, m_key, args.format),
            _key_label(quiver, n_key, args.format),
            _key_label(quiver, r_key, args.format),
            _format_coeff(product.terms[r_key]),
        )
        print("\t".join(row))
    return 0


def cmd_hall_comult(args):
    quiver = parse_quiver_file(_require(args, "quiver"))
    if len(args.key) != 1:
        raise CliError("hall-comult needs exactly one class key")
    r_key = parse_class_key(quiver, args.key[0])
    coproduct = hall_coproduct(HallElement.basis(quiver, r_key))
    for m_key, n_key in sorted(coproduct.terms):
        row = (
            _key_label(quiver, r_key, args.format),
            _key_label(quiver, m_key, args.format),
            _key_label(quiver, n_key, args.format),
            _format_coeff(coproduct.terms[(m_key, n_key)]),
        )
        print("\t".join(row))
    return 0


def cmd_serre(args):
    quiver = parse_quiver_file(_require(args, "quiver"))
    if quiver.has_self_loops():
        raise CliError("serre needs a quiver without self-loops")
    failures = []
    for i in range(quiver.num_vertices):
        for j in range(quiver.num_vertices):
            if i == j:
                continue
            result = serre_check(quiver, i, j)
            if not result.holds:
                failures.append((i, j, result.witness))
    if failures:
        for i, j, witness in failures:
            print(f"serre relation fails at ({i},{j}): {witness.to_hex()}")
        return 1
    print("all Serre relations hold")
    return 0


def cmd_roots(args):
    quiver = parse_quiver_file(_require(args, "quiver"))
    try:
        data = positive_roots(cartan_matrix(quiver))
    except ValueError as exc:
        raise CliError(str(exc))
    for root in data.positive_roots:
        print(",".join(str(x) for x in root))
    if args.format == "text":
        print(f"positive roots: {len(data.positive_roots)}")
    return 0


def cmd_rho_report(args):
    quiver = parse_quiver_file(_require(args, "quiver"))
    if args.dim is not None:
        degrees = [_parse_dim(args.dim)]
    elif args.max_dim is not None:
        degrees = sorted(
            _degrees_up_to(quiver.num_vertices, args.max_dim),
            key=lambda d: (sum(d), d),
        )
    else:
        raise CliError("rho-report needs --dim or --max-dim")
    if args.format == "text":
        print("alpha\tdim_U(n+)\tdim_CQ\tdim_HQ\tker\tcoker")
    for alpha in degrees:
        if len(alpha) != quiver.num_vertices:
            raise CliError("degree length does not match the quiver")
        try:
            report = rho_defect_report(quiver, alpha)
        except ValueError as exc:
            raise CliError(str(exc))
        row = (",".join(str(x) for x in alpha),) + tuple(str(v) for v in report)
        print("\t".join(row))
    return 0


def _degrees_up_to(r, max_total):
    def walk(prefix, remaining):
        if len(prefix) == r:
            if sum(prefix) >= 1:
                yield tuple(prefix)
            return
        for v in range(remaining + 1):
            yield from walk(prefix + [v], remaining - v)

    yield from walk([], max_total)


def cmd_family_verify(args):
    family = args.family
    if family == "jordan":
        verdict = verify_jordan_iso(args.max_weight)
        label = f"jordan iso up to weight {args.max_weight}"
    elif family == "cyclic":
        n = args.n
        if n < 2:
            raise CliError("cyclic family needs --n >= 2")
        for p in range(1, 4):
            for q in range(1, 4):
                for i in range(n):
                    for j in range(n):
                        x, y = CyclicIndec(n, i, p), CyclicIndec(n, j, q)
                        if cyclic_bracket(x, y) != engine_cyclic_bracket(x, y):
                            print(f"FAIL: bracket mismatch at [{x},{y}]")
                            return 1
        verdict = verify_psi_homomorphism(n, args.max_power)
        label = f"cyclic windings and psi on {n} residues, powers <= {args.max_power}"
    elif family == "typeA":
        n = args.n
        found = typeA_indecomposables(n)
        expected = n * (n + 1) // 2
        if len(found) != expected:
            print(f"FAIL: {len(found)} interval classes, expected {expected}")
            return 1
        print(f"OK: typeA intervals on {n} vertices ({expected} classes)")
        return 0
    else:
        raise CliError(f"unknown family: {family!r}")
    if verdict.ok:
        print(f"OK: {label}")
        return 0
    print(f"FAIL: {verdict.detail}")
    return 1


# ---------------------------------------------------------------------------
# driver
# ---------------------------------------------------------------------------

_COMMANDS = {
    "enumerate": cmd_enumerate,
    "indecomposables": cmd_indecomposables,
    "decompose": cmd_decompose,
    "hall-mult": cmd_hall_mult,
    "hall-comult": cmd_hall_comult,
    "serre": cmd_serre,
    "roots": cmd_roots,
    "rho-report": cmd_rho_report,
    "family-verify": cmd_family_verify,
}


def _bool_flag(text):
    if text in ("true", "false"):
        return text == "true"
    raise argparse.ArgumentTypeError("expected 'true' or 'false'")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="f1hall",
        description="Exact Hall algebra computations for quiver "
        "representations over the field with one element.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--quiver", help="path to a quiver file")
        p.add_argument("--dim", help="comma-separated dimension vector")
        p.add_argument("--max-dim", type=int, help="total dimension bound")
        p.add_argument(
            "--nilpotent",
            type=_bool_flag,
            default=True,
            help="restrict to nilpotent representations (default true)",
        )
        p.add_argument(
            "--jobs",
            type=int,
            default=1,
            help="worker budget; accepted for interface stability, "
            "computations are single-process",
        )
        p.add_argument("--format", choices=("text", "tsv"), default="text")
        if name == "decompose":
            p.add_argument("--rep", help="path to a representation file")
        if name == "family-verify":
            p.add_argument(
                "--family", required=True, choices=("jordan", "cyclic", "typeA")
            )
            p.add_argument("--max-weight", type=int, default=4)
            p.add_argument("--n", type=int, default=2)
            p.add_argument("--max-power", type=int, default=1)
        p.add_argument("key", nargs="*", help="class keys (hex or pretty names)")
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if args.jobs < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return 2
    try:
        return _COMMANDS[args.command](args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run_main():
    sys.exit(main())


if __name__ == "__main__":
    run_main()
