"""Command line front end.

JSON goes to stdout, a short human summary to stderr.  Exit codes: 0 success,
2 parse error, 3 certificate failed, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import itertools
import json
import math
import os
import sys
import time
from collections.abc import Iterator, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from .code import BudgetExceeded, LinearCode, hconcat, min_weight
from .field import GF, parse_field
from .groupring import GroupRingElement, format_element, parse_element, sigma
from .groups import GroupTable, group_table
from .qecc import KINDS, CertificateError, derive_qecc, qecc_from_elements
from .twod import (
    PolyError,
    big_f,
    check_dual_containing,
    check_self_orthogonal,
    code_from_g,
    dual_star,
    format_poly,
    parse_poly,
    poly_divides,
    poly_mul,
    reciprocal,
)

EXIT_OK, EXIT_PARSE, EXIT_CERT, EXIT_BUDGET = 0, 2, 3, 4
DEFAULT_DISTANCE_BUDGET = 1 << 22


class CliError(Exception):
    def __init__(self, message: str, code: int) -> None:
        super().__init__(message)
        self.code = code


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _note(args, msg: str) -> None:
    if not getattr(args, "json_only", False):
        print(msg, file=sys.stderr)


def _field(text: str) -> GF:
    try:
        return parse_field(text)
    except ValueError as exc:
        raise CliError(f"field: {exc}", EXIT_PARSE) from None


def _group(text: str) -> GroupTable:
    try:
        return group_table(text)
    except ValueError as exc:
        raise CliError(f"group: {exc}", EXIT_PARSE) from None


def _element(text: str, F: GF, G: GroupTable) -> GroupRingElement:
    try:
        return parse_element(text, F, G)
    except ValueError as exc:
        raise CliError(f"element: {exc}", EXIT_PARSE) from None


def _distance_opts(args) -> dict:
    opts = {"budget": args.distance_budget, "workers": max(1, args.threads)}
    if args.seed is not None:
        opts.update(randomized=True, seed=args.seed, samples=args.samples)
    return opts


# --- code / qecc ---------------------------------------------------------------


def cmd_code(args) -> int:
    F, G = _field(args.field), _group(args.group)
    a = _element(args.element, F, G)
    C = LinearCode(F, sigma(a))
    out = {"field": args.field, "group": G.name, "element": format_element(a), "n": C.n, "k": C.k}
    if C.k:
        p = min_weight(C, **_distance_opts(args))
        out.update(d=p.d, exact=p.exact)
    else:
        out.update(d=None, exact=True)
    if args.show_generator:
        out["generator"] = C.basis.tolist()
    _emit(out)
    _note(args, f"[{out['n']}, {out['k']}, {out['d']}] over {F!r} ({'exact' if out['exact'] else 'upper bound'})")
    return EXIT_OK


def cmd_qecc(args) -> int:
    F, G = _field(args.field), _group(args.group)
    a = _element(args.element, F, G)
    b = _element(args.element_b, F, G) if args.element_b else None
    if args.kind == "symplectic-pair" and b is None:
        raise CliError("symplectic-pair needs --element-b", EXIT_PARSE)
    try:
        cert, params = qecc_from_elements(args.kind, a, b, **_distance_opts(args))
    except CertificateError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None
    out = {"field": args.field, "group": G.name, "kind": args.kind, "certificate": cert.to_json()}
    if params is None:
        _emit(out)
        _note(args, f"{args.kind} certificate failed; {len(cert.residual_terms())} nonzero residual terms")
        return EXIT_CERT
    out["qecc"] = params.to_json()
    _emit(out)
    _note(args, f"{params} from classical [{params.classical.n}, {params.classical.k}, {params.classical.d}]")
    return EXIT_OK


# --- twod ----------------------------------------------------------------------


def cmd_twod(args) -> int:
    F = _field(args.field or f"GF({args.q})")
    try:
        g = parse_poly(args.g, F)
    except ValueError as exc:
        raise CliError(f"polynomial: {exc}", EXIT_PARSE) from None
    l, m = args.l, args.m
    if l < 1 or m < 1:
        raise CliError("--l and --m must be positive", EXIT_PARSE)
    if g.is_zero():
        raise CliError("polynomial: g is zero", EXIT_PARSE)
    n = l * m
    out: dict = {"q": F.q, "l": l, "m": m, "g": format_poly(g)}
    divides, h = poly_divides(g, big_f(F, l, m))
    a, b = g.degree
    out["divides"] = divides
    if not divides or a >= l or b >= m:
        out["reduced"] = a < l and b < m
        _emit(out)
        _note(args, "g does not give a code: " + ("g does not divide F" if not divides else "deg(g) not below (l, m)"))
        return EXIT_OK
    hs = reciprocal(h)
    out.update(h=format_poly(h), hstar=format_poly(hs), g_gstar=format_poly(poly_mul(g, reciprocal(g))))
    C = code_from_g(l, m, g)
    out["C"] = [n, C.k]
    opts = _distance_opts(args)
    if C.k:
        try:
            p = min_weight(C.code, **opts)
            out["C"].append(p.d)
            out["C_exact"] = p.exact
        except BudgetExceeded:
            out["C_exact"] = None
        Cs = dual_star(l, m, g)
        out["Cstar"] = [n, Cs.k]
        if Cs.k:
            try:
                p = min_weight(Cs.code, **opts)
                out["Cstar"].append(p.d)
                out["Cstar_exact"] = p.exact
            except BudgetExceeded:
                out["Cstar_exact"] = None
        out["dual_containing"] = check_dual_containing(l, m, g)
        out["self_orthogonal"] = check_self_orthogonal(l, m, g)
    else:
        out.update(Cstar=None, dual_containing=None, self_orthogonal=None)
    _emit(out)
    _note(args, f"C = {out['C']}, C* = {out['Cstar']}")
    return EXIT_OK


# --- tables --------------------------------------------------------------------


def cmd_field_table(args) -> int:
    F = _field(args.field)
    elements = []
    for v in range(F.q):
        elements.append(
            {
                "v": v,
                "literal": F.format_literal(v),
                "coeffs": list(F.coeffs(v)),
                "log": F.log(v) if v else None,
            }
        )
    out = {"field": repr(F), "p": F.p, "k": F.k, "q": F.q, "modulus": list(F.modulus), "primitive": F.primitive, "elements": elements}
    if F.q <= 64:
        r = np.arange(F.q)
        out["add"] = F.add(r[:, None], r[None, :]).tolist()
        out["mul"] = F.mul(r[:, None], r[None, :]).tolist()
    _emit(out)
    _note(args, f"{F!r}: primitive element {F.primitive}")
    return EXIT_OK


def cmd_group_table(args) -> int:
    G = _group(args.group)
    out = {"group": G.name, "order": G.n, "elements": list(G.elements), "inv": G.inv.tolist(), "mul": G.mul.tolist(), "abelian": G.is_abelian()}
    _emit(out)
    _note(args, f"{G.name}: order {G.n}")
    return EXIT_OK


# --- search --------------------------------------------------------------------


@dataclass(frozen=True)
class SearchConfig:
    field: str
    group: str
    kind: str
    mode: str
    max_weight: int
    seed: int | None
    budget: int
    distance_budget: int

    def canonical(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, separators=(",", ":"))

    def hash(self) -> str:
        return hashlib.sha256(self.canonical().encode()).hexdigest()


def _count_exhaustive(n: int, q: int, w: int, leading_one: bool) -> int:
    per = (lambda s: (q - 1) ** (s - 1)) if leading_one else (lambda s: (q - 1) ** s)
    return sum(math.comb(n, s) * per(s) for s in range(1, w + 1))


def _exhaustive_coeffs(n: int, q: int, w: int, leading_one: bool) -> Iterator[np.ndarray]:
    nz = range(1, q)
    for s in range(1, w + 1):
        for supp in itertools.combinations(range(n), s):
            heads = [1] if leading_one else nz
            for head in heads:
                for tail in itertools.product(nz, repeat=s - 1):
                    c = np.zeros(n, dtype=np.int64)
                    c[list(supp)] = (head, *tail)
                    yield c


def _random_coeffs(n: int, q: int, w: int, rng: np.random.Generator, leading_one: bool) -> np.ndarray:
    s = int(rng.integers(1, w + 1))
    supp = np.sort(rng.choice(n, size=s, replace=False))
    vals = rng.integers(1, q, size=s)
    if leading_one:
        vals[0] = 1
    c = np.zeros(n, dtype=np.int64)
    c[supp] = vals
    return c


def _candidates(cfg: SearchConfig, F: GF, G: GroupTable) -> list[tuple]:
    n, q, w = G.n, F.q, min(cfg.max_weight, G.n)
    pair = cfg.kind == "symplectic-pair"
    if cfg.mode == "exhaustive":
        na = _count_exhaustive(n, q, w, True)
        total = na * _count_exhaustive(n, q, w, False) if pair else na
        if total > cfg.budget:
            raise CliError(f"exhaustive search space has {total} candidates, budget is {cfg.budget}", EXIT_BUDGET)
        A = list(_exhaustive_coeffs(n, q, w, True))
        if not pair:
            return [(c,) for c in A]
        B = list(_exhaustive_coeffs(n, q, w, False))
        return [(a, b) for a in A for b in B]
    if cfg.seed is None:
        raise CliError("random mode needs --seed", EXIT_PARSE)
    rng = np.random.default_rng(cfg.seed)
    out = []
    for _ in range(cfg.budget):
        a = _random_coeffs(n, q, w, rng, True)
        out.append((a, _random_coeffs(n, q, w, rng, False)) if pair else (a,))
    return out


class _Evaluator:
    """Parameters of a screened candidate, cached by the code's RREF."""

    def __init__(self, cfg: SearchConfig, F: GF, G: GroupTable) -> None:
        self.cfg, self.F, self.G = cfg, F, G
        self.cache: dict[bytes, object] = {}

    def __call__(self, cand: tuple) -> tuple[bytes, object]:
        F, G, kind = self.F, self.G, self.cfg.kind
        els = [GroupRingElement(F, G, c) for c in cand]
        a = els[0]
        C = hconcat(F, sigma(a), sigma(els[1])) if kind == "symplectic-pair" else LinearCode(F, sigma(a))
        key = C.basis.tobytes() + bytes(str(C.basis.shape), "ascii")
        if key not in self.cache:
            try:
                self.cache[key] = derive_qecc(C, kind, budget=self.cfg.distance_budget)
            except (BudgetExceeded, CertificateError, ValueError) as exc:
                self.cache[key] = exc
        return key, self.cache[key]


def _symplectic_ok(F: GF, M: np.ndarray) -> bool:
    h = M.shape[1] // 2
    return not F.matmul(np.hstack([F.neg(M[:, h:]), M[:, :h]]), M.T).any()


def run_search(cfg: SearchConfig, threads: int = 1, timestamp: bool = False) -> list[dict]:
    """Records, one per distinct classical code, in canonical order."""
    if cfg.budget <= 0:
        return []
    F, G = _field(cfg.field), _group(cfg.group)
    if cfg.kind not in KINDS:
        raise CliError(f"unknown kind {cfg.kind!r}", EXIT_PARSE)
    if cfg.kind == "hermitian" and F.k != 2:
        raise CliError("hermitian search needs GF(p^2)", EXIT_PARSE)
    cands = _candidates(cfg, F, G)
    ev = _Evaluator(cfg, F, G)
    if threads > 1:
        # the parameter cache is filled serially afterwards so workers only filter
        def screen(c):
            return _screen(cfg.kind, F, G, c)

        with ThreadPoolExecutor(max_workers=threads) as pool:
            passed = [c for c, ok in zip(cands, pool.map(screen, cands, chunksize=64)) if ok]
    else:
        passed = [c for c in cands if _screen(cfg.kind, F, G, c)]

    seen: set[bytes] = set()
    records = []
    chash = cfg.hash()
    for idx, cand in enumerate(passed):
        key, params = ev(cand)
        if key in seen or isinstance(params, Exception):
            continue
        seen.add(key)
        els = [format_element(GroupRingElement(F, G, c)) for c in cand]
        c = params.classical
        records.append(
            {
                "elements": els,
                "classical": {"n": c.n, "k": c.k, "d": c.d, "exact": c.exact},
                "qecc": params.to_json(),
                "certificate": cfg.kind,
                "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()) if timestamp else None,
                "config_hash": chash,
                "_idx": idx,
            }
        )
    records.sort(key=lambda r: (r["qecc"]["n"], -r["qecc"]["d"], -r["qecc"]["k"], r["_idx"]))
    for r in records:
        del r["_idx"]
    return records


def _screen(kind: str, F: GF, G: GroupTable, cand: tuple) -> bool:
    a = GroupRingElement(F, G, cand[0])
    if kind == "euclidean":
        return (a * a.T).is_zero()
    if kind == "hermitian":
        return (a * a.frobenius().T).is_zero()
    if kind == "symplectic":
        return G.n % 2 == 0 and _symplectic_ok(F, sigma(a))
    b = GroupRingElement(F, G, cand[1])
    return (a * b.T - b * a.T).is_zero()


def cmd_search(args) -> int:
    cfg = SearchConfig(
        field=args.field,
        group=args.group,
        kind=args.kind,
        mode=args.mode,
        max_weight=args.max_weight,
        seed=args.seed,
        budget=args.budget,
        distance_budget=args.distance_budget,
    )
    threads = args.threads if args.threads > 0 else (os.cpu_count() or 1)
    records = run_search(cfg, threads=threads, timestamp=args.timestamp)
    lines = "".join(json.dumps(r, sort_keys=True) + "\n" for r in records)
    if args.out:
        with open(args.out, "a", encoding="utf-8") as fh:
            fh.write(lines)
    else:
        sys.stdout.write(lines)
    best = records[0]["qecc"] if records else None
    _note(args, f"{len(records)} distinct codes; config {cfg.hash()[:12]}" + (f"; best [[{best['n']}, {best['k']}, {best['d']}]]" if best else ""))
    return EXIT_OK


# --- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="grcodes", description="Group ring codes and quantum code parameters.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, distance=True):
        p.add_argument("--json-only", action="store_true", help="suppress the stderr summary")
        if distance:
            p.add_argument("--distance-budget", type=int, default=DEFAULT_DISTANCE_BUDGET, help="max codewords enumerated for a distance")
            p.add_argument("--seed", type=int, default=None, help="enables seeded information-set search beyond the budget")
            p.add_argument("--samples", type=int, default=2000, help="information sets sampled when --seed is given")
            p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("code", help="classical parameters of the code generated by sigma(a)")
    p.add_argument("--field", required=True)
    p.add_argument("--group", required=True)
    p.add_argument("--element", required=True)
    p.add_argument("--show-generator", action="store_true")
    common(p)
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("qecc", help="certificate and quantum parameters")
    p.add_argument("--field", required=True)
    p.add_argument("--group", required=True)
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--element", required=True)
    p.add_argument("--element-b")
    common(p)
    p.set_defaults(func=cmd_qecc)

    p = sub.add_parser("twod", help="principal 2D-cyclic code <g> in GF(q)[x,y]/<x^l-1, y^m-1>")
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--field", help="overrides --q, e.g. 'GF(3^2;modulus=2,2,1)'")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--g", required=True)
    common(p)
    p.set_defaults(func=cmd_twod)

    p = sub.add_parser("search", help="search group ring elements for quantum codes (JSON lines)")
    p.add_argument("--field", required=True)
    p.add_argument("--group", required=True)
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--max-weight", type=int, default=4)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--budget", type=int, default=100_000, help="candidate cap")
    p.add_argument("--distance-budget", type=int, default=DEFAULT_DISTANCE_BUDGET)
    p.add_argument("--threads", type=int, default=1, help="0 uses all cores")
    p.add_argument("--out", help="append JSON lines to this file instead of stdout")
    p.add_argument("--timestamp", action="store_true", help="stamp records with the current UTC time")
    p.add_argument("--json-only", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("field-table", help="element encodings and tables of a field")
    p.add_argument("--field", required=True)
    p.add_argument("--json-only", action="store_true")
    p.set_defaults(func=cmd_field_table)

    p = sub.add_parser("group-table", help="element listing and multiplication table")
    p.add_argument("--group", required=True)
    p.add_argument("--json-only", action="store_true")
    p.set_defaults(func=cmd_group_table)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except BudgetExceeded as exc:
        print(f"error: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (PolyError, CertificateError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
