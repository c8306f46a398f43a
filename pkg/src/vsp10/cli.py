"""Command-line entry point: ``vsp10 <command> [options]``.

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage or
input error, 3 a resource or stabilization limit was hit.  The default prime
comes from the VSP10_PRIME environment variable (else 10007); flags override.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
import time
from dataclasses import dataclass, field

from .exactfield import QQ, is_prime, prime_field
from .groebner import NotStabilized, SolverError
from .pluecker import (
    GOLDEN_PATH,
    PRINTED_PATH,
    CremonaMismatch,
    DualTwoVector,
    cremona_phi,
    golden_tables_text,
    parse_printed_tables,
    pfaffian6_poly,
    quadric_table,
    verify_cremona_identity,
)
from .serialize import FormatError, dump_instance, dump_presentation, dump_report, load_instance
from .vsp import (
    DEFAULT_RETRIES,
    InstanceError,
    NotTransverse,
    decompose,
    degree_suite,
    gamma_of_secant,
    k3_random,
    lemma318_verify,
    relation_counts,
    s_points,
    sample_fprime_point,
    secant_line,
    sixfold_incidence,
    split_incidence_probes,
    stage_rng,
    tenfold_check,
)

DEFAULT_PRIME = 10007
MIN_PRIME = 101
PRIME_ENV = "VSP10_PRIME"

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    prime: int = DEFAULT_PRIME
    seed: int = 1
    retries: int = DEFAULT_RETRIES
    max_degree: int | None = None
    output: str | None = None
    verbose: bool = False
    split_only: bool = False

    def __post_init__(self):
        if not is_prime(self.prime) or self.prime < MIN_PRIME:
            raise UsageError(f"prime must be a prime >= {MIN_PRIME}, got {self.prime}")
        if self.max_degree is not None and self.max_degree < 1:
            raise UsageError("max degree must be positive")

    @property
    def field(self):
        return prime_field(self.prime)


@dataclass
class Record:
    name: str
    expected: str
    observed: str
    ok: bool
    seconds: float = 0.0

    @property
    def status(self) -> str:
        return "pass" if self.ok else "fail"


@dataclass
class Report:
    command: str
    records: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.records)

    def add(self, name, expected, observed, ok=None, seconds=0.0) -> Record:
        ok = (expected == observed) if ok is None else ok
        r = Record(name, str(expected), str(observed), bool(ok), seconds)
        self.records.append(r)
        return r

    def extend(self, other: "Report", prefix: str = "") -> None:
        for r in other.records:
            self.records.append(Record(prefix + r.name, r.expected, r.observed, r.ok, r.seconds))


class _Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start
        return False


# ---------------------------------------------------------------------------
# commands


def cmd_verify_cremona(cfg: RunConfig) -> Report:
    rep = Report("verify-cremona")
    with _Timer() as t:
        try:
            cr = verify_cremona_identity(QQ, spot_checks=100, spot_field=cfg.field, rng=random.Random(f"{cfg.seed}/cremona"))
            observed = f"{cr.pairs_checked}/15 unsigned {cr.unsigned_ok} signed {cr.signed_ok} euler {cr.euler_ok}"
            ok = cr.unsigned_ok and cr.signed_ok and cr.euler_ok
        except CremonaMismatch as exc:
            observed, ok, cr = f"mismatch {exc}", False, None
    rep.add("quadric map squares to m times the identity", "15/15 unsigned True signed True euler True", observed, ok, t.seconds)
    rep.add("partials of the identities", True, bool(cr and cr.partials_ok))
    rep.add("random-point evaluations", 100, cr.spot_checks if cr else 0)
    with _Timer() as t:
        golden = GOLDEN_PATH.read_text()
        same = golden == golden_tables_text(QQ)
    rep.add("golden table file is byte-identical", True, same, seconds=t.seconds)
    printed = parse_printed_tables(PRINTED_PATH.read_text(), QQ)
    table = quadric_table(QQ)
    m = pfaffian6_poly(QQ)
    rep.add("m has 15 terms", 15, len(m.terms))
    match = printed.get("m") == m and all(printed.get(f"q{i}{j}") == q for (i, j), q in table.items())
    rep.add("printed m and q_ij tables match", True, match)
    return rep


def _instance_checks(rep: Report, inst) -> None:
    rep.add("apolar profile", (1, 6, 6, 1), inst.profile)
    rep.add("S dimension and degree", (2, 14), (inst.s_hilbert.dim, inst.s_hilbert.degree))
    with _Timer() as t:
        rf, rm = relation_counts(inst)
    rep.add("quadratic relations of F(S) at least 9", ">= 9", rf, rf >= 9, t.seconds)
    rep.add("quadratic relations of F'(S)", 0, rm, seconds=0.0)


def cmd_k3(cfg: RunConfig):
    rep = Report("k3")
    with _Timer() as t:
        inst = k3_random(cfg.seed, cfg.field, cfg.retries, cfg.max_degree)
    rep.add("instance accepted", True, True, seconds=t.seconds)
    rep.add("sampling attempts", f"<= {cfg.retries}", inst.attempts, inst.attempts <= cfg.retries)
    _instance_checks(rep, inst)
    return rep, dump_instance(inst)


def _parse_point(text: str, F) -> DualTwoVector:
    toks = text.replace(",", " ").split()
    if len(toks) != 15:
        raise UsageError(f"a point of S needs 15 coordinates, got {len(toks)}")
    return DualTwoVector(F, [F.parse(t) for t in toks])


def _auto_secant(inst, rng):
    pts, lengths = s_points(inst, 2, rng=rng)
    return secant_line(pts[0], pts[1]), lengths


def run_decompose(inst, line, cfg: RunConfig, rep: Report, rng, prefix: str = ""):
    with _Timer() as t:
        gamma = gamma_of_secant(inst, line, rng=rng, max_degree=cfg.max_degree)
    rep.add(prefix + "scheme length", 10, gamma.length, seconds=t.seconds)
    sol = gamma.solution
    rep.add(prefix + "points on F'", True, all(inst.m_P.evaluate(p.coords, p.field) == p.field.zero for p in sol.points))
    rep.add(prefix + "residue degrees", "sum 10", sorted(p.degree for p in sol.points), sol.total == 10)
    with _Timer() as t:
        pres = decompose(inst, gamma)
    rep.add(prefix + "power-sum residual is zero", True, pres.exact, seconds=t.seconds)
    rep.add(prefix + "power-sum system rank", 10, pres.rank)
    rep.add(prefix + "conjugate points carry conjugate coefficients", True, pres.galois_equivariant)
    tf = tenfold_check(inst, gamma)
    rep.add(prefix + "distinct points on F' of rank 4", (10, 10, 10), (tf.distinct, tf.on_fprime, tf.rank_four))
    return pres


def cmd_decompose(cfg: RunConfig, instance_text: str, auto: bool, p1: str | None, p2: str | None):
    rep = Report("decompose")
    inst = load_instance(instance_text, cfg.max_degree)
    rng = stage_rng(inst.seed, "decompose")
    if auto or (p1 is None and p2 is None):
        with _Timer() as t:
            line, lengths = _auto_secant(inst, rng)
        rep.add("slice lengths equal the degree of S", 14, sorted(set(lengths)), set(lengths) == {14}, t.seconds)
    else:
        if p1 is None or p2 is None:
            raise UsageError("--p1 and --p2 must be given together")
        a1, a2 = _parse_point(p1, inst.field), _parse_point(p2, inst.field)
        for name, a in (("p1", a1), ("p2", a2)):
            if not inst.in_L(a):
                raise UsageError(f"{name} is not in L_S")
            if any(c != inst.field.zero for c in cremona_phi(a).coords):
                raise UsageError(f"{name} is not a rank-2 point")
        try:
            line = secant_line(a1, a2)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    pres = run_decompose(inst, line, cfg, rep, rng)
    return rep, dump_presentation(pres)


def run_incidence(inst, probes: int, split_only: bool, rep: Report, rng, prefix: str = ""):
    if split_only:
        with _Timer() as t:
            reports, resampled = split_incidence_probes(inst, probes, rng=rng)
        rep.add(prefix + "split probes found", probes, len(reports), seconds=t.seconds)
        rep.add(prefix + "probes re-sampled", ">= 0", resampled, True)
    else:
        reports, resampled = [], 0
        while len(reports) < probes:
            g = sample_fprime_point(inst, rng)
            try:
                reports.append(sixfold_incidence(inst, g, rng=rng))
            except NotTransverse:
                resampled += 1
                if resampled > 50 * probes:
                    raise InstanceError("too many non-transverse probes")
        rep.add(prefix + "probes re-sampled", ">= 0", resampled, True)
    for k, r in enumerate(reports):
        rep.add(f"{prefix}probe {k}: scroll section length", 4, r.scroll_length)
        rep.add(f"{prefix}probe {k}: L_S meets the tangent space in a 4-space", 4, r.slice_dim)
        rep.add(f"{prefix}probe {k}: secant lines whose scheme contains g", 6, sum(r.memberships))
        if r.gamma_lengths:
            rep.add(f"{prefix}probe {k}: scheme lengths", [10] * 6, r.gamma_lengths)
    return reports


def cmd_incidence(cfg: RunConfig, instance_text: str, probes: int, split_only: bool):
    rep = Report("incidence")
    inst = load_instance(instance_text, cfg.max_degree)
    run_incidence(inst, probes, split_only, rep, stage_rng(inst.seed, "incidence"))
    return rep


def cmd_degrees(cfg: RunConfig, primes) -> Report:
    rep = Report("degrees")
    for p in primes:
        with _Timer() as t:
            checks = degree_suite(prime_field(p), cfg.max_degree)
        for c in checks:
            rep.add(f"GF({p}) {c.name}", c.expected, c.observed, c.ok, t.seconds / len(checks))
            if not c.containment:
                rep.add(f"GF({p}) {c.name}: containment", True, False)
    return rep


def cmd_lemma318(cfg: RunConfig, rational: bool) -> Report:
    rep = Report("lemma318")
    fields = [cfg.field] + ([QQ] if rational else [])
    for F in fields:
        with _Timer() as t:
            r = lemma318_verify(F, max_degree=cfg.max_degree)
        rep.add(f"{F} common rank-drop locus", "dim 0 length 10", f"dim {r.dim} length {r.length}", seconds=t.seconds)
        rep.add(f"{F} shared minor x0*x3 - x1*x2", True, r.shared_minor)
        rep.add(f"{F} locus is reduced", True, r.reduced)
        rep.add(f"{F} Terracini rank from the ideal", 56, r.terracini_ideal)
        if r.terracini_points is not None:
            rep.add(f"{F} Terracini rank from the points", 56, r.terracini_points)
    return rep


def cmd_suite(cfg: RunConfig, seeds=(1, 2, 3)) -> Report:
    rep = Report("suite")
    rep.extend(cmd_verify_cremona(cfg), "cremona: ")
    second = _next_prime(cfg.prime)
    rep.extend(cmd_degrees(cfg, [cfg.prime, second]), "degrees: ")
    rep.extend(cmd_lemma318(cfg, rational=True), "lemma318: ")
    for s in seeds:
        inst = k3_random(s, cfg.field, cfg.retries, cfg.max_degree)
        sub = Report("k3")
        _instance_checks(sub, inst)
        rep.extend(sub, f"seed {s}: ")
        rng = stage_rng(s, "suite")
        line, _ = _auto_secant(inst, rng)
        run_decompose(inst, line, cfg, rep, rng, f"seed {s}: ")
        run_incidence(inst, 1, True, rep, rng, f"seed {s}: ")
    return rep


def _next_prime(p: int) -> int:
    q = p + 1
    while not is_prime(q):
        q += 1
    return q


# ---------------------------------------------------------------------------
# argument handling


def _default_prime() -> int:
    raw = os.environ.get(PRIME_ENV)
    if raw is None:
        return DEFAULT_PRIME
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{PRIME_ENV} must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=int, default=None, help=f"field characteristic (default ${PRIME_ENV} or {DEFAULT_PRIME})")
    common.add_argument("--seed", type=int, default=1)
    common.add_argument("--retries", type=int, default=DEFAULT_RETRIES)
    common.add_argument("--max-degree", type=int, default=None, help="cap on the Gröbner basis degree")
    common.add_argument("--output", default=None, help="write the data document here")
    common.add_argument("-v", "--verbose", action="store_true")

    ap = argparse.ArgumentParser(prog="vsp10", description="Power sums of cubic fourfolds apolar to K3 sections of G(2,6).")
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("verify-cremona", parents=[common], help="self-inverse identities of the quadric map")
    sub.add_parser("k3", parents=[common], help="sample a K3 instance")
    d = sub.add_parser("decompose", parents=[common], help="power-sum presentation from a secant line")
    d.add_argument("--instance", required=True)
    d.add_argument("--auto", action="store_true", help="sample the secant line")
    d.add_argument("--p1", help="15 comma-separated coordinates of a point of S")
    d.add_argument("--p2")
    i = sub.add_parser("incidence", parents=[common], help="secant lines through points of F'")
    i.add_argument("--instance", required=True)
    i.add_argument("--probes", type=int, default=3)
    i.add_argument("--split-only", action="store_true")
    g = sub.add_parser("degrees", parents=[common], help="preimage degrees")
    g.add_argument("--primes", default=None, help="comma-separated primes (default: the prime and the next one)")
    l = sub.add_parser("lemma318", parents=[common], help="the explicit ten-point example")
    l.add_argument("--rational", action="store_true")
    sub.add_parser("suite", parents=[common], help="every check")
    return ap


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _emit(rep: Report, doc: str | None, cfg: RunConfig, out) -> None:
    out.write(dump_report(rep))
    if doc is not None:
        if cfg.output:
            with open(cfg.output, "w") as fh:
                fh.write(doc)
        else:
            out.write(doc)


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    err = sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        prime = args.prime if args.prime is not None else _default_prime()
        cfg = RunConfig(prime, args.seed, args.retries, args.max_degree, args.output, args.verbose, getattr(args, "split_only", False))
        doc = None
        if args.command == "verify-cremona":
            rep = cmd_verify_cremona(cfg)
        elif args.command == "k3":
            rep, doc = cmd_k3(cfg)
        elif args.command == "decompose":
            rep, doc = cmd_decompose(cfg, _read(args.instance), args.auto, args.p1, args.p2)
        elif args.command == "incidence":
            if args.probes < 1:
                raise UsageError("--probes must be positive")
            rep = cmd_incidence(cfg, _read(args.instance), args.probes, args.split_only)
        elif args.command == "degrees":
            primes = [int(p) for p in args.primes.split(",")] if args.primes else [cfg.prime, _next_prime(cfg.prime)]
            for p in primes:
                RunConfig(p)
            rep = cmd_degrees(cfg, primes)
        elif args.command == "lemma318":
            rep = cmd_lemma318(cfg, args.rational)
        else:
            rep = cmd_suite(cfg)
    except (UsageError, FormatError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (NotStabilized, InstanceError, SolverError) as exc:
        err.write(f"limit: {exc}\n")
        return EXIT_LIMIT
    except (ValueError, AssertionError) as exc:
        err.write(f"check failed: {exc}\n")
        return EXIT_FAIL
    _emit(rep, doc, cfg, out)
    if cfg.verbose:
        for r in rep.records:
            if not r.ok:
                err.write(f"failed: {r.name}: expected {r.expected}, observed {r.observed}\n")
    return EXIT_OK if rep.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
