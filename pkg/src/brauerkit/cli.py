"""Command-line driver: verification campaigns, element dumps, multiplicity tables.

    python -m brauerkit verify --n 2 --r 3,4 --checks kernel,chain
    python -m brauerkit element E_ij --i 2 --j 2 --n 3 --r 4
    python -m brauerkit multiplicities --n 2 --r 4 --format csv

Exit codes: 0 every check passed, 1 some check failed, 2 bad configuration
or a size bound was hit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
import time
from dataclasses import dataclass, field

from . import algebra, cellular, relations, tensorrep
from .diagram import MAX_STRANDS, generator_e
from .exactalg import GF, QQ, Ring, is_prime, subspace_equal

CHECKS = ("presentation", "fft", "annihilation", "quasi-idempotent", "kernel", "chain", "radical", "modp")
KERNEL_CHECKS = {"annihilation", "quasi-idempotent", "kernel", "chain", "radical", "modp"}


class ConfigError(ValueError):
    pass


@dataclass
class CampaignConfig:
    n: list[int]
    r: list[int]
    ring: str = "q"
    checks: list[str] = field(default_factory=lambda: list(CHECKS))
    out: str | None = None
    format: str = "json"
    max_dim: int = tensorrep.MAX_DIM
    timing: bool = False

    def validate(self) -> None:
        if not self.n or not self.r:
            raise ConfigError("need at least one value of n and of r")
        if any(x < 1 for x in self.n + self.r):
            raise ConfigError("n and r must be positive")
        unknown = set(self.checks) - set(CHECKS)
        if unknown:
            raise ConfigError(f"unknown checks: {', '.join(sorted(unknown))}")
        if self.format not in ("json", "csv"):
            raise ConfigError(f"unknown format {self.format!r}")
        p = ring_prime(self.ring)
        if p is not None and set(self.checks) & KERNEL_CHECKS:
            bad = [n for n in self.n if p <= 2 * (n + 1)]
            if bad:
                raise ConfigError(f"F_{p} is too small for kernel checks at n={bad[0]}: need p > {2 * (bad[0] + 1)}")


def ring_prime(spec: str) -> int | None:
    spec = spec.strip().lower()
    if spec == "q":
        return None
    m = re.fullmatch(r"fp:(\d+)", spec)
    if not m:
        raise ConfigError(f"ring must be 'q' or 'fp:<p>', got {spec!r}")
    p = int(m.group(1))
    if p == 2 or not is_prime(p):
        raise ConfigError(f"{p} is not an odd prime")
    return p


def make_ring(spec: str, n: int) -> Ring:
    p = ring_prime(spec)
    return QQ(n) if p is None else GF(p, n)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in str(text).split(",") if x.strip()]
    except ValueError:
        raise ConfigError(f"expected a comma-separated list of integers, got {text!r}") from None


# ---------------------------------------------------------------------------
# check suites; each returns (passed, details)


class _Skip(Exception):
    pass


def _need_kernel_range(n: int, r: int) -> None:
    if r < n + 1:
        raise _Skip(f"needs r >= n+1 = {n + 1}")


def _bound(n: int, r: int, cfg: CampaignConfig) -> None:
    tensorrep.check_bound(n, r, cfg.max_dim)
    if r > MAX_STRANDS:
        raise tensorrep.SizeBoundError(f"r={r} exceeds the diagram enumeration bound {MAX_STRANDS}")


def run_presentation(n, r, ring, cfg):
    if r > MAX_STRANDS:
        raise tensorrep.SizeBoundError(f"r={r} exceeds {MAX_STRANDS}")
    failed = algebra.failed_relations(r)
    return not failed, {"failed": failed}


def run_fft(n, r, ring, cfg):
    _bound(n, r, cfg)
    return tensorrep.check_fft_commute(n, r, cfg.max_dim), {}


def run_annihilation(n, r, ring, cfg):
    _need_kernel_range(n, r)
    if r > MAX_STRANDS + 2:
        raise tensorrep.SizeBoundError(f"r={r} too large")
    cat = relations.KernelCatalog(n, r, ring)
    es = [algebra.element(generator_e(j, j + 1, r), ring) for j in range(1, r)]
    bad = []
    for i in range(cat.top_index + 1):
        E = cat.E_i(i)
        for j, ej in enumerate(es[:n], 1):
            if ej * E != 0 or E * ej != 0:
                bad.append(f"E_{i} e_{j}")
    pairs = 0
    for p in cat.pairs():
        E = cat.E_ij(p.i, p.j)
        pairs += 1
        for l in range(1, p.i + p.j):
            if es[l - 1] * E != 0:
                bad.append(f"e_{l} E_{p.i}{p.j}")
    return not bad, {"failed": bad, "pairs": pairs}


def run_quasi_idempotent(n, r, ring, cfg):
    _need_kernel_range(n, r)
    cat = relations.KernelCatalog(n, r, ring)
    bad = []
    for i in range(cat.top_index + 1):
        E = cat.E_i(i)
        c = relations.quasi_idempotent_constant(i, n)
        if E * E != E.scale(c):
            bad.append(f"E_{i}")
    return not bad, {"failed": bad}


def _kernel_compare(n, r, ring, cfg):
    _bound(n, r, cfg)
    ker = tensorrep.kernel_nu(n, r, ring, cfg.max_dim)
    if r < n + 1:
        return ker.dim == 0, {"dim_kernel": ker.dim, "dim_ideal": 0}
    E = relations.kernel_generator(n, r, ring)
    ideal = algebra.ideal_span([E])
    return subspace_equal(ideal, ker), {"dim_kernel": ker.dim, "dim_ideal": ideal.dim}


def run_kernel(n, r, ring, cfg):
    return _kernel_compare(n, r, ring, cfg)


def run_chain(n, r, ring, cfg):
    _need_kernel_range(n, r)
    _bound(n, r, cfg)
    cat = relations.KernelCatalog(n, r, ring)
    bad = []
    for i in range(1, cat.top_index + 1):
        if not algebra.ideal_membership(cat.E_i(i - 1), cat.E_i(i)):
            bad.append(f"E_{i - 1} in <E_{i}>")
    span = algebra.ideal_span([cat.E])
    for p in cat.pairs():
        for x, name in ((cat.E_ij(p.i, p.j), f"E_{p.i}{p.j}"), (cat.E_ij_star(p.i, p.j), f"E_{p.i}{p.j}*")):
            if not span.contains(algebra.sparse_vector(x)):
                bad.append(f"{name} in <E>")
    return not bad, {"failed": bad}


def run_radical(n, r, ring, cfg):
    _need_kernel_range(n, r)
    _bound(n, r, cfg)
    bad = []
    for lam in cellular.lambda0_set(n, r):
        if not cellular.check_rad_eq_ideal(lam, n, r, ring=ring):
            bad.append(str(lam))
    rep = cellular.multiplicity_report(n, r, ring)
    rank = tensorrep.rank_nu(n, r, ring, cfg.max_dim)
    ok = not bad and rep.checksum == rank
    return ok, {"failed": bad, "checksum": rep.checksum, "rank_nu": rank}


def run_modp(n, r, ring, cfg):
    _need_kernel_range(n, r)
    p = ring.p if ring.kind == "Fp" else _smallest_prime_above(2 * (n + 1))
    fp = GF(p, n)
    E = relations.kernel_generator(n, r)
    integral = relations.is_plus_minus_one(E)
    Ep = algebra.reduce_mod_p(E, p)
    es = [algebra.element(generator_e(j, j + 1, r), fp) for j in range(1, r)]
    ann = all(e * Ep == 0 and Ep * e == 0 for e in es[:n])
    ok, details = _kernel_compare(n, r, fp, cfg)
    details.update({"p": p, "integral": integral, "annihilated": ann})
    return ok and integral and ann, details


def _smallest_prime_above(m: int) -> int:
    p = m + 1
    while not is_prime(p) or p == 2:
        p += 1
    return p


SUITES = {
    "presentation": run_presentation,
    "fft": run_fft,
    "annihilation": run_annihilation,
    "quasi-idempotent": run_quasi_idempotent,
    "kernel": run_kernel,
    "chain": run_chain,
    "radical": run_radical,
    "modp": run_modp,
}


@dataclass
class CampaignResult:
    records: list[dict]

    @property
    def passed(self) -> bool:
        return all(rec["status"] in ("pass", "skip") for rec in self.records)

    def to_json(self) -> str:
        return json.dumps({"passed": self.passed, "results": self.records}, indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["check", "n", "r", "ring", "status", "details"])
        for rec in self.records:
            w.writerow([rec["check"], rec["n"], rec["r"], rec["ring"], rec["status"],
                        json.dumps(rec["details"], sort_keys=True)])
        return buf.getvalue()


def cmd_verify(cfg: CampaignConfig) -> CampaignResult:
    cfg.validate()
    records = []
    for n in cfg.n:
        ring = make_ring(cfg.ring, n)
        for r in cfg.r:
            for check in cfg.checks:
                t0 = time.perf_counter()
                try:
                    ok, details = SUITES[check](n, r, ring, cfg)
                    status = "pass" if ok else "fail"
                except _Skip as exc:
                    status, details = "skip", {"reason": str(exc)}
                rec = {"check": check, "n": n, "r": r, "ring": cfg.ring, "status": status, "details": details}
                if cfg.timing:
                    rec["seconds"] = round(time.perf_counter() - t0, 3)
                records.append(rec)
    return CampaignResult(records)


# ---------------------------------------------------------------------------
# element


def _parse_index_name(name: str) -> tuple[str, int | None]:
    m = re.fullmatch(r"(E|F)_(\d+)", name)
    if m:
        return m.group(1) + "_i", int(m.group(2))
    return name, None


def cmd_element(name: str, n: int, r: int, ring: Ring, i=None, j=None, S=None, Sp=None, beta=None, star=False):
    base, idx = _parse_index_name(name)
    if idx is not None:
        i = idx
    if base == "E":
        x = relations.kernel_generator(n, r, ring)
    elif base == "E_i":
        x = relations.kernel_element(_need(i, "--i"), n, r, ring)
    elif base == "F_i":
        x = relations.split_alternator(_need(i, "--i"), n, r, ring)
    elif base == "E_ij":
        x = relations.deficiency_element(relations.DeficiencyPair(_need(i, "--i"), _need(j, "--j"), n), r, ring)
    elif base == "b":
        t = relations.RelationTriple(n, r, tuple(_need(S, "--S")), tuple(_need(Sp, "--Sp")), tuple(beta or ()))
        x = relations.relation_element(t, ring)
    else:
        raise ConfigError(f"unknown element {name!r}; use E, E_i, F_i, E_ij or b")
    return algebra.apply_star(x) if star else x


def _need(value, flag):
    if value is None:
        raise ConfigError(f"missing {flag}")
    return value


def _pairs(text: str | None):
    if not text:
        return ()
    out = []
    for tok in text.split():
        a, _, b = tok.partition("-")
        out.append((int(a), int(b)))
    return tuple(out)


# ---------------------------------------------------------------------------
# argument handling


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ConfigError("config file must hold a JSON object")
    return data


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="brauerkit", description="Exact computations in Brauer algebras.")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites over an (n, r) grid")
    v.add_argument("--n")
    v.add_argument("--r")
    v.add_argument("--ring")
    v.add_argument("--checks")
    v.add_argument("--format", choices=("json", "csv"))
    v.add_argument("--out")
    v.add_argument("--max-dim", type=int)
    v.add_argument("--config")
    v.add_argument("--timing", action="store_true", default=None, help="include wall time per check")

    e = sub.add_parser("element", help="print a kernel element as JSON")
    e.add_argument("name")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--r", type=int)
    e.add_argument("--i", type=int)
    e.add_argument("--j", type=int)
    e.add_argument("--S", help="comma list")
    e.add_argument("--Sp", help="comma list")
    e.add_argument("--beta", help='space separated pairs, e.g. "5-6 7-8"')
    e.add_argument("--ring", default="q")
    e.add_argument("--star", action="store_true")

    m = sub.add_parser("multiplicities", help="table of dim I_lambda")
    m.add_argument("--n")
    m.add_argument("--r")
    m.add_argument("--ring")
    m.add_argument("--format", choices=("json", "csv"))
    m.add_argument("--out")
    m.add_argument("--max-dim", type=int)
    m.add_argument("--config")
    return ap


def _merge(args, keys) -> dict:
    merged = _load_config(getattr(args, "config", None))
    for k in keys:
        val = getattr(args, k, None)
        if val is not None:
            merged[k] = val
    return merged


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _as_list(value) -> list[int]:
    if isinstance(value, list):
        return [int(x) for x in value]
    return _int_list(value)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            opts = _merge(args, ["n", "r", "ring", "checks", "format", "out", "max_dim", "timing"])
            checks = opts.get("checks", list(CHECKS))
            if isinstance(checks, str):
                checks = [c.strip() for c in checks.split(",") if c.strip()]
            cfg = CampaignConfig(
                n=_as_list(opts.get("n", "")), r=_as_list(opts.get("r", "")),
                ring=str(opts.get("ring", "q")), checks=checks, out=opts.get("out"),
                format=opts.get("format", "json"), max_dim=int(opts.get("max_dim", tensorrep.MAX_DIM)),
                timing=bool(opts.get("timing", False)),
            )
            result = cmd_verify(cfg)
            _emit(result.to_json() if cfg.format == "json" else result.to_csv(), cfg.out)
            return 0 if result.passed else 1

        if args.command == "element":
            r = args.r if args.r is not None else args.n + 1
            ring = make_ring(args.ring, args.n)
            x = cmd_element(args.name, args.n, r, ring, args.i, args.j,
                            _int_list(args.S) if args.S else None,
                            _int_list(args.Sp) if args.Sp else None,
                            _pairs(args.beta), args.star)
            sys.stdout.write(x.to_json() + "\n")
            return 0

        opts = _merge(args, ["n", "r", "ring", "format", "out", "max_dim"])
        ns, rs = _as_list(opts.get("n", "")), _as_list(opts.get("r", ""))
        if not ns or not rs:
            raise ConfigError("need --n and --r")
        fmt = opts.get("format", "json")
        max_dim = int(opts.get("max_dim", tensorrep.MAX_DIM))
        ok = True
        chunks = []
        for n in ns:
            ring = make_ring(str(opts.get("ring", "q")), n)
            for r in rs:
                tensorrep.check_bound(n, r, max_dim)
                rep = cellular.multiplicity_report(n, r, ring)
                rank = tensorrep.rank_nu(n, r, ring, max_dim)
                ok &= rep.checksum == rank
                if fmt == "csv":
                    chunks.append(rep.to_csv())
                else:
                    obj = rep.to_json_obj()
                    obj["rank_nu"] = rank
                    chunks.append(obj)
        if fmt == "csv":
            text = "".join(chunks)
        else:
            text = json.dumps(chunks[0] if len(chunks) == 1 else chunks, indent=2) + "\n"
        _emit(text, opts.get("out"))
        return 0 if ok else 1
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
