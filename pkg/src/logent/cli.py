"""Command-line front end: ``logent <subcommand> ...``; every report is JSON on stdout.

Exit status: 0 on success, 1 on input or usage errors, 2 when ``verify`` finds a
failing identity.
"""
from __future__ import annotations

import argparse
import hashlib
import itertools
import json
import math
import sys

from . import approx as ap
from . import ditbit as db
from . import formulas as lf
from . import io
from . import joint as ji
from . import measures as pm
from . import partitions as pc
from . import verify as vf
from .errors import LogentError, SchemaError

SIG_DIGITS = 12


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _round(x):
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, float):
        if math.isnan(x):
            return "nan"
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return float(f"{x:.{SIG_DIGITS}g}") + 0.0
    if isinstance(x, dict):
        return {str(k): _round(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_round(v) for v in x]
    if hasattr(x, "item"):
        return _round(x.item())
    return x


def _check(name, lhs, rhs, tol=1e-12):
    diff = abs(lhs - rhs)
    return {"name": name, "lhs": lhs, "rhs": rhs, "diff": diff, "pass": diff <= tol}


class Report:
    def __init__(self, argv):
        self.command = list(argv)
        self.inputs = {}
        self.results = {}
        self.checks = []

    def digest(self):
        blob = json.dumps(self.inputs, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    def to_json(self):
        doc = {
            "command": self.command,
            "inputs_digest": self.digest(),
            "results": self.results,
            "checks": self.checks,
        }
        return json.dumps(_round(doc), indent=2)


def _base(value):
    if value == "e":
        return "e"
    if value == "2":
        return 2
    raise argparse.ArgumentTypeError("base must be 2 or e")


def _load(report, key, path):
    raw = io.read_json(path)
    report.inputs[key] = raw
    return io.from_json_value(raw)


def _want(obj, kind, what):
    if not isinstance(obj, kind):
        raise SchemaError(f"{what}: expected a {kind.__name__} document, got {type(obj).__name__}")
    return obj


def _as_dist(obj, what):
    if isinstance(obj, pc.Universe):
        return pm.Dist(obj.p)
    return _want(obj, pm.Dist, what)


# ---------------------------------------------------------------- entropy


def cmd_entropy(args, report):
    p = _as_dist(_load(report, "dist", args.dist), "--dist")
    r = report.results
    r["h"] = pm.logical_entropy(p)
    r["H"] = pm.shannon_entropy(p, args.base)
    r["rho"] = pm.repeat_rate(p)
    r["E"] = pm.numbers_equivalent_entropy(p)
    report.checks.append(_check("h = 1 - rho", r["h"], 1 - r["rho"]))
    log_E = math.log(r["E"]) if args.base == "e" else math.log2(r["E"])
    report.checks.append(_check("log E = H", log_E, r["H"], 1e-9))
    if args.against:
        q = _as_dist(_load(report, "against", args.against), "--against")
        r["h(p||q)"] = pm.cross_entropy_logical(p, q)
        r["H(p||q)"] = pm.cross_entropy_shannon(p, q, base=args.base)
        r["H_s(p||q)"] = pm.cross_entropy_shannon(p, q, True, args.base)
        r["D(p||q)"] = pm.kl_divergence(p, q, base=args.base)
        r["D_s(p||q)"] = pm.kl_divergence(p, q, True, args.base)
        r["d(p||q)"] = pm.logical_divergence(p, q)
        chain = pm.mixing_check(p, q)
        r["mixing"] = chain._asdict()
        hq = pm.logical_entropy(q)
        report.checks.append(_check("d = h(p||q) - (h(p)+h(q))/2", r["d(p||q)"], r["h(p||q)"] - (r["h"] + hq) / 2))
        report.checks.append(
            _check("h((p+q)/2) = h(p||q)/2 + (h(p)+h(q))/4", chain.mixture, chain.cross / 2 + chain.average / 2)
        )


# ---------------------------------------------------------------- joint


def _axis_label(j, axes):
    return ",".join(j.names[a] for a in axes)


def joint_results(j, base=2, full=True):
    r = {}
    axes = range(j.ndim)
    subsets = [K for k in range(1, j.ndim + 1) for K in itertools.combinations(axes, k)]
    for K in subsets:
        r[f"h({_axis_label(j, K)})"] = ji.joint_logical_entropy(j, K)
    for K in subsets:
        r[f"H({_axis_label(j, K)})"] = ji.shannon_joint(j, K, base)
    if j.ndim >= 2:
        r[f"m({_axis_label(j, axes)})"] = ji.mutual_logical_info(j, tuple(axes))
        r[f"I({_axis_label(j, axes)})"] = ji.shannon_mutual(j, tuple(axes), base=base)
    if not full:
        return r
    for a, b in itertools.permutations(axes, 2):
        r[f"h({j.names[a]}|{j.names[b]})"] = ji.conditional_logical_entropy(j, a, b)
        r[f"H({j.names[a]}|{j.names[b]})"] = ji.shannon_conditional(j, a, b, base)
    for a, b in itertools.combinations(axes, 2):
        r[f"m({j.names[a]},{j.names[b]})"] = ji.mutual_logical_info(j, (a, b))
        r[f"I({j.names[a]},{j.names[b]})"] = ji.shannon_mutual(j, (a, b), base=base)
        for c in axes:
            if c not in (a, b):
                r[f"m({j.names[a]},{j.names[b]}|{j.names[c]})"] = ji.mutual_logical_info(j, (a, b), c)
                r[f"I({j.names[a]},{j.names[b]}|{j.names[c]})"] = ji.shannon_mutual(j, (a, b), c, base)
    r["independence"] = {
        f"{_axis_label(j, L)}|{_axis_label(j, R)}": v for (L, R), v in ji.independence_report(j).items()
    }
    r["pairwise_independence"] = {
        f"{j.names[a]}|{j.names[b]}": ji.is_independent(j, a, b) for a, b in itertools.combinations(axes, 2)
    }
    r["ditsets_intersect"] = [
        {
            "axes": _axis_label(j, rec.axes),
            "h_first": rec.h_first,
            "h_second": rec.h_second,
            "m": rec.mutual,
            "premise": rec.premise,
            "holds": rec.holds,
            "witness": [list(rec.witness[0]), list(rec.witness[1])] if rec.witness else None,
        }
        for rec in ji.ditsets_intersect_check(j)
    ]
    return r


def joint_checks(j):
    out = []
    mu = lambda s: ji.measure_infoset(j, s)  # noqa: E731
    axes = tuple(range(j.ndim))
    out.append(_check("h(all) = mu(S_vN)", ji.joint_logical_entropy(j, axes), mu(ji.differs_any(axes))))
    if j.ndim >= 2:
        out.append(_check("m(all) = mu(S_^N)", ji.mutual_logical_info(j, axes), mu(ji.differs_all(axes))))
        h = lambda *K: ji.joint_logical_entropy(j, K)  # noqa: E731
        out.append(_check("h(X,Y) = h(X|Y) + h(Y)", h(0, 1), ji.conditional_logical_entropy(j, 0, 1) + h(1)))
        out.append(_check("m(X,Y) = h(X) + h(Y) - h(X,Y)", ji.mutual_logical_info(j, (0, 1)), h(0) + h(1) - h(0, 1)))
    return out


def cmd_joint(args, report):
    if args.builtin:
        j = ji.abramson()
        report.inputs["builtin"] = args.builtin
    elif args.file:
        j = _want(_load(report, "joint", args.file), ji.JointDist, "--file")
    else:
        raise UsageError("joint: one of --file or --builtin is required")
    report.results["axes"] = list(j.axes)
    report.results.update(joint_results(j, args.base, args.report == "all"))
    report.checks.extend(joint_checks(j))


# ---------------------------------------------------------------- partition


def _parse_blocks(text, universe, report, key):
    if text.lstrip().startswith("{") or text.endswith(".json"):
        raw = json.loads(text) if text.lstrip().startswith("{") else io.read_json(text)
        report.inputs[key] = raw
        return io.partition_from_json(raw, universe)
    report.inputs[key] = text
    try:
        blocks = [[int(i) for i in b.split(",") if i.strip()] for b in text.split("|")]
    except ValueError:
        raise SchemaError(f"{key}: blocks must look like '0,1|2,3'") from None
    if universe is None:
        universe = max(max(b) for b in blocks if b) + 1
    return pc.make_partition(universe, blocks)


def _partition_summary(p):
    return {
        "blocks": [list(b) for b in p.blocks],
        "dits": len(pc.ditset(p)),
        "h": pm.logical_entropy_partition(p),
        "h_rescaled": pm.rescaled_logical_entropy(p),
        "block_probs": p.block_probs().tolist(),
    }


def cmd_partition(args, report):
    universe = None
    if args.universe:
        universe = _want(_load(report, "universe", args.universe), pc.Universe, "--universe")
    elif args.n is not None:
        universe = pc.Universe.uniform(args.n)
        report.inputs["n"] = args.n
    pi = _parse_blocks(args.pi, universe, report, "pi")
    r = report.results
    r["pi"] = _partition_summary(pi)
    report.checks.append(
        _check("h(pi) = mu(dit(pi))", r["pi"]["h"], pm.product_measure(pi.universe.p, pc.ditset(pi)))
    )
    if args.sigma:
        sigma = _parse_blocks(args.sigma, pi.universe, report, "sigma")
        r["sigma"] = _partition_summary(sigma)
        r["join"] = [list(b) for b in pc.join(pi, sigma).blocks]
        r["meet"] = [list(b) for b in pc.meet(pi, sigma).blocks]
        r["sigma=>pi"] = [list(b) for b in pc.implication(sigma, pi).blocks]
        r["pi=>sigma"] = [list(b) for b in pc.implication(pi, sigma).blocks]
        r["sigma refines pi"] = pc.refines(sigma, pi)
        r["pi refines sigma"] = pc.refines(pi, sigma)
        union = pc.ditset(pi) | pc.ditset(sigma)
        report.checks.append(_check("dit(join) = dit(pi) | dit(sigma)", float(pc.ditset(pc.join(pi, sigma)) == union), 1.0))


# ---------------------------------------------------------------- validity


def cmd_validity(args, report):
    report.inputs.update(formula=args.formula, n=args.n, mode=args.mode)
    f = lf.parse_formula(args.formula)
    rep = lf.check_validity(f, args.n, args.mode, args.budget)
    report.results.update(rep.to_dict())


# ---------------------------------------------------------------- transform


def cmd_transform(args, report):
    kind = db.FormKind(args.kind)
    base = args.base
    if kind in (db.FormKind.CROSS, db.FormKind.DIVERGENCE):
        if not (args.dist and args.against):
            raise UsageError(f"transform --kind {kind.value} needs --dist and --against")
        p = _as_dist(_load(report, "dist", args.dist), "--dist")
        q = _as_dist(_load(report, "against", args.against), "--against")
        form = db.build_avg_form(kind, (p, q), symmetrized=not args.asymmetric)
        if kind is db.FormKind.CROSS:
            sym = not args.asymmetric
            logical = pm.cross_entropy_logical(p, q)
            shannon = pm.cross_entropy_shannon(p, q, sym, base)
        else:
            logical, shannon = pm.logical_divergence(p, q), pm.kl_divergence(p, q, True, base)
    else:
        if args.builtin:
            data = ji.abramson()
            report.inputs["builtin"] = args.builtin
        elif args.file:
            data = _load(report, "file", args.file)
        elif args.dist:
            data = _load(report, "dist", args.dist)
        else:
            raise UsageError("transform: one of --file, --builtin or --dist is required")
        if isinstance(data, pc.Universe):
            data = pm.Dist(data.p)
        form = db.build_avg_form(kind, data)
        if kind is db.FormKind.ENTROPY:
            if isinstance(data, ji.JointDist):
                axes = tuple(range(data.ndim))
                logical, shannon = ji.joint_logical_entropy(data, axes), ji.shannon_joint(data, axes, base)
            else:
                logical, shannon = pm.logical_entropy(data), pm.shannon_entropy(data, base)
        elif kind is db.FormKind.CONDITIONAL:
            logical, shannon = ji.conditional_logical_entropy(data, 0, 1), ji.shannon_conditional(data, 0, 1, base)
        else:
            axes = (0, 1) if kind is db.FormKind.MUTUAL else (0, 1, 2)
            logical, shannon = ji.mutual_logical_info(data, axes), ji.shannon_mutual(data, axes, base=base)
    bit = db.dit_bit_transform(form)
    r = report.results
    r["kind"] = kind.value
    if args.show_form:
        r["form_dit"] = str(form).splitlines()
        r["form_bit"] = str(bit).splitlines()
    r["dit_value"] = db.eval_avg_form(form, base)
    r["bit_value"] = db.eval_avg_form(bit, base)
    r["logical_reference"] = logical
    r["shannon_reference"] = shannon
    report.checks.append(_check("eval(dit form) = logical", r["dit_value"], logical))
    report.checks.append(_check("eval(bit form) = Shannon", r["bit_value"], shannon))


# ---------------------------------------------------------------- approx


def _counts(text):
    try:
        return [int(c) for c in text.split(",") if c.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("counts must look like 50,50") from None


def cmd_approx(args, report):
    r = report.results
    if args.what == "stirling":
        report.inputs["counts"] = args.counts
        r.update(ap.stirling_report(args.counts))
        two = ap.stirling_two_term(args.counts)
        report.checks.append(_check("two-term = H_e", two, pm.shannon_entropy(ap.Occupancy(tuple(args.counts)).probs, "e")))
    elif args.what == "mercator":
        p = _as_dist(_load(report, "dist", args.dist), "--dist")
        report.inputs["terms"] = args.terms
        approx = ap.mercator_entropy_approx(p, args.terms)
        exact = pm.shannon_entropy(p, "e")
        r.update(terms=args.terms, approx=approx, H_e=exact, h=pm.logical_entropy(p), abs_error=abs(approx - exact))
    elif args.what == "typical":
        p = _as_dist(_load(report, "dist", args.dist), "--dist")
        report.inputs["n"] = args.n
        stats = ap.typical_set_stats(p, args.n)
        r.update(vars(stats))
        report.checks.append(_check("log2(1/P) = H2", -math.log2(stats.per_letter_prob), stats.bits_per_letter, 1e-9))
    elif args.what == "bincode":
        report.inputs["m"] = args.m
        parts = ap.binary_partition_decomposition(args.m)
        r["m"] = args.m
        r["universe_size"] = 2**args.m
        r["partitions"] = [[list(b) for b in p.blocks] for p in parts]
        top = pc.discrete(2**args.m)
        joined = pc.indiscrete(2**args.m)
        for p in parts:
            joined = pc.join(joined, p)
        r["join_is_discrete"] = joined == top
        r["bits"] = pm.hartley_entropy(2**args.m)
        report.checks.append(_check("join of binary partitions = 1", float(joined == top), 1.0))


# ---------------------------------------------------------------- verify


def cmd_verify(args, report):
    report.inputs.update(seed=args.seed, cases=args.cases)
    results = vf.run_suite(args.seed, args.cases)
    report.results["identities"] = len(results)
    report.results["all_pass"] = all(r.passed for r in results)
    report.checks.extend(r.as_dict() for r in results)
    return 0 if report.results["all_pass"] else 2


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--base", type=_base, default=2, help="logarithm base: 2 or e (default 2)")
    common.add_argument("--format", choices=["json"], default="json")

    parser = _Parser(prog="logent", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("entropy", parents=[common], help="single-distribution measures")
    p.add_argument("--dist", required=True)
    p.add_argument("--against")
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("joint", parents=[common], help="compound entropies of a joint")
    p.add_argument("--file")
    p.add_argument("--builtin", choices=["abramson"])
    p.add_argument("--report", choices=["all", "summary"], default="all")
    p.set_defaults(func=cmd_joint)

    p = sub.add_parser("partition", parents=[common], help="partition algebra on one or two partitions")
    p.add_argument("--pi", required=True, help="blocks like '0,1|2,3' or a partition JSON file")
    p.add_argument("--sigma")
    p.add_argument("--universe")
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("validity", parents=[common], help="exhaustive formula validity")
    p.add_argument("--formula", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=["partition", "subset"], default="partition")
    p.add_argument("--budget", type=int, default=lf.VALIDITY_BUDGET)
    p.set_defaults(func=cmd_validity)

    p = sub.add_parser("transform", parents=[common], help="dit-bit transform of an average form")
    p.add_argument("--kind", required=True, choices=[k.value for k in db.FormKind])
    p.add_argument("--file")
    p.add_argument("--builtin", choices=["abramson"])
    p.add_argument("--dist")
    p.add_argument("--against")
    p.add_argument("--asymmetric", action="store_true", help="cross only: use sum p_i (1 - q_i)")
    p.add_argument("--show-form", action="store_true")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("approx", help="Stirling, Mercator, typical sets, binary codes")
    asub = p.add_subparsers(dest="what", required=True, parser_class=_Parser)
    a = asub.add_parser("stirling", parents=[common])
    a.add_argument("--counts", type=_counts, required=True)
    a = asub.add_parser("mercator", parents=[common])
    a.add_argument("--dist", required=True)
    a.add_argument("--terms", type=int, default=20)
    a = asub.add_parser("typical", parents=[common])
    a.add_argument("--dist", required=True)
    a.add_argument("--n", type=int, default=100)
    a = asub.add_parser("bincode", parents=[common])
    a.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("verify", parents=[common], help="run the seeded identity suite")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--cases", type=int, default=1000)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        report = Report(argv)
        code = args.func(args, report) or 0
    except UsageError as exc:
        print(exc, file=stderr)
        return 1
    except (LogentError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    print(report.to_json(), file=stdout)
    return code


def main():
    sys.exit(run())
