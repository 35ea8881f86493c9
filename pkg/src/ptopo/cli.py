"""Command-line interface.

Exit codes: 0 all pass / exhausted / predicate holds, 1 law violated /
witness found / predicate fails / modification absent, 2 input or usage
error, 3 budget exceeded.
"""

from __future__ import annotations

import json
import sys

import click

from . import config
from .axioms import TOPOLOGICAL_METHODS, check_diagonal_axiom, is_p_regular, is_p_topological
from .constructions import Enumeration, lattice_ops
from .convergence import classify, closure_set, filter_operator, interior_set, iterate_operator
from .errors import BudgetExceeded, NoExtremumFinding, PtopoError
from .hunt import CONJECTURES, hunt
from .io import describe, document, parse_space, serialize
from .kernel import Filter
from .modifications import (
    finest_coarser_satisfying,
    lower_modification,
    open_sets,
    simple_modification,
    upper_modification,
)
from .preservation import CHECKS, run_check
from .series import ordinal_series
from .suites import SUITES, Source, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

_DEFAULTS = {"c3": True, "max_n": None, "seed": 0, "budget_ms": None, "format": "json"}


def _emit(ctx: click.Context, payload: dict, text: str) -> None:
    if ctx.obj["format"] == "json":
        click.echo(json.dumps(payload, separators=(",", ":")))
    else:
        click.echo(text)


def _read(stream) -> "object":
    return parse_space(stream.read())


def _names(value: str | None) -> list[str]:
    if not value:
        return []
    return [v.strip() for v in value.split(",") if v.strip()]


def _root_obj(ctx: click.Context) -> dict:
    """Settings shared by the group and its commands; config is restored on exit."""
    root = ctx.find_root()
    if root.obj is None:
        root.obj = dict(_DEFAULTS)
    if "_saved" not in root.obj:
        saved = root.obj["_saved"] = config.get()
        root.call_on_close(lambda: config.configure(**saved.__dict__))
    return root.obj


def _apply(ctx: click.Context, key: str, value) -> None:
    obj = _root_obj(ctx)
    obj[key] = value
    if key == "c3":
        config.configure(c3=value)
    elif key == "max_n":
        config.configure(max_structures_n=value, max_topologies_n=max(value, config.get().max_topologies_n))


def _override(key: str):
    def callback(ctx, param, value):
        if value is not None:
            _apply(ctx, key, value)
        return value

    return callback


_SHARED = [
    ("--c3/--no-c3", "c3", dict(help="Require closure under meets with the point filter (default on).")),
    ("--max-n", "max_n", dict(type=int, help="Largest carrier size for enumeration and hunts.")),
    ("--seed", "seed", dict(type=int, help="Seed for random instance streams (default 0).")),
    ("--budget-ms", "budget_ms", dict(type=float, help="Wall-time budget for suites and hunts.")),
    ("--format", "format", dict(type=click.Choice(["json", "text"]), help="Output format (default json).")),
]


def shared_options(f):
    """The global flags, accepted before or after the command name."""
    for decl, key, extra in reversed(_SHARED):
        f = click.option(decl, key, default=None, expose_value=False, callback=_override(key), **extra)(f)
    return f


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@shared_options
@click.pass_context
def cli(ctx):
    """Finite p-topological and p-regular convergence spaces."""
    _root_obj(ctx)


# op -----------------------------------------------------------------------

_SET_OPS = ("closure", "interior")
_FILTER_OPS = ("nbhd", "closure-filter", "interior-filter")


@cli.command()
@shared_options
@click.argument("kind", type=click.Choice(_SET_OPS + _FILTER_OPS + ("classify", "opens", "inf", "sup")))
@click.argument("spaces", type=click.File("r"), nargs=-1, required=True)
@click.option("--set", "subset", help="Comma-separated points (closure / interior).")
@click.option("--filter", "gen", help="Comma-separated generator of a principal filter.")
@click.option("--steps", type=int, default=1, show_default=True, help="Iterations of a filter operator; -1 for the fixed point.")
@click.pass_context
def op(ctx, kind, spaces, subset, gen, steps):
    """Evaluate an operator on a space."""
    qs = [_read(s) for s in spaces]
    q = qs[0]
    if kind in ("inf", "sup"):
        r = lattice_ops(kind, qs)
        _emit(ctx, document(r), describe(r))
    elif kind == "classify":
        c = classify(q)
        payload = {"pretopology": c.is_pretopology, "topology": c.is_topology, "regular": c.is_regular, "T1": c.is_T1}
        _emit(ctx, payload, ", ".join(f"{k}={v}" for k, v in payload.items()))
    elif kind == "opens":
        opens = [q.carrier.names(m) for m in open_sets(q)]
        _emit(ctx, {"opens": opens}, " ".join("{" + ",".join(o) + "}" for o in opens))
    elif kind in _SET_OPS:
        a = q.carrier.subset(_names(subset))
        if kind == "closure":
            out = closure_set(q, a)
        else:
            out = interior_set(q, a)
        _emit(ctx, {"set": out.names}, "{" + ",".join(out.names) + "}")
    else:
        if gen is None:
            raise click.UsageError("filter operators need --filter")
        f = Filter.up(q.carrier, _names(gen))
        op_kind = kind.split("-")[0]
        chain = [f]
        if steps < 0:
            result = iterate_operator(op_kind, q, f, None)
        else:
            for _ in range(steps):
                chain.append(filter_operator(op_kind, q, chain[-1]))
            result = chain[-1]
        text = " -> ".join("up{" + ",".join(g.generator.names) + "}" if g.is_proper else "degenerate" for g in chain)
        if steps < 0:
            text += f" ... fixed point {result.to_json()}"
        _emit(ctx, {"result": result.to_json(), "chain": [g.to_json() for g in chain]}, text)


# check --------------------------------------------------------------------


@cli.command()
@shared_options
@click.argument("predicate", type=click.Choice(["p-topological", "p-regular", "diagonal-F", "diagonal-R", "topology", "regular"]))
@click.argument("q_file", type=click.File("r"))
@click.argument("p_file", type=click.File("r"), required=False)
@click.option("--method", type=click.Choice(TOPOLOGICAL_METHODS), default="nbhd", show_default=True)
@click.option("--max-j", type=int, default=None, help="Index-set bound for the diagonal search (default |X|+1).")
@click.pass_context
def check(ctx, predicate, q_file, p_file, method, max_j):
    """Decide a predicate; exit status 0 when it holds, 1 when it fails."""
    q = _read(q_file)
    p = _read(p_file) if p_file is not None else q
    payload: dict = {"predicate": predicate}
    if predicate == "p-topological":
        holds = is_p_topological(q, p, method)
    elif predicate == "p-regular":
        holds = is_p_regular(q, p)
    elif predicate.startswith("diagonal"):
        v = check_diagonal_axiom(predicate[-1], q, p, max_j)
        holds = v.holds
        payload["bound"] = v.bound
        if not holds:
            sel = v.selection
            payload["witness"] = {
                "index": list(sel.index.points),
                "psi": sel.psi.as_dict(),
                "sigma": {j: s.to_json() for j, s in zip(sel.index.points, sel.sigma)},
                "filter": v.filter.to_json(),
                "point": v.point,
            }
    elif predicate == "topology":
        holds = classify(q).is_topology
    else:
        holds = classify(q).is_regular
    payload["holds"] = holds
    _emit(ctx, payload, f"{predicate}: {'holds' if holds else 'fails'}")
    ctx.exit(EXIT_OK if holds else EXIT_FAIL)


# modify -------------------------------------------------------------------

_MODIFY = (
    "pretopological",
    "topological",
    "lower-topological",
    "lower-regular",
    "upper-topological",
    "upper-regular",
    "regular-structure",
    "regular-topology",
    "completely-regular-topology",
)


@cli.command()
@shared_options
@click.argument("kind", type=click.Choice(_MODIFY))
@click.argument("q_file", type=click.File("r"))
@click.argument("p_file", type=click.File("r"), required=False)
@click.pass_context
def modify(ctx, kind, q_file, p_file):
    """Compute a modification; exit status 1 when an upper modification is absent."""
    q = _read(q_file)
    if kind in ("pretopological", "topological"):
        r = simple_modification(kind, q)
    elif kind.startswith(("lower", "upper")):
        if p_file is None:
            raise click.UsageError(f"{kind} needs a parameter space P_FILE")
        p = _read(p_file)
        side, what = kind.split("-")
        r = (lower_modification if side == "lower" else upper_modification)(what, q, p)
    else:
        r = finest_coarser_satisfying(kind.replace("-", "_"), q)
    if r is None:
        _emit(ctx, {"modification": kind, "exists": False}, f"{kind}: absent")
        ctx.exit(EXIT_FAIL)
    _emit(ctx, document(r), describe(r))


# series -------------------------------------------------------------------


@cli.command()
@shared_options
@click.argument("kind", type=click.Choice(["topological", "regularity"]))
@click.argument("q_file", type=click.File("r"))
@click.pass_context
def series(ctx, kind, q_file):
    """Stages of the topological or regularity series."""
    s = ordinal_series(kind, _read(q_file))
    payload = {
        "kind": kind,
        "length": s.length,
        "stages": [{"index": st.index, "value": document(st.value)} for st in s.stages],
        "limit": document(s.limit),
    }
    lines = [f"{kind} series, length {s.length}"] + [f"  [{st.index}] {describe(st.value)}" for st in s.stages]
    _emit(ctx, payload, "\n".join(lines))


# enumerate ----------------------------------------------------------------


@cli.command(name="enumerate")
@shared_options
@click.argument("kind", type=click.Choice(["structures", "topologies"]))
@click.argument("n", type=int)
@click.pass_context
def enumerate_cmd(ctx, kind, n):
    """Stream every structure (or topology) on n points, one per line, then the count."""
    stream = Enumeration(kind, n)
    for q in stream:
        click.echo(serialize(q) if ctx.obj["format"] == "json" else describe(q))
    if ctx.obj["format"] == "json":
        click.echo(json.dumps({"count": stream.count}))
    else:
        click.echo(f"count {stream.count}")


# suite --------------------------------------------------------------------


@cli.command()
@shared_options
@click.argument("suite_id", type=click.Choice(sorted(SUITES) + sorted(CHECKS) + ["all"]))
@click.argument("source", default="enumerate:2")
@click.argument("files", type=click.Path(exists=True, dir_okay=False), nargs=-1)
@click.option("--hits", type=int, default=500, show_default=True, help="Configurations per randomized preservation check.")
@click.pass_context
def suite(ctx, suite_id, source, files, hits):
    """Run a law suite. SOURCE is enumerate:N, topologies:N, random:N:COUNT or files (paths follow)."""
    seed = ctx.obj["seed"]
    if suite_id in CHECKS and suite_id not in SUITES:
        rep = run_check(suite_id, hits, seed=seed)
        ok = rep.violated == 0
        text = f"{'PASS' if ok else 'FAIL'} {suite_id} {rep.description}: {rep.held} held, {rep.violated} violated, {rep.vacuous} vacuous"
        _emit(ctx, {**rep.to_json(), "ok": ok}, text)
        ctx.exit(EXIT_OK if ok else EXIT_FAIL)
    if source == "files":
        src = Source("files", paths=tuple(files))
    else:
        src = Source.parse(source, seed=seed)
    reports = run_suite(suite_id, src, budget_ms=ctx.obj["budget_ms"])
    ok = all(r.ok for r in reports)
    if ctx.obj["format"] == "json":
        click.echo(json.dumps({"ok": ok, "suites": [r.to_json() for r in reports]}, separators=(",", ":")))
    else:
        click.echo("\n".join(r.text() for r in reports))
    ctx.exit(EXIT_OK if ok else EXIT_FAIL)


# hunt ---------------------------------------------------------------------


@cli.command(name="hunt")
@shared_options
@click.argument("conjecture", type=click.Choice(sorted(CONJECTURES)))
@click.pass_context
def hunt_cmd(ctx, conjecture):
    """Search for a witness on carriers of size 2..max-n (default 3)."""
    max_n = ctx.obj["max_n"] or 3
    v = hunt(conjecture, max_n, budget_ms=ctx.obj["budget_ms"])
    lines = [f"{conjecture}: {v.outcome} (sizes {list(v.searched_sizes)}, {v.examined} instances)"]
    lines += [f"  {t}" for t in v.trace]
    lines += [f"  {d['role']}: {json.dumps({k: d[k] for k in ('points', 'structure')}, separators=(',', ':'))}" for d in v.witness]
    _emit(ctx, v.to_json(), "\n".join(lines))
    ctx.exit(EXIT_FAIL if v.found else EXIT_OK)


def main(argv=None) -> None:
    try:
        rv = cli.main(args=argv, prog_name="ptopo", standalone_mode=False, obj=dict(_DEFAULTS))
    except click.exceptions.Exit as exc:
        sys.exit(exc.exit_code)
    except click.ClickException as exc:
        exc.show()
        sys.exit(EXIT_INPUT)
    except click.exceptions.Abort:
        sys.exit(EXIT_INPUT)
    except BudgetExceeded as exc:
        click.echo(f"budget exceeded: {exc}", err=True)
        sys.exit(EXIT_BUDGET)
    except NoExtremumFinding as exc:
        click.echo(f"finding: {exc}", err=True)
        sys.exit(EXIT_FAIL)
    except PtopoError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT)
    except (OSError, json.JSONDecodeError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT)
    sys.exit(rv if isinstance(rv, int) else EXIT_OK)


if __name__ == "__main__":  # pragma: no cover
    main()
