"""Command-line entry point ``ncalc``.

Exit codes: 0 success, 1 a check failed or the input was rejected,
2 usage or parse error, 3 a size cap was exceeded.
"""

import json
import sys
from fractions import Fraction
from functools import partial
from pathlib import Path

import click

from . import chernweil as cw
from . import cyclic as cy
from . import forms as fm
from . import hochschild as hh
from . import ktheory as kt
from . import rep as rp
from . import star as st
from .core import (FinDimAlgebra, FreeAlgebra, FreePoly, StructureAlgebra, abelian_lie, cyclic_group_algebra,
                   default_names, dual_numbers, frac, ground_field, heisenberg3,
                   idempotent_algebra, lie_from_json, matrix_algebra, product_field, sl2,
                   structure_validate, truncated_poly, upper_triangular)
from .errors import CapExceeded, NcalcError, ValidationError, set_max_dim
from .parser import Evaluator, ParseError, parse, Env
from .suites import CAPS, run_suite, suite_names

BUILTIN_ALGEBRAS = {
    "k": ground_field,
    "kxk": lambda: product_field(2),
    "k[x]/x^2": lambda: truncated_poly(2),
    "dual": dual_numbers,
    "k[e]/(e^2-e)": idempotent_algebra,
    "mat2": lambda: matrix_algebra(2),
    "ut2": lambda: upper_triangular(2),
    "k[Z/3]": lambda: cyclic_group_algebra(3),
}

BUILTIN_LIE = {"sl2": sl2, "heisenberg3": heisenberg3}


# --------------------------------------------------------------------------
# input helpers


def _read_json(path):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise click.UsageError(f"cannot read {path}: {exc.strerror}")
    except json.JSONDecodeError as exc:
        raise click.UsageError(f"{path} is not valid JSON: {exc}")


def load_algebra(name):
    """A built-in algebra name or a JSON file path; validated and unit-normalized."""
    if name in BUILTIN_ALGEBRAS:
        A = BUILTIN_ALGEBRAS[name]()
    else:
        try:
            A = StructureAlgebra.from_json(_read_json(name))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise click.UsageError(f"{name} is not a structure-constant table: {exc!r}")
    rep = structure_validate(A)
    if not rep:
        raise ValidationError(rep.message)
    return A.rebased()


def load_lie(name):
    if name in BUILTIN_LIE:
        return BUILTIN_LIE[name]()
    if name.startswith("abelian"):
        return abelian_lie(int(name[len("abelian"):] or 1))
    return lie_from_json(_read_json(name))


def load_matrix(A, path):
    """Matrix JSON: a list of rows whose entries are coordinate vectors in the basis of ``A``."""
    data = _read_json(path)
    rows = []
    for row in data:
        out = []
        for x in row:
            if isinstance(x, list):
                if len(x) != A.dim:
                    raise ValidationError(f"matrix entry {x} has length {len(x)}, expected {A.dim}")
                out.append({k: frac(v) for k, v in enumerate(x) if frac(v)})
            elif isinstance(x, dict):
                out.append({A.names.index(k) if k in A.names else int(k): frac(v) for k, v in x.items()})
            else:
                out.append({0: frac(x)} if frac(x) else {})
        rows.append(out)
    return rows


# --------------------------------------------------------------------------
# evaluators


class FreeEval(Evaluator):
    """Free polynomials; ``cyc`` is linear and the caller projects at the end."""

    def __init__(self, names):
        self.names = list(names)

    def symbol(self, name):
        return FreePoly.gen(self.names.index(name), len(self.names))

    def number(self, q):
        return FreePoly.const(q, len(self.names))

    def cyc(self, a):
        return a


class FormEval(Evaluator):
    """Noncommutative forms over a free or finite-dimensional algebra."""

    def __init__(self, alg):
        self.alg = alg

    def symbol(self, name):
        alg = self.alg
        i = alg.names.index(name)
        key = (i,) if isinstance(alg, FreeAlgebra) else i
        return fm.NCForm.from_elements(alg, {key: Fraction(1)})

    def number(self, q):
        return fm.NCForm.from_elements(self.alg, q)

    def mul(self, a, b):
        return fm.form_mul(a, b)

    def commutator(self, a, b):
        da = a.degrees() or [0]
        db = b.degrees() or [0]
        if len(da) > 1 or len(db) > 1:
            raise NcalcError("graded commutators need homogeneous forms")
        s = -1 if da[0] * db[0] % 2 else 1
        return fm.form_mul(a, b) - fm.form_mul(b, a).scale(s)

    def d(self, a):
        return fm.de_rham_d(a)


class PhaseEval(Evaluator):
    """Phase-space polynomials where ``*`` and ``star`` are both the Moyal product."""

    def __init__(self, n):
        self.n = n
        self.names = st.phase_names(n)

    def symbol(self, name):
        i = self.names.index(name)
        if i == 2 * self.n:
            return st.PhasePoly.t(self.n)
        return st.PhasePoly.x(i, self.n) if i < self.n else st.PhasePoly.y(i - self.n, self.n)

    def number(self, q):
        return st.PhasePoly.const(q, self.n)

    def mul(self, a, b):
        return st.moyal_star(a, b)

    def star(self, a, b):
        return st.moyal_star(a, b)


class SuperEval(Evaluator):
    """Words in odd ``a_j`` and even ``b_j``; projected to super-cyclic words at the end."""

    def __init__(self, n):
        self.n = n
        self.names = cw.default_letter_names(n)

    def symbol(self, name):
        return cw.SElem.word([self.names.index(name)], self.n)

    def number(self, q):
        return cw.SElem.one(self.n).scale(q)

    def cyc(self, a):
        return a

    def d(self, a):
        return cw.free_dga_d(a)


def _parse_with(text, names):
    return parse(text, Env(list(names)))


# --------------------------------------------------------------------------
# output


class Ctx:
    def __init__(self, seed, as_json, max_weight):
        self.seed = seed
        self.json = as_json
        self.max_weight = max_weight

    def emit(self, text, data):
        if self.json:
            click.echo(json.dumps(data, indent=2, sort_keys=True))
        else:
            click.echo(text)


def _dims_text(dims):
    return "(" + ", ".join(str(d) for d in dims) + ")"


# --------------------------------------------------------------------------
# commands


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for randomized checks.")
@click.option("--max-dim", type=int, default=None, help="Bound on the dimension of any graded piece.")
@click.option("--max-weight", type=int, default=4, show_default=True, help="Weight window for free algebras.")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable JSON output.")
@click.pass_context
def cli(ctx, seed, max_dim, max_weight, as_json):
    """Exact calculus of noncommutative forms, Hochschild complexes and characters."""
    if max_dim is not None:
        ctx.call_on_close(partial(set_max_dim, set_max_dim(max_dim)))
    ctx.obj = Ctx(seed, as_json, max_weight)


@cli.command()
@click.option("--algebra", required=True, help="Built-in name or structure JSON file.")
@click.option("--module", "module", default=None, help="Bimodule JSON (default: A itself).")
@click.option("--max-degree", type=int, default=4, show_default=True)
@click.option("--cohomology", is_flag=True, help="Compute HH^* instead of HH_*.")
@click.option("--unreduced", is_flag=True, help="Use the full bar complex.")
@click.pass_obj
def hochschild(obj, algebra, module, max_degree, cohomology, unreduced):
    """Hochschild homology or cohomology dimensions with representatives."""
    A = load_algebra(algebra)
    M = hh.Bimodule.from_json(A, _read_json(module)) if module else None
    fn = hh.hh_cohomology if cohomology else hh.hh_homology
    res = fn(A, M, max_degree=max_degree, reduced=not unreduced)
    label = "HH^" if cohomology else "HH_"
    obj.emit("\n".join(f"{label}{p}: {d}" for p, d in enumerate(res.dims)), res.to_json())


@cli.command()
@click.option("--algebra", default=None, help="Built-in name or structure JSON file.")
@click.option("--free", "free", type=int, default=None, help="Use the free algebra on this many generators.")
@click.option("--max-degree", type=int, default=4, show_default=True)
@click.option("--unreduced", is_flag=True, help="Keep constants in degree 0.")
@click.option("--reduce", "form_expr", default=None, help="Print the de Rham class of this form instead.")
@click.pass_obj
def drham(obj, algebra, free, max_degree, unreduced, form_expr):
    """Karoubi-de Rham cohomology dimensions, or the class of one form."""
    if (algebra is None) == (free is None):
        raise click.UsageError("give exactly one of --algebra and --free")
    if free is not None:
        alg, mw = FreeAlgebra(free), obj.max_weight
    else:
        alg, mw = FinDimAlgebra(load_algebra(algebra)), 0
    if form_expr is not None:
        form = FormEval(alg)(_parse_with(form_expr, alg.names))
        cls = fm.DRClass(form)
        obj.emit(repr(cls), {"form": form.to_str(), "class": cls.representative.to_str(),
                             "closed": not cls.d()})
        return
    dims, detail = fm.dr_cohomology(alg, max_degree, max_weight=mw, reduced=not unreduced)
    data = {"dims": dims, "pieces": {f"{n},{w}": {"dim": v["dim"], "h": v["h"],
                                                  "representatives": [r.to_str() for r in v["representatives"]]}
                                     for (n, w), v in sorted(detail.items())}}
    obj.emit(_dims_text(dims), data)


@cli.command()
@click.option("--pairs", type=int, default=1, show_default=True)
@click.option("--bracket", "exprs", nargs=2, default=None, help="Two cyclic expressions to bracket.")
@click.option("--expr", default=None, help="Expression to reduce to cyclic words.")
@click.option("--hamiltonian", is_flag=True, help="Also print the Hamiltonian derivation of --expr.")
@click.pass_obj
def necklace(obj, pairs, exprs, expr, hamiltonian):
    """Necklace bracket of cyclic words over symplectic pairs."""
    layout = cy.SymplecticLayout(pairs)
    names = layout.names()
    ev = FreeEval(names)
    val = lambda s: cy.project_cyclic(ev(_parse_with(s, names)))
    if exprs:
        f, g = val(exprs[0]), val(exprs[1])
        out = cy.necklace_bracket(f, g, layout)
        obj.emit(out.to_str(names), {"bracket": out.to_str(names)})
    elif expr:
        f = val(expr)
        data = {"cyclic": f.to_str(names)}
        lines = [f.to_str(names)]
        if hamiltonian:
            imgs = cy.hamiltonian_field(f, layout)
            data["hamiltonian"] = {n: p.to_str(names) for n, p in zip(names, imgs)}
            lines += [f"{n} -> {p.to_str(names)}" for n, p in zip(names, imgs)]
        obj.emit("\n".join(lines), data)
    else:
        raise click.UsageError("give --bracket F G or --expr F")


@cli.command()
@click.option("--pairs", type=int, default=1, show_default=True)
@click.option("--expr", required=True, help="Expression; '*' and star(,) are the Moyal product.")
@click.option("--by-t", is_flag=True, help="Print one line per power of t.")
@click.pass_obj
def moyal(obj, pairs, expr, by_t):
    """Moyal product expansions on polynomial phase space."""
    ev = PhaseEval(pairs)
    f = ev(_parse_with(expr, ev.names))
    groups = {str(k): c.to_str() for k, c in f.by_t_power().items()}
    text = "\n".join(f"t^{k}: {c}" for k, c in groups.items()) if by_t else f.to_str()
    obj.emit(text, {"result": f.to_str(), "by_t": groups})


@cli.command()
@click.option("--gens", type=int, default=2, show_default=True)
@click.option("--n", "n", type=int, default=2, show_default=True, help="Matrix size.")
@click.option("--trace", "trace_expr", default=None, help="Print tr of the expression at generic matrices.")
@click.option("--matrix", "matrix_expr", default=None, help="Print the matrix of the expression.")
@click.pass_obj
def rep(obj, gens, n, trace_expr, matrix_expr):
    """Trace functions and matrices on the representation space."""
    names = default_names(gens)
    vnames = rp.rep_names(gens, n)
    ev = FreeEval(names)
    if trace_expr is not None:
        t = rp.trace_function(ev(_parse_with(trace_expr, names)), n)
        obj.emit(t.to_str(vnames), {"trace": t.to_str(vnames)})
    elif matrix_expr is not None:
        M = rp.rep_evaluate(ev(_parse_with(matrix_expr, names)), n)
        rows = [[x.to_str(vnames) for x in row] for row in M.rows]
        obj.emit("\n".join("[" + ", ".join(r) + "]" for r in rows), {"matrix": rows})
    else:
        raise click.UsageError("give --trace EXPR or --matrix EXPR")


@cli.command()
@click.option("--mode", type=click.Choice(["nc", "gs", "commutative"]), required=True)
@click.option("--algebra", default="k", show_default=True, help="Algebra for --mode nc.")
@click.option("--lie", "lie", default="sl2", show_default=True, help="Lie algebra for --mode commutative.")
@click.option("--pairs", type=int, default=1, show_default=True, help="Letter pairs for --mode gs.")
@click.option("--max-degree", type=int, default=4, show_default=True)
@click.option("--hodge", type=int, default=None, help="Hodge quotient level p for --mode nc.")
@click.option("--chern", "chern_k", type=int, default=None, help="Print ch_k and its transgression (gs).")
@click.option("--expr", default=None, help="Super-cyclic expression for --mode gs.")
@click.option("--bracket", "bracket_expr", default=None, help="Second argument of the bracket (gs).")
@click.pass_obj
def weil(obj, mode, algebra, lie, pairs, max_degree, hodge, chern_k, expr, bracket_expr):
    """Weil algebras: noncommutative, Gelfand-Smirnov, or commutative."""
    if mode == "nc":
        A = load_algebra(algebra)
        if hodge is not None:
            res = cw.hodge_quotient(A, hodge, max_degree)
            obj.emit(_dims_text(res["cohomology"]), {"cohomology": res["cohomology"]})
        else:
            dims = cw.wnc_cohomology(A, max_degree)
            obj.emit(_dims_text(dims), {"cohomology": dims})
    elif mode == "commutative":
        g = load_lie(lie)
        dims = cw.weil_cohomology(g, max_degree)
        obj.emit(_dims_text(dims), {"cohomology": dims})
    else:
        ev = SuperEval(pairs)
        if chern_k is not None:
            ch, tr = cw.gs_chern(chern_k, pairs), cw.gs_transgression(chern_k, pairs)
            ok = cw.gs_d(tr) == ch and not cw.gs_d(ch)
            data = {"ch": ch.to_str(), "transgression": tr.to_str(), "ok": ok}
            obj.emit(f"ch_{chern_k} = {ch.to_str()}\nch^1_{chern_k} = {tr.to_str()}\n"
                     f"d ch = 0 and d ch^1 = ch: {ok}", data)
            return
        if expr is None:
            raise click.UsageError("--mode gs needs --chern K or --expr P")
        P = cw.project_super_cyclic(ev(_parse_with(expr, ev.names)))
        if bracket_expr is not None:
            Q = cw.project_super_cyclic(ev(_parse_with(bracket_expr, ev.names)))
            out = cw.gs_bracket(P, Q)
            obj.emit(out.to_str(), {"bracket": out.to_str()})
        else:
            dP = cw.gs_d(P)
            obj.emit(f"{P.to_str()}\nd: {dP.to_str()}", {"element": P.to_str(), "d": dP.to_str()})


@cli.command()
@click.option("--algebra", required=True, help="Built-in name or structure JSON file.")
@click.option("--idempotent", "idem", default=None, help="Idempotent matrix JSON.")
@click.option("--invertible", "inv", default=None, help="Invertible matrix JSON (for c_1).")
@click.option("--k", "k", type=int, default=1, show_default=True)
@click.pass_obj
def chern(obj, algebra, idem, inv, k):
    """Chern characters of an idempotent (c_0, ch_1..ch_k) or an invertible (c_1)."""
    A = load_algebra(algebra)
    lines, data = [], {}
    if idem is not None:
        e = kt.IdempotentMatrix(A, load_matrix(A, idem))
        c0 = kt.chern_c0(e)
        lines.append(f"c_0 = {c0.cls}  (d c_0 = 0: {c0.certified})")
        data["c0"] = {"class": c0.cls.representative.to_str(), "closed": c0.certified}
        conn = kt.grassmann_connection(e)
        for j in range(1, k + 1):
            ch = kt.chern_ch(e, j)
            agree = kt.connection_curvature(conn, j) == ch.cls
            lines.append(f"ch_{j} = {ch.cls}  (closed: {ch.certified}, tr(R^{j})/{j}! agrees: {agree})")
            data[f"ch{j}"] = {"class": ch.cls.representative.to_str(), "closed": ch.certified,
                              "curvature_agrees": agree}
    if inv is not None:
        g = kt.InvertibleMatrix(A, load_matrix(A, inv))
        c1 = kt.chern_c1(g)
        lines.append(f"c_1 form = {c1.form.to_str()}; class {c1.cls}  (b c_1 = 0: {c1.certified})")
        data["c1"] = {"form": c1.form.to_str(), "class": c1.cls.representative.to_str(),
                      "b_zero": c1.certified}
    if not lines:
        raise click.UsageError("give --idempotent and/or --invertible")
    obj.emit("\n".join(lines), data)


@cli.command()
@click.argument("suite", default="all")
@click.option("--caps", type=click.Choice(sorted(CAPS)), default="default", show_default=True)
@click.option("--seed", "local_seed", type=int, default=None, help="Overrides the global --seed.")
@click.pass_obj
def verify(obj, suite, caps, local_seed):
    """Run identity suites; SUITE is one of the names below or 'all'."""
    if suite != "all" and suite not in suite_names():
        raise click.UsageError(f"unknown suite {suite!r}; choose from {', '.join(suite_names())} or all")
    report = run_suite(suite, seed=obj.seed if local_seed is None else local_seed, caps=caps)
    obj.emit(report.to_text(), report.to_json())
    if not report.ok:
        sys.exit(1)


verify.help += " Suites: " + ", ".join(suite_names()) + "."


def main(argv=None):
    try:
        cli.main(args=argv, prog_name="ncalc", standalone_mode=False)
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return 1
    except click.ClickException as exc:
        exc.show()
        return 2
    except ParseError as exc:
        click.echo(f"parse error: {exc}", err=True)
        return 2
    except CapExceeded as exc:
        click.echo(f"cap exceeded: {exc}", err=True)
        return 3
    except NcalcError as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    except SystemExit as exc:
        return exc.code or 0
    return 0


if __name__ == "__main__":
    sys.exit(main())
