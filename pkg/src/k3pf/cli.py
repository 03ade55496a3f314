"""Command-line surface: machine-readable JSON in, JSON out.

Exit codes: 0 success, 1 domain error (with an {"error", "detail"} object
on stdout), 2 usage error.  Results are byte-stable across runs.  The
environment variable K3PF_THREADS is validated and reserved for internal
parallelism; computations are deterministic regardless of its value.
"""

from __future__ import annotations

import json
import os
import sys
from functools import wraps

import click

from .errors import K3PFError
from .lattice import LatticePolytope, orbits, reflexive_slices
from .ode import (DifferentialOperator, projective_normal_form,
                  symmetric_square, symmetric_square_root)
from .ratfunc import parse_rf
from .series import annihilates, principal_period_series
from .toric import FamilySpec, rank_bound
from .griffiths_dwork import picard_fuchs


def _emit(payload):
    click.echo(json.dumps(payload, indent=2, sort_keys=True))


def _check_threads():
    raw = os.environ.get("K3PF_THREADS")
    if raw is None:
        return
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        raise K3PFError(f"K3PF_THREADS must be a positive integer, got {raw!r}")


def domain_errors(fn):
    @wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            _check_threads()
            return fn(*args, **kwargs)
        except K3PFError as exc:
            click.echo(json.dumps(
                {"error": exc.kind, "detail": exc.detail}, sort_keys=True))
            sys.exit(1)
        except (KeyError, TypeError, ValueError,
                json.JSONDecodeError, OSError) as exc:
            click.echo(json.dumps(
                {"error": "ParseError", "detail": str(exc)}, sort_keys=True))
            sys.exit(1)
    return wrapper


def _load_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _load_polytope(path):
    return LatticePolytope.from_dict(_load_json(path))


def _load_family(path):
    return FamilySpec.from_dict(_load_json(path))


def _load_operator(path):
    return DifferentialOperator.from_dict(_load_json(path))


@click.group()
def main():
    """Exact Picard-Fuchs computations for symmetric toric K3 pencils."""


@main.group()
def polytope():
    """Lattice polytope utilities."""


@polytope.command("info")
@click.argument("path", type=click.Path(exists=True))
@domain_errors
def polytope_info(path):
    p = _load_polytope(path)
    reflexive = p.is_reflexive()
    info = {
        "dim": p.dim,
        "vertices": [list(v) for v in p.vertices],
        "num_vertices": len(p.vertices),
        "num_facets": len(p.facets()),
        "num_lattice_points": len(p.lattice_points()),
        "reflexive": reflexive,
    }
    if reflexive:
        info["automorphism_order"] = len(p.automorphism_group())
        info["rotation_order"] = len(
            p.automorphism_group(orientation_preserving=True))
    _emit(info)


@polytope.command("dual")
@click.argument("path", type=click.Path(exists=True))
@domain_errors
def polytope_dual(path):
    _emit(_load_polytope(path).polar_dual().to_dict())


@polytope.command("autos")
@click.argument("path", type=click.Path(exists=True))
@click.option("--full/--orientation-preserving", "full", default=False,
              help="Include orientation-reversing symmetries.")
@domain_errors
def polytope_autos(path, full):
    p = _load_polytope(path)
    group = p.automorphism_group(orientation_preserving=not full)
    _emit({
        "order": len(group),
        "matrices": [[list(row) for row in g.matrix] for g in group],
        "determinants": [g.det() for g in group],
    })


@polytope.command("orbits")
@click.argument("path", type=click.Path(exists=True))
@click.option("--full/--orientation-preserving", "full", default=False)
@domain_errors
def polytope_orbits(path, full):
    p = _load_polytope(path)
    group = p.automorphism_group(orientation_preserving=not full)
    part = orbits(group, p.lattice_points())
    _emit({
        "group_order": len(group),
        "orbit_sizes": part.sizes,
        "orbits": [[list(v) for v in orbit] for orbit in part.orbits],
    })


@polytope.command("slices")
@click.argument("path", type=click.Path(exists=True))
@click.option("--bound", type=int, default=1, show_default=True,
              help="Coordinate bound for candidate normal vectors.")
@domain_errors
def polytope_slices(path, bound):
    p = _load_polytope(path)
    found = reflexive_slices(p, bound)
    _emit({
        "bound": bound,
        "slices": [
            {"normal": list(m), "polygon": poly.to_dict()}
            for m, poly in found
        ],
    })


@main.group()
def family():
    """Symmetric pencil construction."""


@family.command("build")
@click.argument("path", type=click.Path(exists=True))
@domain_errors
def family_build(path):
    spec = _load_family(path)
    f = spec.family_polynomial()
    _emit({
        "num_rays": spec.grading.q,
        "group_order": len(spec.group),
        "rank_bound": rank_bound(spec.polytope, spec.group)
        if spec.polytope.dim == 3 else None,
        "polynomial": f.to_list(),
    })


@main.group()
def pf():
    """Picard-Fuchs computation and verification."""


@pf.command("compute")
@click.option("--family", "family_path", required=True,
              type=click.Path(exists=True))
@click.option("--max-order", type=int, default=4, show_default=True)
@click.option("--use-symmetry", is_flag=True, default=False,
              help="Restrict the linear algebra to the invariant subspace.")
@click.option("--trace", is_flag=True, default=False,
              help="Include the membership witnesses of every reduction step.")
@domain_errors
def pf_compute(family_path, max_order, use_symmetry, trace):
    spec = _load_family(family_path)
    result = picard_fuchs(spec, max_order=max_order,
                          use_symmetry=use_symmetry,
                          collect_witnesses=trace)
    _emit(result.to_dict(include_witnesses=trace))


@pf.command("verify")
@click.option("--operator", "operator_path", required=True,
              type=click.Path(exists=True))
@click.option("--family", "family_path", required=True,
              type=click.Path(exists=True))
@click.option("--n", type=int, default=20, show_default=True)
@domain_errors
def pf_verify(operator_path, family_path, n):
    op = _load_operator(operator_path)
    spec = _load_family(family_path)
    series = principal_period_series(spec, n)
    report = annihilates(op, series)
    _emit({
        "annihilates": report.annihilates,
        "checked_coefficients": report.checked,
        "window_lo": report.window_lo,
        "failures": [[e, str(c)] for e, c in report.failures],
    })


@main.group()
def ode():
    """Operator algebra: symmetric squares and normal forms."""


def _triple_from_file(path):
    data = _load_json(path)
    coeffs = [parse_rf(s) for s in data["coeffs"]]
    if len(coeffs) != 3:
        raise K3PFError("expected exactly three coefficients a0, a1, a2")
    return coeffs[2], coeffs[1], coeffs[0]


@ode.command("symsquare")
@click.argument("path", type=click.Path(exists=True))
@domain_errors
def ode_symsquare(path):
    a2, a1, a0 = _triple_from_file(path)
    L = symmetric_square(a2, a1, a0)
    out = L.to_dict()
    out["cleared"] = [str(p) for p in L.canonical_cleared()]
    _emit(out)


@ode.command("symroot")
@click.argument("path", type=click.Path(exists=True))
@domain_errors
def ode_symroot(path):
    L = _load_operator(path)
    triple = symmetric_square_root(L)
    if triple is None:
        _emit({"is_symmetric_square": False})
        return
    a2, a1, a0 = triple
    _emit({
        "is_symmetric_square": True,
        "coeffs": [str(a0), str(a1), str(a2)],
    })


@ode.command("normalform")
@click.argument("path", type=click.Path(exists=True))
@domain_errors
def ode_normalform(path):
    a2, a1, a0 = _triple_from_file(path)
    _emit({"Q": str(projective_normal_form(a2, a1, a0))})


@main.group()
def period():
    """Period series of a pencil."""


@period.command("series")
@click.option("--family", "family_path", required=True,
              type=click.Path(exists=True))
@click.option("--n", type=int, default=20, show_default=True)
@domain_errors
def period_series(family_path, n):
    spec = _load_family(family_path)
    s = principal_period_series(spec, n)
    _emit({
        "n": n,
        "coefficients": {str(e): str(c)
                         for e, c in sorted(s.coeffs.items())},
        "known_lo": s.known_lo,
    })


if __name__ == "__main__":
    main()
