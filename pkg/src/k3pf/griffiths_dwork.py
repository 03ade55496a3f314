"""The Picard-Fuchs engine.

Derivatives of the pencil's period are tracked as rational forms: a map
from pole order k to a numerator of Cox degree (k-1) * beta.  Numerators
are reduced against the span of the partial-derivative multiples in each
graded piece; the complement of that span (non-pivot monomials in the
deterministic order) supplies canonical coordinates, and a Q(t)-linear
dependence among the reduced derivative vectors assembles the operator.

All linear algebra may be restricted to the symmetry-invariant subspace:
every derivative numerator is a power of the product monomial and the
pencil is symmetric, so reductions never leave the invariants, and the
matrices shrink by roughly the group order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NotInvariant, OrderExceeded, ReductionStuck, ShapeError
from .linalg import RFMatrix, rf_linear_solve, rf_nullspace
from .ode import DifferentialOperator
from .ratfunc import RationalFunction
from .toric import GradedPolynomial, ray_permutation


def jacobian_partials(f):
    """Partial derivatives of f in every Cox coordinate."""
    return [f.partial(i) for i in range(f.grading.q)]


class RationalForm:
    """A sum over pole orders k of numerator_k * Omega / f^k (Omega implicit)."""

    __slots__ = ("levels",)

    def __init__(self, levels):
        self.levels = {int(k): p for k, p in levels.items()
                       if not p.is_zero()}
        for k, p in self.levels.items():
            if k < 1:
                raise ShapeError("pole orders start at 1")

    @classmethod
    def zero(cls):
        return cls({})

    def is_zero(self):
        return not self.levels

    def top_order(self):
        return max(self.levels, default=0)

    def numerator(self, k):
        return self.levels.get(k)

    def __repr__(self):
        return f"RationalForm(levels={sorted(self.levels)})"


@dataclass
class MembershipWitness:
    """Exact cofactors certifying membership in J (or J1) of the pencil."""

    target: GradedPolynomial
    cofactors: list
    f: GradedPolynomial
    use_J1: bool = False

    def expand(self):
        """Re-expansion sum_i A_i * g_i in exact arithmetic."""
        partials = jacobian_partials(self.f)
        g = self.f.grading
        total = None
        for i, a in enumerate(self.cofactors):
            gen = partials[i]
            if self.use_J1:
                zi = GradedPolynomial(
                    g, g.ray_degree(i),
                    {tuple(int(j == i) for j in range(g.q)):
                     RationalFunction.one()}, check=False)
                gen = zi * gen
            if a.is_zero():
                continue
            term = a * gen
            total = term if total is None else total + term
        if total is None:
            deg = self.target.degree if not self.use_J1 else \
                self.target.degree + g.anticanonical
            total = GradedPolynomial.zero(g, deg)
        return total

    def verify(self):
        expected = self.target
        if self.use_J1:
            g = self.f.grading
            prod = GradedPolynomial(
                g, g.anticanonical,
                {tuple([1] * g.q): RationalFunction.one()}, check=False)
            expected = self.target * prod
        return self.expand() == expected


# -- invariant-aware reduction machinery ------------------------------------------


def _permute_exps(exps, perm):
    out = [0] * len(exps)
    for i, v in enumerate(exps):
        out[perm[i]] = v
    return tuple(out)


def _mon_key(exps):
    return (sum(exps), exps)


def _orbit_partition(items, act):
    """Orbits of hashable items under the supplied action maps."""
    item_set = set(items)
    seen = set()
    orbit_lists = []
    for it in items:
        if it in seen:
            continue
        orb = {it}
        frontier = [it]
        while frontier:
            x = frontier.pop()
            for a in act:
                y = a(x)
                if y not in item_set:
                    raise ShapeError("orbit leaves the enumerated set")
                if y not in orb:
                    orb.add(y)
                    frontier.append(y)
        seen |= orb
        orbit_lists.append(sorted(orb))
    return orbit_lists


class _DegreeSystem:
    """Reduction data for numerators of degree k * beta."""

    def __init__(self, ctx, k):
        self.k = k
        g = ctx.grading
        mons = g.monomials_of_degree(tuple([k] * g.q))
        mons.sort(key=_mon_key)
        perms = ctx.perms
        acts = [lambda e, p=p: _permute_exps(e, p) for p in perms]
        self.orbit_lists = sorted(_orbit_partition(mons, acts),
                                  key=lambda o: _mon_key(min(o, key=_mon_key)))
        self.reps = [min(o, key=_mon_key) for o in self.orbit_lists]
        self.orbit_of = {}
        for idx, orbit in enumerate(self.orbit_lists):
            for m in orbit:
                self.orbit_of[m] = idx

        # cofactor side: pairs (ray, monomial of degree (k-1) beta + beta_i)
        pair_items = []
        per_ray_mons = []
        for i in range(g.q):
            part = [k - 1] * g.q
            part[i] += 1
            ms = g.monomials_of_degree(tuple(part))
            per_ray_mons.append(ms)
            pair_items.extend((i, m) for m in ms)
        pair_acts = [
            (lambda pair, p=p: (p[pair[0]], _permute_exps(pair[1], p)))
            for p in perms
        ]
        self.pair_orbits = sorted(
            _orbit_partition(pair_items, pair_acts),
            key=lambda o: min((p[0], _mon_key(p[1])) for p in o))

        # matrix of the multiply-by-partials map on invariants
        partials = ctx.partials
        entries = {}
        self.divergences = []
        for col, orbit in enumerate(self.pair_orbits):
            coeffs = {}
            div = {}
            for i, b in orbit:
                for e, c in partials[i].terms.items():
                    key = tuple(x + y for x, y in zip(b, e))
                    acc = coeffs.get(key, RationalFunction.zero()) + c
                    if acc.is_zero():
                        coeffs.pop(key, None)
                    else:
                        coeffs[key] = acc
                if b[i]:
                    down = list(b)
                    down[i] -= 1
                    key = tuple(down)
                    div[key] = div.get(key, 0) + b[i]
            for rep_idx, rep in enumerate(self.reps):
                c = coeffs.get(rep)
                if c is not None:
                    entries[(rep_idx, col)] = c
            self.divergences.append(div)
        npairs = len(self.pair_orbits)
        base = RFMatrix.from_entries(len(self.reps), npairs, entries)

        # complement: rows never hit by a pivot of the pair columns
        from .linalg import _cleared_int_rows, _eliminate
        ech = _eliminate(_cleared_int_rows(base), npairs)
        pivot_rows = {r for r, _ in ech.pivots}
        self.complement = [i for i in range(len(self.reps))
                           if i not in pivot_rows]
        self.npairs = npairs
        full = RFMatrix(len(self.reps), npairs + len(self.complement))
        for (i, j), v in entries.items():
            full[i, j] = v
        for jc, row in enumerate(self.complement):
            full[row, npairs + jc] = RationalFunction.one()
        self.solve_matrix = full

    def coords_of(self, poly):
        """Dense coordinates over the orbit representatives.

        The polynomial must be constant on every orbit (trivially so when
        the context has no symmetry group).
        """
        by_orbit = {}
        for e, c in poly.terms.items():
            idx = self.orbit_of.get(e)
            if idx is None:
                raise ShapeError(f"monomial {e} is not of degree {self.k}*beta")
            by_orbit.setdefault(idx, {})[e] = c
        vec = [RationalFunction.zero()] * len(self.reps)
        for idx, terms in by_orbit.items():
            orbit = self.orbit_lists[idx]
            c0 = terms[next(iter(terms))]
            if len(terms) != len(orbit) or any(c != c0 for c in terms.values()):
                raise NotInvariant(
                    "numerator is not symmetric; reduce without the group")
            vec[idx] = c0
        return vec

    def decompose(self, vec):
        """vec = (pair columns) alpha + complement lambda; returns both."""
        xs = rf_linear_solve(self.solve_matrix, vec)
        if xs is None:
            raise ReductionStuck(
                f"no decomposition in degree {self.k}*beta")
        return xs[:self.npairs], xs[self.npairs:]

    def cofactors_from(self, alpha, ctx):
        """Expand invariant pair coordinates to one cofactor per ray."""
        g = ctx.grading
        per_ray = [dict() for _ in range(g.q)]
        for a, orbit in zip(alpha, self.pair_orbits):
            if a.is_zero():
                continue
            for i, b in orbit:
                acc = per_ray[i].get(b, RationalFunction.zero()) + a
                if acc.is_zero():
                    per_ray[i].pop(b, None)
                else:
                    per_ray[i][b] = acc
        out = []
        beta = g.anticanonical
        for i in range(g.q):
            deg = beta.scaled(self.k - 1) + g.ray_degree(i)
            out.append(GradedPolynomial(g, deg, per_ray[i], check=False))
        return out

    def pushdown_coords(self, alpha, lower):
        """Coordinates over ``lower`` of sum_i d(A_i)/dz_i, given alpha."""
        vec = [RationalFunction.zero()] * len(lower.reps)
        for a, div in zip(alpha, self.divergences):
            if a.is_zero():
                continue
            for e, mult in div.items():
                idx = lower.orbit_of.get(e)
                if idx is None:
                    raise ShapeError("divergence leaves the graded piece")
                if e == lower.reps[idx]:
                    vec[idx] = vec[idx] + a * mult
        return vec


class ReductionContext:
    """Shared reduction state for one pencil: partials, orbits, systems."""

    def __init__(self, f, group=None):
        self.f = f
        self.grading = f.grading
        if group:
            self.perms = [ray_permutation(self.grading, h) for h in group]
        else:
            self.perms = [tuple(range(self.grading.q))]
        self.partials = jacobian_partials(f)
        self._systems = {}

    def system(self, k):
        if k not in self._systems:
            self._systems[k] = _DegreeSystem(self, k)
        return self._systems[k]

    def invariant_coords(self, poly, k):
        return self.system(k).coords_of(poly)


@dataclass
class ReductionStep:
    derivative: int
    pole_order: int
    cofactors: list


@dataclass
class PicardFuchsResult:
    operator: DifferentialOperator
    order: int
    trace: list
    complement_monomials: dict
    reduced_vectors: list = field(repr=False, default_factory=list)

    def to_dict(self, include_witnesses=False):
        d = {
            "order": self.order,
            "coefficients": [str(c) for c in self.operator.monic_coeffs()],
            "cleared": [str(p) for p in self.operator.canonical_cleared()],
        }
        if include_witnesses:
            d["witnesses"] = [
                {
                    "derivative": step.derivative,
                    "pole_order": step.pole_order,
                    "cofactors": [a.to_list() for a in step.cofactors],
                }
                for step in self.trace
            ]
        return d


def reduce_pole_order(form, f, group=None, context=None):
    """One reduction step on the top pole order of the form.

    The top numerator K splits as K_res + sum_i A_i df/dz_i with K_res in
    the complement; the top level becomes K_res and pole order k below
    gains (1/k) sum_i dA_i/dz_i.  Forms whose numerators already lie in
    the complement are fixed points.
    """
    ctx = context or ReductionContext(f, group)
    top = form.top_order()
    if top <= 1:
        return form
    k = top - 1
    system = ctx.system(k)
    kappa = system.coords_of(form.numerator(top))
    alpha, lam = system.decompose(kappa)
    lower = ctx.system(k - 1)
    push = system.pushdown_coords(alpha, lower)
    scale = RationalFunction.from_fraction(Fraction(1, k))
    levels = dict(form.levels)
    residue = _poly_from_coords(ctx, k, lam_on_complement=lam, system=system)
    if residue.is_zero():
        levels.pop(top, None)
    else:
        levels[top] = residue
    gained = _poly_from_reps(ctx, k - 1,
                             {i: c * scale for i, c in enumerate(push)
                              if not c.is_zero()}, lower)
    if k in levels:
        levels[k] = levels[k] + gained
    else:
        levels[k] = gained
    return RationalForm(levels)


def _poly_from_coords(ctx, k, lam_on_complement, system):
    coeffs = {}
    for lam, row in zip(lam_on_complement, system.complement):
        if lam.is_zero():
            continue
        for m in system.orbit_lists[row]:
            coeffs[m] = lam
    beta = ctx.grading.anticanonical
    return GradedPolynomial(ctx.grading, beta.scaled(k), coeffs, check=False)


def _poly_from_reps(ctx, k, coords, system):
    coeffs = {}
    for idx, c in coords.items():
        for m in system.orbit_lists[idx]:
            coeffs[m] = c
    beta = ctx.grading.anticanonical
    return GradedPolynomial(ctx.grading, beta.scaled(k), coeffs, check=False)


def derivative_form(spec_or_f, j):
    """The rational form representing the j-th t-derivative of the period."""
    f = spec_or_f if isinstance(spec_or_f, GradedPolynomial) \
        else spec_or_f.family_polynomial()
    g = f.grading
    sign = (-1) ** j
    fact = 1
    for i in range(2, j + 1):
        fact *= i
    exps = tuple([j] * g.q)
    coeff = RationalFunction.from_fraction(Fraction(sign * fact))
    beta = g.anticanonical
    poly = GradedPolynomial(g, beta.scaled(j), {exps: coeff})
    return RationalForm({j + 1: poly})


def _reduce_fully(ctx, j, collect_trace=False):
    """Canonical complement coordinates of the j-th derivative, per level."""
    form = derivative_form(ctx.f, j)
    top = j + 1
    level_coords = {}
    current = {}  # pole order -> dense coords over reps of system(order-1)
    current[top] = ctx.system(j).coords_of(form.numerator(top))
    trace = []
    for level in range(top, 0, -1):
        system = ctx.system(level - 1)
        kappa = current.get(level)
        if kappa is None:
            kappa = [RationalFunction.zero()] * len(system.reps)
        alpha, lam = system.decompose(kappa)
        level_coords[level] = lam
        if collect_trace and any(not a.is_zero() for a in alpha):
            trace.append(ReductionStep(
                derivative=j, pole_order=level,
                cofactors=system.cofactors_from(alpha, ctx)))
        if level > 1:
            lower = ctx.system(level - 2)
            push = system.pushdown_coords(alpha, lower)
            scale = RationalFunction.from_fraction(Fraction(1, level - 1))
            acc = current.get(level - 1)
            if acc is None:
                acc = [RationalFunction.zero()] * len(lower.reps)
            current[level - 1] = [
                a + b * scale for a, b in zip(acc, push)]
    return level_coords, trace


def picard_fuchs(spec, max_order=4, use_symmetry=False, collect_witnesses=False):
    """Minimal operator annihilating the pencil's period, with trace.

    Successive derivative forms are reduced to canonical coordinates; the
    first linear dependence over Q(t) yields the operator.  Raises
    OrderExceeded when no dependence appears up to max_order.
    """
    if max_order < 1:
        raise ShapeError("max_order must be at least 1")
    f = spec.family_polynomial()
    ctx = ReductionContext(f, spec.group if use_symmetry else None)
    coords = []
    traces = []
    for j in range(max_order + 1):
        lc, tr = _reduce_fully(ctx, j, collect_trace=collect_witnesses)
        coords.append(lc)
        traces.extend(tr)
        r = j
        if r < 1:
            continue
        layout = []
        for level in range(1, r + 2):
            ncomp = len(ctx.system(level - 1).complement)
            layout.extend((level, pos) for pos in range(ncomp))
        rows = []
        for level, pos in layout:
            row = []
            for jj in range(r + 1):
                lam = coords[jj].get(level)
                row.append(lam[pos] if lam is not None
                           else RationalFunction.zero())
            rows.append(row)
        matrix = RFMatrix.from_rows(rows) if rows else RFMatrix(0, r + 1)
        basis = rf_nullspace(matrix)
        if not basis:
            continue
        if len(basis) != 1:
            raise ReductionStuck(
                "unexpected multidimensional dependence; lower order missed")
        cs = basis[0]
        if cs[r].is_zero():
            raise ReductionStuck("dependence does not involve the top derivative")
        operator = DifferentialOperator(cs)
        complement = {
            level: [ctx.system(level - 1).reps[i]
                    for i in ctx.system(level - 1).complement]
            for level in range(1, r + 2)
        }
        return PicardFuchsResult(
            operator=operator,
            order=r,
            trace=traces,
            complement_monomials=complement,
            reduced_vectors=coords,
        )
    raise OrderExceeded(
        f"no linear dependence among derivatives up to order {max_order}")


# -- ideal membership -------------------------------------------------------------


def ideal_membership(K, f, use_J1=False, group=None):
    """Exact cofactors for K in the Jacobian ideal of f, or None.

    With use_J1, membership in the ideal quotient is tested through the
    shifted problem K * (product of all z) in the ideal of the z_i df/dz_i.
    """
    g = f.grading
    if K.grading is not g:
        raise ShapeError("K and f live over different gradings")
    partials = jacobian_partials(f)
    if use_J1:
        prod = GradedPolynomial(
            g, g.anticanonical,
            {tuple([1] * g.q): RationalFunction.one()}, check=False)
        target = K * prod
        gens = []
        for i in range(g.q):
            zi = GradedPolynomial(
                g, g.ray_degree(i),
                {tuple(int(j == i) for j in range(g.q)):
                 RationalFunction.one()}, check=False)
            gens.append(zi * partials[i])
        cofactors = _membership_solve(target, gens, g, group, f)
    else:
        target = K
        gens = partials
        cofactors = _membership_solve(target, gens, g, group, f)
    if cofactors is None:
        return None
    witness = MembershipWitness(target=K, cofactors=cofactors, f=f,
                                use_J1=use_J1)
    if not witness.verify():
        raise ReductionStuck("witness failed exact re-expansion")
    return witness


def _membership_solve(target, gens, g, group, f):
    """Solve sum_i A_i gens_i = target with A_i in the forced graded piece."""
    if target.is_zero():
        return [GradedPolynomial.zero(g, target.degree - gens[i].degree)
                for i in range(g.q)]
    some_exp = next(iter(target.terms))
    if group:
        perms = [ray_permutation(g, h) for h in group]
        if not _is_invariant(target, perms) or not _is_invariant(f, perms):
            perms = [tuple(range(g.q))]
    else:
        perms = [tuple(range(g.q))]

    target_mons = g.monomials_of_degree(some_exp)
    target_mons.sort(key=_mon_key)
    acts = [lambda e, p=p: _permute_exps(e, p) for p in perms]
    orbit_lists = sorted(_orbit_partition(target_mons, acts),
                         key=lambda o: _mon_key(min(o, key=_mon_key)))
    reps = [min(o, key=_mon_key) for o in orbit_lists]
    orbit_of = {}
    for idx, orbit in enumerate(orbit_lists):
        for m in orbit:
            orbit_of[m] = idx

    pair_items = []
    for i in range(g.q):
        if gens[i].is_zero():
            continue
        gen_exp = next(iter(gens[i].terms))
        part = tuple(a - b for a, b in zip(some_exp, gen_exp))
        for m in g.monomials_of_degree(part):
            pair_items.append((i, m))
    if not pair_items:
        return None
    pair_acts = [
        (lambda pair, p=p: (p[pair[0]], _permute_exps(pair[1], p)))
        for p in perms
    ]
    pair_orbits = sorted(_orbit_partition(pair_items, pair_acts),
                         key=lambda o: min((p[0], _mon_key(p[1])) for p in o))

    entries = {}
    for col, orbit in enumerate(pair_orbits):
        coeffs = {}
        for i, b in orbit:
            for e, c in gens[i].terms.items():
                key = tuple(x + y for x, y in zip(b, e))
                acc = coeffs.get(key, RationalFunction.zero()) + c
                if acc.is_zero():
                    coeffs.pop(key, None)
                else:
                    coeffs[key] = acc
        for rep_idx, rep in enumerate(reps):
            c = coeffs.get(rep)
            if c is not None:
                entries[(rep_idx, col)] = c
    matrix = RFMatrix.from_entries(len(reps), len(pair_orbits), entries)
    kappa = [RationalFunction.zero()] * len(reps)
    for e, c in target.terms.items():
        idx = orbit_of.get(e)
        if idx is None:
            raise ShapeError("target monomial missing from its graded piece")
        if e == reps[idx]:
            kappa[idx] = c
    xs = rf_linear_solve(matrix, kappa)
    if xs is None:
        return None
    per_ray = [dict() for _ in range(g.q)]
    for a, orbit in zip(xs, pair_orbits):
        if a.is_zero():
            continue
        for i, b in orbit:
            acc = per_ray[i].get(b, RationalFunction.zero()) + a
            if acc.is_zero():
                per_ray[i].pop(b, None)
            else:
                per_ray[i][b] = acc
    out = []
    for i in range(g.q):
        deg = target.degree - gens[i].degree
        out.append(GradedPolynomial(g, deg, per_ray[i], check=False))
    return out


def _is_invariant(poly, perms):
    for p in perms:
        if poly.permute_variables(p) != poly:
            return False
    return True
