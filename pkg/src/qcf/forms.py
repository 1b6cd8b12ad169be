"""Balanced bilinear forms on path and incidence subcoalgebras.

A form beta is balanced when, for every pair of basis elements (p, q),
expanding beta against the comultiplication on either side gives the same
element: sum beta(p2, q) p1 = sum beta(p, q1) q2. Balancedness is linear
in the values beta(p, q), so the space of balanced forms is the nullspace
of an explicit homogeneous system; the closed-form parameterizations below
describe the same space and the two routes are checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lincomb import LinComb
from .linalg import field_nullspace, sparse_int_nullspace
from .posets import IncidenceSubcoalgebra
from .quiver import Path, PathSubcoalgebra, path_sort_key
from .scalars import Cyc


class FormError(ValueError):
    pass


@dataclass
class BilinearForm:
    """A bilinear form on a subcoalgebra, stored sparsely over basis pairs."""

    coalgebra: object
    entries: dict  # (p, q) -> Cyc, zero entries omitted

    def entry(self, p, q) -> Cyc:
        return self.entries.get((p, q), Cyc.zero())

    def matrix(self) -> list[list[Cyc]]:
        basis = self.coalgebra.basis_list
        return [[self.entry(p, q) for q in basis] for p in basis]


@dataclass
class BalancedCheck:
    ok: bool
    violation: tuple | None = None  # (p, q, coordinate)


def is_balanced(form: BilinearForm) -> BalancedCheck:
    """Direct check of the balance identity on every basis pair."""
    coalg = form.coalgebra
    basis = coalg.basis_list
    comuls = {p: coalg.comul(p) for p in basis}
    for p in basis:
        for q in basis:
            diff = LinComb()
            for (p1, p2), c in comuls[p].items():
                diff.add_term(p1, c * form.entry(p2, q))
            for (q1, q2), c in comuls[q].items():
                diff.add_term(q2, -(c * form.entry(p, q1)))
            if not diff.is_zero():
                coordinate = sorted(diff.labels(), key=repr)[0]
                return BalancedCheck(False, (p, q, coordinate))
    return BalancedCheck(True)


def balanced_space_bruteforce(coalg, bound: int = 40) -> list[BilinearForm]:
    """Exact nullspace basis of the balance constraints, treating every
    beta(p, q) as an unknown. Deterministic fraction-free elimination."""
    basis = coalg.basis_list
    n = len(basis)
    if n > bound:
        raise FormError(f"basis size {n} exceeds brute-force bound {bound}")
    index = {p: i for i, p in enumerate(basis)}
    comuls = {p: coalg.comul(p) for p in basis}
    rows: list[dict[int, int]] = []
    for i, p in enumerate(basis):
        for j, q in enumerate(basis):
            # one equation per coordinate appearing on either side
            per_coord: dict[object, dict[int, int]] = {}
            for (p1, p2), _ in comuls[p].items():
                unknown = index[p2] * n + j
                row = per_coord.setdefault(p1, {})
                row[unknown] = row.get(unknown, 0) + 1
            for (q1, q2), _ in comuls[q].items():
                unknown = i * n + index[q1]
                row = per_coord.setdefault(q2, {})
                row[unknown] = row.get(unknown, 0) - 1
            for coord in sorted(per_coord, key=repr):
                row = {k: v for k, v in per_coord[coord].items() if v}
                if row:
                    rows.append(row)
    vectors = sparse_int_nullspace(rows, n * n)
    out = []
    for vec in vectors:
        entries = {}
        for k, v in enumerate(vec):
            if v:
                entries[(basis[k // n], basis[k % n])] = Cyc.rational(v)
        out.append(BilinearForm(coalg, entries))
    return out


@dataclass
class PathFormParams:
    """The paths that parameterize balanced forms on a path subcoalgebra.

    A concatenation d = qp of basis paths belongs when, for every way of
    writing d as such a concatenation, basis arrows extending the right
    factor backwards (resp. the left factor forwards) are already part of d.
    """

    paths: tuple[Path, ...]
    witness: dict  # d -> one (q, p) decomposition

    @property
    def size(self) -> int:
        return len(self.paths)


def path_form_params(coalg: PathSubcoalgebra) -> PathFormParams:
    quiver = coalg.quiver
    basis = coalg.basis
    candidates: dict[Path, tuple[Path, Path]] = {}
    for q in coalg.basis_list:
        for p in coalg.basis_list:
            if q.target == p.source:
                d = quiver.concat(q, p)
                candidates.setdefault(d, (q, p))

    def admissible(d: Path) -> bool:
        for i in range(d.length + 1):
            qq, pp = quiver.split(d, i)
            if qq not in basis or pp not in basis:
                continue
            for aid in quiver.in_arrows(pp.source):
                extended = quiver.concat(quiver.arrow_path(aid), pp)
                if extended in basis and (not qq.arrows or qq.arrows[-1] != aid):
                    return False
            for bid in quiver.out_arrows(qq.target):
                extended = quiver.concat(qq, quiver.arrow_path(bid))
                if extended in basis and (not pp.arrows or pp.arrows[0] != bid):
                    return False
        return True

    chosen = sorted((d for d in candidates if admissible(d)), key=path_sort_key)
    return PathFormParams(
        paths=tuple(chosen), witness={d: candidates[d] for d in chosen}
    )


def form_from_path_params(
    coalg: PathSubcoalgebra, params: PathFormParams, alpha: dict
) -> BilinearForm:
    """beta(p, q) = alpha_d exactly when the composite qp is a parameter path d."""
    missing = [d for d in params.paths if d not in alpha]
    if missing:
        raise FormError(f"alpha missing values for {missing[:3]!r}...")
    param_set = set(params.paths)
    quiver = coalg.quiver
    entries = {}
    for q in coalg.basis_list:
        for p in coalg.basis_list:
            if q.target == p.source:
                d = quiver.concat(q, p)
                if d in param_set:
                    value = alpha[d]
                    if not value.is_zero():
                        entries[(p, q)] = value
    return BilinearForm(coalg, entries)


@dataclass(frozen=True)
class MidpointClass:
    """One equivalence class of midpoints between a fixed pair of endpoints."""

    x: object
    y: object
    members: tuple
    marked: bool


@dataclass
class IncidenceFormParams:
    """Midpoint classes per endpoint pair; the marked ones carry a free scalar."""

    classes: tuple[MidpointClass, ...]

    @property
    def marked(self) -> tuple[MidpointClass, ...]:
        return tuple(c for c in self.classes if c.marked)

    @property
    def size(self) -> int:
        return len(self.marked)


def incidence_form_params(coalg: IncidenceSubcoalgebra) -> IncidenceFormParams:
    poset = coalg.poset
    basis = coalg.basis
    order = {e: i for i, e in enumerate(poset.elements)}
    classes: list[MidpointClass] = []
    for x in poset.elements:
        for y in poset.elements:
            if not poset.leq(x, y):
                continue
            mids = [
                u
                for u in poset.interval(x, y)
                if (x, u) in basis and (u, y) in basis
            ]
            if not mids:
                continue
            # classes: transitive closure of sharing a common lower bound inside mids
            parent = {u: u for u in mids}

            def find(a):
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                return a

            for z in mids:
                ups = [u for u in mids if poset.leq(z, u)]
                root = find(ups[0])
                for u in ups[1:]:
                    parent[find(u)] = root
            groups: dict[object, list] = {}
            for u in mids:
                groups.setdefault(find(u), []).append(u)
            for group in sorted(groups.values(), key=lambda g: min(order[u] for u in g)):
                members = tuple(sorted(group, key=lambda u: order[u]))
                marked = True
                for u in members:
                    for v in poset.elements:
                        if poset.leq(v, u) and (v, y) in basis and not poset.leq(x, v):
                            marked = False
                        if poset.leq(u, v) and (x, v) in basis and not poset.leq(v, y):
                            marked = False
                    if not marked:
                        break
                classes.append(MidpointClass(x=x, y=y, members=members, marked=marked))
    return IncidenceFormParams(classes=tuple(classes))


def form_from_incidence_params(
    coalg: IncidenceSubcoalgebra, params: IncidenceFormParams, alpha: dict
) -> BilinearForm:
    """beta(e(t, y), e(x, z)) = alpha on the marked class of z = t between x and y."""
    entries = {}
    for cls in params.marked:
        key = (cls.x, cls.y, cls.members)
        if key not in alpha:
            raise FormError(f"alpha missing value for class {key!r}")
        value = alpha[key]
        if value.is_zero():
            continue
        for u in cls.members:
            entries[((u, cls.y), (cls.x, u))] = value
    return BilinearForm(coalg, entries)


def all_ones_alpha_path(params: PathFormParams) -> dict:
    return {d: Cyc.one() for d in params.paths}


def all_ones_alpha_incidence(params: IncidenceFormParams) -> dict:
    return {(c.x, c.y, c.members): Cyc.one() for c in params.marked}


def radicals(form: BilinearForm) -> tuple[list[LinComb], list[LinComb]]:
    """Left radical (kills the form from the left) and right radical bases."""
    basis = form.coalgebra.basis_list
    matrix = form.matrix()
    transpose = [[matrix[i][j] for i in range(len(basis))] for j in range(len(basis))]
    left = [
        LinComb({basis[i]: c for i, c in enumerate(vec) if not c.is_zero()})
        for vec in field_nullspace(transpose)
    ]
    right = [
        LinComb({basis[i]: c for i, c in enumerate(vec) if not c.is_zero()})
        for vec in field_nullspace(matrix)
    ]
    return left, right
