"""Co-Frobenius decision procedures, classification, and Hopf admissibility.

The criterion is combinatorial: every vertex must carry a unique maximal
outgoing basis path, the endpoint map must land on vertices carrying a
unique maximal incoming path, and following the maximal path forward and
then backward must return to the start. The incidence version replaces
paths by segments and prefix order by the poset order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .forms import IncidenceFormParams, PathFormParams
from .posets import IncidenceSubcoalgebra
from .quiver import (
    A_0INF,
    A_INF,
    C_N,
    Path,
    PathSubcoalgebra,
    QuiverError,
    Quiver,
    WindowedFamily,
    build_family,
)

YES = "yes"
NO = "no"
INCONCLUSIVE = "window-inconclusive"


@dataclass
class VertexVerdict:
    vertex: object
    in_R: bool
    r: object | None
    in_L: bool
    l: object | None
    left_ok: bool
    right_ok: bool
    left_reason: str | None = None
    right_reason: str | None = None


@dataclass
class FrobeniusReport:
    kind: str  # path | incidence | window
    per_vertex: dict
    left_verdict: str
    right_verdict: str
    left_witness: tuple | None = None  # (vertex, reason)
    right_witness: tuple | None = None
    family: str | None = None
    interior: tuple = ()
    margin: int | None = None
    window_limited_left: bool = False
    window_limited_right: bool = False
    notes: tuple[str, ...] = ()

    def r_map(self) -> dict:
        return {v: info.r for v, info in self.per_vertex.items() if info.in_R}

    def l_map(self) -> dict:
        return {v: info.l for v, info in self.per_vertex.items() if info.in_L}


def _unique_prefix_max(paths: list[Path]) -> Path | None:
    """The member every other member is a prefix of, if there is one."""
    best = max(paths, key=lambda p: p.length)
    for p in paths:
        if p.arrows != best.arrows[: p.length]:
            return None
    return best


def _unique_suffix_max(paths: list[Path]) -> Path | None:
    best = max(paths, key=lambda p: p.length)
    n = best.length
    for p in paths:
        if p.arrows != best.arrows[n - p.length :]:
            return None
    return best


def _analyze_path(coalg: PathSubcoalgebra) -> FrobeniusReport:
    vertices = coalg.vertices()
    out_paths: dict[str, list[Path]] = {v: [] for v in vertices}
    in_paths: dict[str, list[Path]] = {v: [] for v in vertices}
    for p in coalg.basis_list:
        if p.source in out_paths:
            out_paths[p.source].append(p)
        if p.target in in_paths:
            in_paths[p.target].append(p)

    r_of: dict[str, str] = {}
    l_of: dict[str, str] = {}
    for v in vertices:
        d = _unique_prefix_max(out_paths[v])
        if d is not None:
            r_of[v] = d.target
        d = _unique_suffix_max(in_paths[v])
        if d is not None:
            l_of[v] = d.source

    per_vertex: dict[str, VertexVerdict] = {}
    for v in vertices:
        info = VertexVerdict(
            vertex=v,
            in_R=v in r_of,
            r=r_of.get(v),
            in_L=v in l_of,
            l=l_of.get(v),
            left_ok=False,
            right_ok=False,
        )
        if not info.in_R:
            info.left_reason = "no unique maximal outgoing path"
        elif info.r not in l_of:
            info.left_reason = f"endpoint {info.r!r} has no unique maximal incoming path"
        elif l_of[info.r] != v:
            info.left_reason = f"backward map sends {info.r!r} to {l_of[info.r]!r}, not back to {v!r}"
        else:
            info.left_ok = True
        if not info.in_L:
            info.right_reason = "no unique maximal incoming path"
        elif info.l not in r_of:
            info.right_reason = f"start {info.l!r} has no unique maximal outgoing path"
        elif r_of[info.l] != v:
            info.right_reason = f"forward map sends {info.l!r} to {r_of[info.l]!r}, not back to {v!r}"
        else:
            info.right_ok = True
        per_vertex[v] = info

    left_witness = next(
        ((v, per_vertex[v].left_reason) for v in vertices if not per_vertex[v].left_ok),
        None,
    )
    right_witness = next(
        ((v, per_vertex[v].right_reason) for v in vertices if not per_vertex[v].right_ok),
        None,
    )
    return FrobeniusReport(
        kind="path",
        per_vertex=per_vertex,
        left_verdict=NO if left_witness else YES,
        right_verdict=NO if right_witness else YES,
        left_witness=left_witness,
        right_witness=right_witness,
    )


def _analyze_incidence(coalg: IncidenceSubcoalgebra) -> FrobeniusReport:
    poset = coalg.poset
    elements = coalg.elements_in()
    r_of: dict = {}
    l_of: dict = {}
    for a in elements:
        ups = [x for x in poset.elements if (a, x) in coalg.basis]
        tops = [u for u in ups if all(poset.leq(x, u) for x in ups)]
        if tops:
            r_of[a] = tops[0]
        downs = [x for x in poset.elements if (x, a) in coalg.basis]
        bottoms = [u for u in downs if all(poset.leq(u, x) for x in downs)]
        if bottoms:
            l_of[a] = bottoms[0]

    per_vertex: dict = {}
    for a in elements:
        info = VertexVerdict(
            vertex=a,
            in_R=a in r_of,
            r=r_of.get(a),
            in_L=a in l_of,
            l=l_of.get(a),
            left_ok=False,
            right_ok=False,
        )
        if not info.in_R:
            info.left_reason = "no maximum among segments starting here"
        elif info.r not in l_of:
            info.left_reason = f"endpoint {info.r!r} has no minimum among incoming segments"
        elif l_of[info.r] != a:
            info.left_reason = f"backward map sends {info.r!r} to {l_of[info.r]!r}, not back to {a!r}"
        else:
            info.left_ok = True
        if not info.in_L:
            info.right_reason = "no minimum among segments ending here"
        elif info.l not in r_of:
            info.right_reason = f"start {info.l!r} has no maximum among outgoing segments"
        elif r_of[info.l] != a:
            info.right_reason = f"forward map sends {info.l!r} to {r_of[info.l]!r}, not back to {a!r}"
        else:
            info.right_ok = True
        per_vertex[a] = info

    left_witness = next(
        ((a, per_vertex[a].left_reason) for a in elements if not per_vertex[a].left_ok),
        None,
    )
    right_witness = next(
        ((a, per_vertex[a].right_reason) for a in elements if not per_vertex[a].right_ok),
        None,
    )
    return FrobeniusReport(
        kind="incidence",
        per_vertex=per_vertex,
        left_verdict=NO if left_witness else YES,
        right_verdict=NO if right_witness else YES,
        left_witness=left_witness,
        right_witness=right_witness,
    )


def _analyze_window(fam: WindowedFamily, margin: int | None = None) -> FrobeniusReport:
    errs = fam.validate()
    if errs:
        raise QuiverError("; ".join(errs))
    finite = build_family(fam)
    base = _analyze_path(finite)
    if fam.tag == C_N:
        return FrobeniusReport(
            kind="window",
            per_vertex=base.per_vertex,
            left_verdict=base.left_verdict,
            right_verdict=base.right_verdict,
            left_witness=base.left_witness,
            right_witness=base.right_witness,
            family=C_N,
            interior=tuple(str(k) for k in range(fam.n)),
            margin=0,
        )
    rm = fam.r_map()
    deviations = [rm[v] - v for v in range(fam.lo, fam.hi + 1)]
    m = max(deviations) if margin is None else margin
    interior = tuple(
        str(v) for v in range(fam.lo + m, fam.hi - m + 1)
    )
    notes = [
        "per-vertex results are exact for interior vertices; the global verdict "
        "follows from the declared family invariants"
    ]
    if margin is None:
        # with the automatic margin, truncation cannot disturb interior vertices
        for v in interior:
            if not base.per_vertex[v].left_ok:
                raise QuiverError(f"family invariants violated at interior vertex {v}")
    constant = len(set(deviations)) == 1
    if fam.tag == A_INF:
        if constant:
            right_verdict, right_witness, wl = YES, None, True
            notes.append(
                f"offset is constant ({deviations[0]}) on the window; the forward map "
                "is onto there, which the window cannot certify globally"
            )
        else:
            idx = next(
                i for i in range(1, len(deviations)) if deviations[i] != deviations[i - 1]
            )
            skipped = rm[fam.lo + idx - 1] + 1
            right_verdict, right_witness, wl = (
                NO,
                (str(skipped), "vertex is not the endpoint of any maximal path"),
                False,
            )
        return FrobeniusReport(
            kind="window",
            per_vertex=base.per_vertex,
            left_verdict=YES,
            right_verdict=right_verdict,
            right_witness=right_witness,
            family=A_INF,
            interior=interior,
            margin=m,
            window_limited_left=True,
            window_limited_right=wl,
            notes=tuple(notes),
        )
    # half line: the bottom vertex certifies the right-side failure exactly
    return FrobeniusReport(
        kind="window",
        per_vertex=base.per_vertex,
        left_verdict=YES,
        right_verdict=NO,
        right_witness=("0", "forward map does not return to the bottom vertex"),
        family=A_0INF,
        interior=interior,
        margin=m,
        window_limited_left=True,
        window_limited_right=False,
        notes=tuple(notes),
    )


def analyze(obj, margin: int | None = None) -> FrobeniusReport:
    """Full criterion evaluation for a finite coalgebra or a windowed family."""
    if isinstance(obj, PathSubcoalgebra):
        return _analyze_path(obj)
    if isinstance(obj, IncidenceSubcoalgebra):
        return _analyze_incidence(obj)
    if isinstance(obj, WindowedFamily):
        return _analyze_window(obj, margin)
    raise TypeError(f"cannot analyze {type(obj).__name__}")


@dataclass
class ExtensionCheck:
    ok: bool
    witness: object | None = None  # first basis element with no extension
    failures: tuple = ()


def check_condition_d(coalg: PathSubcoalgebra, params: PathFormParams) -> ExtensionCheck:
    """Every basis path must extend, by a composable basis path, to a parameter path."""
    param_set = set(params.paths)
    quiver = coalg.quiver
    failures = []
    for q in coalg.basis_list:
        found = False
        for p in coalg.basis_list:
            if q.target == p.source and quiver.concat(q, p) in param_set:
                found = True
                break
        if not found:
            failures.append(q)
    if failures:
        return ExtensionCheck(False, failures[0], tuple(failures))
    return ExtensionCheck(True)


def check_condition_d_incidence(
    coalg: IncidenceSubcoalgebra, params: IncidenceFormParams
) -> ExtensionCheck:
    """Every basis segment (x, z) must admit y >= z with (z, y) in the basis
    and the class of z between x and y marked."""
    marked_lookup: dict[tuple, list] = {}
    for cls in params.classes:
        if cls.marked:
            marked_lookup.setdefault((cls.x, cls.y), []).extend(cls.members)
    poset = coalg.poset
    failures = []
    for (x, z) in coalg.basis_list:
        found = False
        for y in poset.elements:
            if poset.leq(z, y) and (z, y) in coalg.basis:
                if z in marked_lookup.get((x, y), ()):
                    found = True
                    break
        if not found:
            failures.append((x, z))
    if failures:
        return ExtensionCheck(False, failures[0], tuple(failures))
    return ExtensionCheck(True)


POINT = ("point",)


@dataclass
class Classification:
    """Multiset of canonical summand descriptors plus the vertex assignment."""

    summands: tuple  # descriptor tuples, sorted
    assignment: dict  # vertex -> summand index (into summands)

    def key(self) -> tuple:
        return self.summands


@dataclass
class ClassificationResult:
    classification: Classification | None
    violation: tuple | None = None  # (reason, where)

    @property
    def ok(self) -> bool:
        return self.classification is not None


def classify_finite(coalg: PathSubcoalgebra) -> ClassificationResult:
    """Decompose into connected components and match each against the
    canonical shapes; any mismatch is returned as a violation witness."""
    vertices = coalg.vertices()
    vset = set(vertices)
    basis_arrows = [p for p in coalg.basis_list if p.length == 1]
    out_of: dict[str, list[Path]] = {v: [] for v in vertices}
    into: dict[str, list[Path]] = {v: [] for v in vertices}
    for a in basis_arrows:
        out_of[a.source].append(a)
        into[a.target].append(a)

    for v in vertices:
        if len(out_of[v]) > 1:
            return ClassificationResult(None, ("two basis arrows leave one vertex", v))
        if len(into[v]) > 1:
            return ClassificationResult(None, ("two basis arrows enter one vertex", v))
        if not out_of[v] and into[v]:
            return ClassificationResult(
                None, ("vertex with an incoming arrow but no outgoing arrow", v)
            )
        if out_of[v] and not into[v]:
            return ClassificationResult(
                None, ("vertex with an outgoing arrow but no incoming arrow", v)
            )

    # components of the arrow graph restricted to the basis
    comp: dict[str, int] = {}
    order: list[list[str]] = []
    for v in vertices:
        if v in comp:
            continue
        idx = len(order)
        stack = [v]
        members = []
        comp[v] = idx
        while stack:
            u = stack.pop()
            members.append(u)
            for a in out_of[u] + into[u]:
                for w in (a.source, a.target):
                    if w in vset and w not in comp:
                        comp[w] = idx
                        stack.append(w)
        order.append(sorted(members))

    max_out: dict[str, int] = {v: 0 for v in vertices}
    for p in coalg.basis_list:
        if p.source in max_out:
            max_out[p.source] = max(max_out[p.source], p.length)

    descriptors = []
    for members in order:
        arrows_here = sum(len(out_of[v]) for v in members)
        if arrows_here == 0:
            descriptors.append(POINT)
            continue
        n = len(members)
        lengths = sorted({max_out[v] for v in members})
        if len(lengths) != 1:
            return ClassificationResult(
                None,
                (
                    "maximal path lengths differ around a cycle",
                    tuple((v, max_out[v]) for v in members),
                ),
            )
        descriptors.append((C_N, n, lengths[0]))

    summands = tuple(sorted(descriptors))
    ordered = sorted(range(len(order)), key=lambda i: descriptors[i])
    assignment = {}
    for new_idx, old_idx in enumerate(ordered):
        for v in order[old_idx]:
            assignment[v] = new_idx
    return ClassificationResult(Classification(summands, assignment))


def family_descriptor(fam: WindowedFamily) -> tuple:
    errs = fam.validate()
    if errs:
        raise QuiverError("; ".join(errs))
    if fam.tag == C_N:
        return (C_N, fam.n, fam.s)
    rm = fam.r_map()
    diffs = tuple(rm[v] - v for v in range(fam.lo, fam.hi + 1))
    return (fam.tag, diffs)


def classify(obj) -> ClassificationResult:
    """Classify a finite path subcoalgebra, a windowed family, or a list of
    windowed families (line families keep their window descriptors)."""
    if isinstance(obj, PathSubcoalgebra):
        return classify_finite(obj)
    if isinstance(obj, WindowedFamily):
        obj = [obj]
    if isinstance(obj, (list, tuple)):
        finite_parts = []
        descriptors = []
        for fam in obj:
            if fam.tag == C_N:
                finite_parts.append(fam)
            else:
                descriptors.append(family_descriptor(fam))
        for fam in finite_parts:
            descriptors.append(family_descriptor(fam))
        return ClassificationResult(
            Classification(tuple(sorted(descriptors)), {})
        )
    raise TypeError(f"cannot classify {type(obj).__name__}")


def combine(*results: ClassificationResult) -> ClassificationResult:
    """Merge classifications of independent summand groups."""
    summands = []
    for res in results:
        if not res.ok:
            return res
        summands.extend(res.classification.summands)
    return ClassificationResult(Classification(tuple(sorted(summands)), {}))


def iso_key(classification: Classification) -> tuple:
    """Canonical isomorphism key: the sorted descriptor multiset.

    Two-sided line windows enter through their run of reach offsets, which
    is invariant under translating the whole window; half-line families
    compare verbatim; cycles compare by (n, s); points by count.
    """
    return classification.key()


@dataclass
class IsoCheck:
    isomorphic: bool
    window_limited: bool  # true when line-family windows took part


def iso_check(c1: Classification, c2: Classification) -> IsoCheck:
    limited = any(d[0] in (A_INF, A_0INF) for d in c1.summands + c2.summands)
    return IsoCheck(iso_key(c1) == iso_key(c2), limited)


@dataclass
class HopfAdmissibility:
    family: str  # "I" | "II" | "III" | "none"
    summand_count: int
    s: int | None = None
    n: int | None = None
    reason: str | None = None
    window_limited: bool = False


def admits_hopf(classification: Classification) -> HopfAdmissibility:
    """Which coalgebras of this shape carry a Hopf structure: equal line
    summands with constant offset, equal cycle summands with the divisibility
    constraint, or pure grouplike."""
    summands = classification.summands
    count = len(summands)
    if count == 0:
        return HopfAdmissibility("none", 0, reason="empty coalgebra")
    kinds = {d[0] for d in summands}
    if kinds == {"point"}:
        return HopfAdmissibility("III", count)
    if kinds == {C_N}:
        if len(set(summands)) != 1:
            return HopfAdmissibility("none", count, reason="cycle summands differ")
        _, n, s = summands[0]
        if n >= 2 and n % (s + 1) == 0:
            return HopfAdmissibility("II", count, s=s, n=n)
        return HopfAdmissibility(
            "none", count, s=s, n=n, reason=f"{s + 1} does not divide {n}"
        )
    if kinds == {A_INF}:
        if len(set(summands)) != 1:
            return HopfAdmissibility("none", count, reason="line summands differ")
        diffs = summands[0][1]
        if len(set(diffs)) == 1:
            return HopfAdmissibility("I", count, s=diffs[0], window_limited=True)
        return HopfAdmissibility(
            "none", count, reason="reach offset is not constant on the window"
        )
    if kinds == {A_0INF}:
        return HopfAdmissibility(
            "none", count, reason="half-line summands are never right co-Frobenius"
        )
    return HopfAdmissibility("none", count, reason="mixed summand kinds")


def finite_path_coalgebra_hopf(quiver: Quiver) -> bool:
    """A finite-dimensional full path coalgebra admits a Hopf structure
    exactly when the quiver has no arrows."""
    if not quiver.is_acyclic():
        raise QuiverError("path coalgebra is infinite dimensional (quiver has a cycle)")
    return len(quiver.arrow_ids) == 0
