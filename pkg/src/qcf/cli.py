"""Command dispatch and JSON reporting; the only module with I/O.

Commands: validate, forms, frobenius, classify, embed, tensor, hopf,
hopf-verify. Input is a document in the structure-description language;
output is a single JSON report. Exit status 0 means the analysis completed
(negative verdicts included); nonzero means bad input.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path as FilePath

from . import dsl, forms, frobenius, hopf
from .lincomb import LinComb
from .posets import (
    IncidenceSubcoalgebra,
    Poset,
    embed,
    full_incidence_coalgebra,
    tensor_iso_check,
)
from .quiver import (
    C_N,
    Path,
    PathSubcoalgebra,
    Quiver,
    QuiverError,
    WindowedFamily,
    bounded_path_coalgebra,
    build_family,
    direct_sum,
    full_path_coalgebra,
)
from .scalars import Cyc, RootOfUnity, ScalarError, scalar_to_str

COMMANDS = (
    "validate",
    "forms",
    "frobenius",
    "classify",
    "embed",
    "tensor",
    "hopf",
    "hopf-verify",
)


class InputError(Exception):
    pass


# ---------------------------------------------------------------------------
# resolution: declarations -> library objects


@dataclass
class CoalgValue:
    """A resolved coalgebra declaration.

    kind 'path': finite path subcoalgebra in `finite`.
    kind 'incidence': incidence subcoalgebra in `incidence`.
    kind 'mixed': finite path part (possibly None) plus windowed families.
    """

    kind: str
    finite: PathSubcoalgebra | None = None
    incidence: IncidenceSubcoalgebra | None = None
    families: tuple[WindowedFamily, ...] = ()
    violations: tuple[str, ...] = ()


@dataclass
class HopfValue:
    kind: str  # hn | group_algebra
    s: int = 0
    q: RootOfUnity | None = None
    group: hopf.FiniteGroupData | None = None
    alpha: Cyc | None = None
    plain_table: tuple | None = None  # (table, names, identity) for group_algebra


@dataclass
class Resolved:
    quivers: dict
    posets: dict
    coalgebras: dict  # name -> CoalgValue
    hopfs: dict  # name -> HopfValue


def _scalar_value(sc: dsl.ScalarExpr) -> Cyc:
    if sc.kind == "rational":
        return Cyc.rational(Fraction(sc.num, sc.den))
    return Cyc.root(sc.order, sc.exponent)


def _root_value(sc: dsl.ScalarExpr) -> RootOfUnity:
    if sc.kind == "root":
        return RootOfUnity(sc.order, sc.exponent)
    if sc.kind == "rational" and sc.den == 1 and sc.num == -1:
        return RootOfUnity(2, 1)
    if sc.kind == "rational" and sc.den == 1 and sc.num == 1:
        return RootOfUnity(1, 0)
    raise InputError("q must be root(m, k), 1, or -1")


def _group_value(expr: dsl.GroupExpr, base: FilePath | None):
    if expr.kind == "cyclic":
        table = hopf.cyclic_table(expr.n)
        names = tuple("e" if k == 0 else f"c{k}" for k in range(expr.n))
        return table, names, 0
    if expr.kind == "dihedral":
        table, names, _ = hopf.dihedral_table(expr.n)
        return table, names, 0
    if expr.kind == "product":
        parts = [_group_value(p, base) for p in expr.parts]
        table, names, identity = parts[0]
        for t2, n2, e2 in parts[1:]:
            size1, size2 = len(table), len(t2)
            pairs = [(i, j) for i in range(size1) for j in range(size2)]
            index = {p: k for k, p in enumerate(pairs)}
            table = tuple(
                tuple(index[(table[i1][j1], t2[i2][j2])] for (j1, j2) in pairs)
                for (i1, i2) in pairs
            )
            names = tuple(f"{names[i]}*{n2[j]}" for (i, j) in pairs)
            identity = index[(identity, e2)]
        return table, names, identity
    path = FilePath(expr.path)
    if base is not None and not path.is_absolute():
        path = base / path
    try:
        with open(path, newline="") as fh:
            rows = [[int(x) for x in row] for row in csv.reader(fh) if row]
    except OSError as exc:
        raise InputError(f"cannot read group table {path}: {exc}") from exc
    return hopf.group_from_csv_rows(rows)


def resolve(doc: dsl.Document, base: FilePath | None = None) -> tuple[Resolved, list[dsl.Diagnostic]]:
    quivers: dict = {}
    posets: dict = {}
    coalgebras: dict = {}
    hopfs: dict = {}
    diags: list[dsl.Diagnostic] = []

    def fail(pos, msg):
        diags.append(dsl.Diagnostic(pos, msg))

    for d in doc.declarations:
        if isinstance(d, dsl.QuiverDecl):
            try:
                quivers[d.name] = Quiver(d.vertices, d.arrows)
            except QuiverError as exc:
                fail(d.pos, f"quiver {d.name}: {exc}")
        elif isinstance(d, dsl.PosetDecl):
            try:
                posets[d.name] = Poset.from_covers(d.elements, d.covers)
            except Exception as exc:
                fail(d.pos, f"poset {d.name}: {exc}")
        elif isinstance(d, dsl.CoalgebraDecl):
            value = _resolve_coalgebra(d, quivers, posets, coalgebras, fail)
            if value is not None:
                coalgebras[d.name] = value
        elif isinstance(d, dsl.HopfDecl):
            try:
                hopfs[d.name] = _resolve_hopf(d, base)
            except (InputError, hopf.HopfError, ScalarError) as exc:
                fail(d.pos, f"hopf {d.name}: {exc}")
    return Resolved(quivers, posets, coalgebras, hopfs), diags


def _resolve_coalgebra(d, quivers, posets, coalgebras, fail) -> CoalgValue | None:
    e = d.expr
    if e.kind in ("paths", "basis"):
        quiver = quivers.get(e.target)
        if quiver is None:
            fail(d.pos, f"coalgebra {d.name}: unknown quiver {e.target!r}")
            return None
        try:
            if e.kind == "paths":
                if e.maxlen is not None:
                    coalg = bounded_path_coalgebra(quiver, e.maxlen)
                else:
                    coalg = full_path_coalgebra(quiver)
            else:
                basis = []
                arrow_set = set(quiver.arrow_ids)
                vertex_set = set(quiver.vertices)
                for item in e.items:
                    if len(item) == 1 and item[0] in vertex_set:
                        basis.append(quiver.vertex_path(item[0]))
                    elif all(p in arrow_set for p in item):
                        basis.append(quiver.make_path(item))
                    else:
                        raise QuiverError(f"bad path item {' '.join(item)!r}")
                coalg = PathSubcoalgebra(quiver, basis)
        except QuiverError as exc:
            fail(d.pos, f"coalgebra {d.name}: {exc}")
            return None
        violations = coalg.validate()
        return CoalgValue("path", finite=coalg, violations=tuple(violations))
    if e.kind in ("segments", "full"):
        poset = posets.get(e.target)
        if poset is None:
            fail(d.pos, f"coalgebra {d.name}: unknown poset {e.target!r}")
            return None
        try:
            if e.kind == "full":
                coalg = full_incidence_coalgebra(poset)
            else:
                coalg = IncidenceSubcoalgebra(poset, e.items)
        except Exception as exc:
            fail(d.pos, f"coalgebra {d.name}: {exc}")
            return None
        return CoalgValue(
            "incidence", incidence=coalg, violations=tuple(coalg.validate())
        )
    if e.kind == "family":
        if e.family_tag == "Cn":
            fam = WindowedFamily.cycle(e.n, e.s)
        else:
            r = dict(e.r)
            lo, hi = e.window
            if sorted(r) != list(range(lo, hi + 1)):
                fail(d.pos, f"coalgebra {d.name}: reach table must cover the window")
                return None
            fam = WindowedFamily.line(e.family_tag, r)
        errs = fam.validate()
        if errs:
            fail(d.pos, f"coalgebra {d.name}: " + "; ".join(errs))
            return None
        if e.family_tag == "Cn":
            # cycle families are finite; materialize them outright
            return CoalgValue("path", finite=build_family(fam))
        return CoalgValue("mixed", families=(fam,))
    if e.kind == "sum":
        finite_parts: list[PathSubcoalgebra] = []
        incidence_parts: list[IncidenceSubcoalgebra] = []
        families: list[WindowedFamily] = []
        for name in e.items:
            part = coalgebras.get(name)
            if part is None:
                fail(d.pos, f"coalgebra {d.name}: unknown summand {name!r}")
                return None
            if part.kind == "path":
                finite_parts.append(part.finite)
            elif part.kind == "incidence":
                incidence_parts.append(part.incidence)
            else:
                if part.finite is not None:
                    finite_parts.append(part.finite)
                families.extend(part.families)
        if incidence_parts and (finite_parts or families):
            fail(d.pos, f"coalgebra {d.name}: cannot mix incidence and path summands")
            return None
        if incidence_parts:
            elements = []
            pairs = []
            basis = []
            for i, part in enumerate(incidence_parts):
                pref = f"s{i}."
                rename = {x: f"{pref}{x}" for x in part.poset.elements}
                elements.extend(rename[x] for x in part.poset.elements)
                pairs.extend(
                    (rename[a], rename[b])
                    for a in part.poset.elements
                    for b in part.poset.elements
                    if part.poset.leq(a, b)
                )
                basis.extend((rename[a], rename[b]) for (a, b) in part.basis_list)
            coalg = IncidenceSubcoalgebra(Poset(elements, pairs), basis)
            return CoalgValue(
                "incidence", incidence=coalg, violations=tuple(coalg.validate())
            )
        finite = direct_sum(finite_parts) if finite_parts else None
        if finite is not None and not families:
            return CoalgValue("path", finite=finite)
        return CoalgValue("mixed", finite=finite, families=tuple(families))
    raise AssertionError(e.kind)


def _resolve_hopf(d: dsl.HopfDecl, base) -> HopfValue:
    e = d.expr
    table, names, identity = _group_value(e.group, base)
    if e.kind == "group_algebra":
        return HopfValue("group_algebra", plain_table=(table, names, identity))
    if e.q is None:
        raise InputError("hn(...) needs q")
    q = _root_value(e.q)
    s = e.s
    alpha = _scalar_value(e.alpha) if e.alpha is not None else Cyc.zero()
    if e.chi is not None:
        chi = tuple(_as_root_expr(c) for c in e.chi)
        if len(chi) != len(table):
            raise InputError("chi must list one value per group element")
    else:
        chi = None
    if e.g is not None:
        g = e.g
        if not 0 <= g < len(table):
            raise InputError(f"g index {g} out of range")
        if chi is None:
            raise InputError("explicit g needs an explicit chi")
        datum = hopf.FiniteGroupData(table, names, identity, g, chi)
    else:
        datum = _default_datum(e.group, s, q, table, names, identity, chi)
    datum.validate(s, q, alpha)
    return HopfValue("hn", s=s, q=q, group=datum, alpha=alpha)


def _as_root_expr(sc: dsl.ScalarExpr) -> RootOfUnity:
    return _root_value(sc)


def _default_datum(gexpr, s, q, table, names, identity, chi):
    if chi is not None:
        raise InputError("explicit chi needs an explicit g")
    if gexpr.kind == "cyclic":
        return hopf.cyclic_hopf_datum(gexpr.n, s, q)
    if gexpr.kind == "product" and all(p.kind == "cyclic" for p in gexpr.parts):
        if len(gexpr.parts) == 2 and gexpr.parts[1].n == 2:
            return hopf.cyclic_x_c2_hopf_datum(gexpr.parts[0].n, s, q)
    if gexpr.kind == "dihedral":
        datum = hopf.dihedral_hopf_datum(gexpr.n, s, q)
        if datum is None:
            raise InputError(
                f"dihedral({gexpr.n}) has no central element of order {gexpr.n} "
                "with a matching character"
            )
        return datum
    raise InputError("this group constructor needs explicit g and chi")


# ---------------------------------------------------------------------------
# JSON serialization helpers


def path_json(p: Path):
    if p.is_vertex():
        return {"vertex": p.source}
    return {"source": p.source, "arrows": list(p.arrows), "target": p.target}


def basis_json(coalg: PathSubcoalgebra):
    return {
        "vertices": coalg.vertices(),
        "paths": [list(p.arrows) for p in coalg.basis_list if not p.is_vertex()],
    }


def segment_str(seg) -> str:
    return f"[{seg[0]},{seg[1]}]"


def lincomb_json(x: LinComb, label_fn=repr):
    return {label_fn(l): scalar_to_str(c) for l, c in sorted(x.items(), key=lambda kv: label_fn(kv[0]))}


def witness_json(w):
    if w is None:
        return None
    vertex, reason = w
    return {"at": str(vertex), "reason": reason}


QCF_NOTE = (
    "quasi-co-Frobenius is equivalent to co-Frobenius for path and incidence "
    "subcoalgebras; the verdicts coincide"
)


def frobenius_json(rep: frobenius.FrobeniusReport):
    out = {
        "kind": rep.kind,
        "left_coFrobenius": rep.left_verdict,
        "right_coFrobenius": rep.right_verdict,
        "quasi_coFrobenius": QCF_NOTE,
        "R": {str(v): str(t) for v, t in sorted(rep.r_map().items(), key=lambda kv: str(kv[0]))},
        "L": {str(v): str(t) for v, t in sorted(rep.l_map().items(), key=lambda kv: str(kv[0]))},
        "witness_left": witness_json(rep.left_witness),
        "witness_right": witness_json(rep.right_witness),
    }
    if rep.kind == "window":
        out["family"] = rep.family
        out["interior"] = list(rep.interior)
        out["margin"] = rep.margin
        out["window_limited"] = {
            "left": rep.window_limited_left,
            "right": rep.window_limited_right,
        }
        out["notes"] = list(rep.notes)
    return out


def _merge_frobenius(reports: list) -> dict:
    if len(reports) == 1:
        return frobenius_json(reports[0])
    verdict_rank = {"yes": 0, "window-inconclusive": 1, "no": 2}
    merged = {
        "kind": "sum",
        "parts": [frobenius_json(r) for r in reports],
    }
    for side in ("left", "right"):
        verdicts = [getattr(r, f"{side}_verdict") for r in reports]
        worst = max(verdicts, key=lambda v: verdict_rank[v])
        merged[f"{side}_coFrobenius"] = worst
        merged[f"witness_{side}"] = next(
            (
                witness_json(getattr(r, f"{side}_witness"))
                for r in reports
                if getattr(r, f"{side}_witness") is not None
            ),
            None,
        )
    return merged


# ---------------------------------------------------------------------------
# commands


def _finite_coalgebra_for_forms(value: CoalgValue):
    if value.kind == "path":
        return value.finite
    if value.kind == "incidence":
        return value.incidence
    parts = [build_family(f) for f in value.families]
    if value.finite is not None:
        parts.insert(0, value.finite)
    return direct_sum(parts) if len(parts) > 1 else parts[0]


def cmd_validate(res: Resolved, flags) -> dict:
    results = {}
    for name, value in sorted(res.coalgebras.items()):
        entry = {
            "ok": not value.violations,
            "violations": list(value.violations),
        }
        if value.kind == "path":
            entry["basis"] = basis_json(value.finite)
        elif value.kind == "incidence":
            entry["basis"] = {
                "segments": [segment_str(s) for s in value.incidence.basis_list]
            }
        else:
            entry["families"] = [
                {"tag": f.tag, "n": f.n, "s": f.s}
                if f.tag == C_N
                else {"tag": f.tag, "window": [f.lo, f.hi], "r": dict(f.r)}
                for f in value.families
            ]
            if value.finite is not None:
                entry["basis"] = basis_json(value.finite)
        results[name] = entry
    return results


def cmd_forms(res: Resolved, flags) -> dict:
    results = {}
    for name, value in sorted(res.coalgebras.items()):
        _require_valid(name, value)
        coalg = _finite_coalgebra_for_forms(value)
        if isinstance(coalg, IncidenceSubcoalgebra):
            params = forms.incidence_form_params(coalg)
            form = forms.form_from_incidence_params(
                coalg, params, forms.all_ones_alpha_incidence(params)
            )
            census: dict = {
                "kind": "incidence",
                "marked_classes": params.size,
                "class_census": [
                    {
                        "x": str(c.x),
                        "y": str(c.y),
                        "members": [str(m) for m in c.members],
                        "marked": c.marked,
                    }
                    for c in params.classes
                ],
            }
        else:
            params = forms.path_form_params(coalg)
            form = forms.form_from_path_params(
                coalg, params, forms.all_ones_alpha_path(params)
            )
            census = {
                "kind": "path",
                "F_size": params.size,
                "F": [path_json(p) for p in params.paths],
            }
        space = forms.balanced_space_bruteforce(coalg, bound=flags.bound)
        balanced = forms.is_balanced(form)
        left_rad, right_rad = forms.radicals(form)
        census.update(
            {
                "basis_size": coalg.dimension,
                "param_count": params.size,
                "nullspace_dim": len(space),
                "agree": len(space) == params.size,
                "all_ones_balanced": balanced.ok,
                "left_radical_dim": len(left_rad),
                "right_radical_dim": len(right_rad),
            }
        )
        results[name] = census
    return results


def cmd_frobenius(res: Resolved, flags) -> dict:
    results = {}
    for name, value in sorted(res.coalgebras.items()):
        _require_valid(name, value)
        reports = []
        if value.kind == "path":
            reports.append(frobenius.analyze(value.finite))
        elif value.kind == "incidence":
            reports.append(frobenius.analyze(value.incidence))
        else:
            if value.finite is not None:
                reports.append(frobenius.analyze(value.finite))
            for fam in value.families:
                reports.append(frobenius.analyze(fam, margin=flags.window_margin))
        results[name] = _merge_frobenius(reports)
    return results


def cmd_classify(res: Resolved, flags) -> dict:
    results = {}
    for name, value in sorted(res.coalgebras.items()):
        _require_valid(name, value)
        if value.kind == "incidence":
            results[name] = {"error": "classification applies to path-type coalgebras"}
            continue
        partial = []
        if value.finite is not None:
            partial.append(frobenius.classify(value.finite))
        if value.families:
            partial.append(frobenius.classify(list(value.families)))
        result = frobenius.combine(*partial)
        if not result.ok:
            results[name] = {
                "co_frobenius": False,
                "violation": {
                    "reason": result.violation[0],
                    "at": str(result.violation[1]),
                },
            }
            continue
        cls = result.classification
        adm = frobenius.admits_hopf(cls)
        admits = {
            "family": adm.family,
            "summand_count": adm.summand_count,
            "s": adm.s,
            "n": adm.n,
            "reason": adm.reason,
            "window_limited": adm.window_limited,
        }
        if adm.family == "I":
            admits["note"] = (
                "the infinite-group table is not materialized; its products are "
                "covered exactly by the closed-form line product on finitely "
                "supported elements"
            )
        results[name] = {
            "co_frobenius": True,
            "summands": [list(map(str, d)) for d in cls.summands],
            "canonical_key": repr(frobenius.iso_key(cls)),
            "admits_hopf": admits,
        }
    return results


def cmd_embed(res: Resolved, flags) -> dict:
    results = {}
    for name, value in sorted(res.coalgebras.items()):
        if value.kind != "incidence":
            continue
        _require_valid(name, value)
        r = embed(value.incidence)
        results[name] = {
            "morphism_ok": r.morphism_ok,
            "injective": r.injective,
            "image_dimension": r.image_dimension,
            "single_path_image": r.single_path_image,
            "failure": r.failure,
            "images": {
                segment_str(seg): [path_json(p) for p in sorted(v.labels(), key=lambda p: (p.length, p.source, p.arrows))]
                for seg, v in r.phi.items()
            },
        }
    if not results:
        raise InputError("embed needs at least one incidence coalgebra declaration")
    return results


def cmd_tensor(res: Resolved, flags) -> dict:
    names = flags.targets.split(",") if flags.targets else sorted(res.posets)
    if len(names) != 2:
        raise InputError("tensor needs exactly two posets (use --targets A,B)")
    try:
        x, y = res.posets[names[0]], res.posets[names[1]]
    except KeyError as exc:
        raise InputError(f"unknown poset {exc.args[0]!r}") from exc
    r = tensor_iso_check(x, y)
    return {
        "posets": names,
        "ok": r.ok,
        "product_elements": r.product_elements,
        "checked_segments": r.checked_segments,
        "failure": r.failure,
    }


def _build_hopf_table(value: HopfValue):
    if value.kind == "group_algebra":
        table, names, identity = value.plain_table
        t = hopf.group_algebra(table, names, identity)
    else:
        t = hopf.build_Hn(value.s, value.q, value.group, value.alpha)
    return hopf.with_antipode(t)


def _label_str(value: HopfValue, table):
    if value.kind == "group_algebra":
        names = value.plain_table[1]
        return lambda l: names[l]
    names = value.group.names
    return lambda l: f"{names[l[0]]}|x^{l[1]}"


def cmd_hopf(res: Resolved, flags, verify_only: bool = False) -> dict:
    results = {}
    for name, value in sorted(res.hopfs.items()):
        table = _build_hopf_table(value)
        rep = hopf.verify_hopf(table)
        label = _label_str(value, table)
        entry = {
            "meta": table.meta,
            "verified": rep.ok,
            "checks": {k: {"ok": v.ok, "failure": v.failure} for k, v in rep.checks.items()},
        }
        if not verify_only:
            entry["basis"] = [label(l) for l in table.labels]
            entry["product"] = {
                f"{label(a)} * {label(b)}": lincomb_json(table.product[(a, b)], label)
                for a in table.labels
                for b in table.labels
            }
            entry["coproduct"] = {
                label(l): lincomb_json(
                    table.coproduct[l], lambda pair: f"{label(pair[0])} (x) {label(pair[1])}"
                )
                for l in table.labels
            }
            entry["counit"] = {label(l): scalar_to_str(table.counit[l]) for l in table.labels}
            entry["antipode"] = {
                label(l): lincomb_json(table.antipode[l], label) for l in table.labels
            }
        results[name] = entry
    if not results:
        raise InputError("no hopf declarations in the document")
    return results


def _require_valid(name: str, value: CoalgValue) -> None:
    if value.violations:
        raise InputError(
            f"coalgebra {name} fails validation: {value.violations[0]}"
            + (f" (+{len(value.violations) - 1} more)" if len(value.violations) > 1 else "")
        )


# ---------------------------------------------------------------------------
# entry point


def run(command: str, doc: dsl.Document, flags, base=None) -> dict:
    resolved, diags = resolve(doc, base)
    if diags:
        raise InputError("; ".join(str(d) for d in diags))
    dispatch = {
        "validate": cmd_validate,
        "forms": cmd_forms,
        "frobenius": cmd_frobenius,
        "classify": cmd_classify,
        "embed": cmd_embed,
        "tensor": cmd_tensor,
        "hopf": cmd_hopf,
        "hopf-verify": lambda r, f: cmd_hopf(r, f, verify_only=True),
    }
    results = dispatch[command](resolved, flags)
    return {
        "command": command,
        "seed": flags.seed,
        "results": results,
    }


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcf",
        description="Exact analysis of path and incidence subcoalgebras.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", required=True, help="document file (.qcf)")
    parser.add_argument("--output", default=None, help="write the JSON report here")
    parser.add_argument("--seed", type=int, default=None, help="seed recorded in reports")
    parser.add_argument(
        "--bound", type=int, default=40, help="basis-size bound for the brute-force solver"
    )
    parser.add_argument(
        "--window-margin", type=int, default=None, dest="window_margin",
        help="override the interior margin for windowed families",
    )
    parser.add_argument("--targets", default=None, help="comma-separated declaration names")
    return parser


def main(argv=None) -> int:
    parser = build_arg_parser()
    flags = parser.parse_args(argv)
    try:
        text = FilePath(flags.input).read_text()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    doc, diags = dsl.parse(text)
    if doc is None:
        for d in diags:
            print(f"{flags.input}:{d}", file=sys.stderr)
        return 2
    try:
        report = run(flags.command, doc, flags, base=FilePath(flags.input).parent)
    except (InputError, forms.FormError, QuiverError, hopf.HopfError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    payload = json.dumps(report, indent=2, sort_keys=True)
    if flags.output:
        FilePath(flags.output).write_text(payload + "\n")
    else:
        print(payload)
    return 0


if __name__ == "__main__":
    sys.exit(main())
