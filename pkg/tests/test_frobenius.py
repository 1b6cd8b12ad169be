import random

import pytest

from qcf.forms import incidence_form_params, path_form_params
from qcf.frobenius import (
    Classification,
    admits_hopf,
    analyze,
    check_condition_d,
    check_condition_d_incidence,
    classify,
    combine,
    finite_path_coalgebra_hopf,
    iso_check,
    iso_key,
)
from qcf.posets import Poset, full_incidence_coalgebra
from qcf.quiver import (
    A_0INF,
    A_INF,
    PathSubcoalgebra,
    Quiver,
    QuiverError,
    WindowedFamily,
    build_family,
    cycle_quiver,
    direct_sum,
    full_path_coalgebra,
)
from qcf.rand import random_descriptor_multiset


def test_full_path_coalgebra_with_arrow_is_not_cofrobenius():
    coalg = full_path_coalgebra(Quiver(["u", "v"], [("a", "u", "v")]))
    report = analyze(coalg)
    assert report.left_verdict == "no"
    assert report.right_verdict == "no"
    assert report.left_witness[0] == "v"


def test_cycle_families_are_two_sided():
    for n in range(1, 6):
        for s in range(1, 4):
            report = analyze(build_family(WindowedFamily.cycle(n, s)))
            assert report.left_verdict == "yes"
            assert report.right_verdict == "yes"
            r_map = report.r_map()
            l_map = report.l_map()
            for k in range(n):
                assert r_map[str(k)] == str((k + s) % n)
                assert l_map[r_map[str(k)]] == str(k)


def test_line_window_constant_offset():
    fam = WindowedFamily.line(A_INF, {k: k + 2 for k in range(-3, 6)})
    report = analyze(fam)
    assert report.left_verdict == "yes"
    assert report.right_verdict == "yes"
    assert report.window_limited_right
    assert report.interior  # nonempty for this window
    for v in report.interior:
        assert report.per_vertex[v].left_ok
        assert report.per_vertex[v].right_ok


def test_line_window_growing_offset_fails_right():
    fam = WindowedFamily.line(A_INF, {k: (k + 1 if k < 1 else k + 2) for k in range(-3, 6)})
    report = analyze(fam)
    assert report.left_verdict == "yes"
    assert report.right_verdict == "no"
    assert report.right_witness == ("2", "vertex is not the endpoint of any maximal path")


def test_half_line_window_is_never_right():
    fam = WindowedFamily.line(A_0INF, {k: k + 2 for k in range(0, 7)})
    report = analyze(fam)
    assert report.left_verdict == "yes"
    assert report.right_verdict == "no"
    assert report.right_witness[0] == "0"


def test_unique_maximal_uses_prefix_order():
    # two loops at one vertex: the longest outgoing path does not dominate
    quiver = Quiver(["v"], [("x", "v", "v"), ("y", "v", "v")])
    basis = [
        quiver.vertex_path("v"),
        quiver.arrow_path("x"),
        quiver.arrow_path("y"),
        quiver.make_path(("x", "y")),
    ]
    coalg = PathSubcoalgebra(quiver, basis)
    assert coalg.validate() == []
    report = analyze(coalg)
    assert not report.per_vertex["v"].in_R
    assert report.left_verdict == "no"


def test_extension_condition_agrees_on_small_examples():
    arrow = full_path_coalgebra(Quiver(["u", "v"], [("a", "u", "v")]))
    check = check_condition_d(arrow, path_form_params(arrow))
    assert not check.ok and check.witness == arrow.quiver.vertex_path("v")

    cycle = build_family(WindowedFamily.cycle(2, 1))
    assert check_condition_d(cycle, path_form_params(cycle)).ok

    grouplike = full_path_coalgebra(Quiver(["x", "y"], []))
    assert check_condition_d(grouplike, path_form_params(grouplike)).ok


def test_extension_condition_incidence_examples():
    antichain = full_incidence_coalgebra(Poset(["p", "q"], []))
    assert check_condition_d_incidence(antichain, incidence_form_params(antichain)).ok

    chain = full_incidence_coalgebra(
        Poset.from_covers(["0", "1", "2"], [("0", "1"), ("1", "2")])
    )
    check = check_condition_d_incidence(chain, incidence_form_params(chain))
    assert not check.ok
    assert ("1", "2") in check.failures


def test_classify_direct_sum_of_cycles_and_points():
    k32 = build_family(WindowedFamily.cycle(3, 2))
    point = full_path_coalgebra(Quiver(["z"], []))
    total = direct_sum([k32, k32, point])
    result = classify(total)
    assert result.ok
    assert result.classification.summands == (("Cn", 3, 2), ("Cn", 3, 2), ("point",))


def test_classify_rejects_uneven_cycle_lengths():
    quiver = cycle_quiver(3)
    basis = [quiver.vertex_path(str(k)) for k in range(3)]
    basis += [quiver.arrow_path(f"a{k}") for k in range(3)]
    basis.append(quiver.make_path(("a0", "a1")))
    coalg = PathSubcoalgebra(quiver, basis)
    assert coalg.validate() == []
    result = classify(coalg)
    assert not result.ok
    assert result.violation[0] == "maximal path lengths differ around a cycle"


def test_classify_rejects_acyclic_with_arrows():
    coalg = full_path_coalgebra(Quiver(["u", "v"], [("a", "u", "v")]))
    result = classify(coalg)
    assert not result.ok


def test_classify_rejects_branching():
    quiver = Quiver(["u", "v", "w"], [("a", "u", "v"), ("b", "u", "w")])
    coalg = full_path_coalgebra(quiver)
    result = classify(coalg)
    assert not result.ok
    assert "leave" in result.violation[0]


def test_iso_keys_for_cycles():
    c21 = classify(build_family(WindowedFamily.cycle(2, 1))).classification
    c21b = classify(build_family(WindowedFamily.cycle(2, 1))).classification
    c41 = classify(build_family(WindowedFamily.cycle(4, 1))).classification
    assert iso_check(c21, c21b).isomorphic
    assert not iso_check(c21, c41).isomorphic
    assert not iso_check(c21, c41).window_limited


def test_iso_keys_for_translated_line_windows():
    # same run of offsets on a shifted window: isomorphic via translation
    f1 = WindowedFamily.line(A_INF, {k: k + 2 for k in range(0, 5)})
    f2 = WindowedFamily.line(A_INF, {k: k + 2 for k in range(3, 8)})
    c1 = classify([f1]).classification
    c2 = classify([f2]).classification
    check = iso_check(c1, c2)
    assert check.isomorphic and check.window_limited
    f3 = WindowedFamily.line(A_INF, {k: k + 3 for k in range(0, 5)})
    assert not iso_check(c1, classify([f3]).classification).isomorphic


def test_half_line_windows_compare_verbatim():
    f1 = WindowedFamily.line(A_0INF, {k: k + 2 for k in range(0, 5)})
    f2 = WindowedFamily.line(A_0INF, {0: 2, 1: 3, 2: 5, 3: 6, 4: 7})
    assert iso_check(classify([f1]).classification, classify([f1]).classification).isomorphic
    assert not iso_check(classify([f1]).classification, classify([f2]).classification).isomorphic


def test_admits_hopf_families():
    points = Classification((("point",),) * 7, {})
    assert admits_hopf(points).family == "III"
    cycles = Classification((("Cn", 4, 1), ("Cn", 4, 1)), {})
    adm = admits_hopf(cycles)
    assert adm.family == "II" and adm.n == 4 and adm.s == 1
    assert admits_hopf(Classification((("Cn", 3, 1),), {})).family == "none"
    lines = classify([WindowedFamily.line(A_INF, {k: k + 2 for k in range(0, 5)})]).classification
    adm = admits_hopf(lines)
    assert adm.family == "I" and adm.s == 2 and adm.window_limited
    mixed = Classification((("Cn", 2, 1), ("point",)), {})
    assert admits_hopf(mixed).family == "none"


def test_finite_path_coalgebra_hopf_rule():
    assert finite_path_coalgebra_hopf(Quiver(["a", "b", "c"], []))
    assert not finite_path_coalgebra_hopf(Quiver(["u", "v"], [("a", "u", "v")]))
    with pytest.raises(QuiverError):
        finite_path_coalgebra_hopf(cycle_quiver(2))


def test_ladder_window_interior_elements_pass():
    # truncating the two-layer ladder only disturbs the top boundary
    from test_forms import ladder_window

    levels, width = 4, 2
    _, coalg = ladder_window(levels, width)
    report = analyze(coalg)
    boundary = {f"a{levels}"} | {f"b{levels - 1}_{i}" for i in range(1, width + 1)}
    for element, info in report.per_vertex.items():
        assert info.left_ok == (element not in boundary), element
    check = check_condition_d_incidence(coalg, incidence_form_params(coalg))
    assert not check.ok
    for x, z in check.failures:
        assert x in boundary or z in boundary


def test_round_trip_small_sample():
    rng = random.Random(13)
    for _ in range(20):
        finite_parts, families, expected = random_descriptor_multiset(rng)
        partial = []
        if finite_parts:
            partial.append(classify(direct_sum(finite_parts)))
        if families:
            partial.append(classify(families))
        result = combine(*partial)
        assert result.ok
        assert iso_key(result.classification) == expected
