import random

import pytest

from qcf.forms import (
    BilinearForm,
    FormError,
    all_ones_alpha_incidence,
    all_ones_alpha_path,
    balanced_space_bruteforce,
    form_from_incidence_params,
    form_from_path_params,
    incidence_form_params,
    is_balanced,
    path_form_params,
    radicals,
)
from qcf.posets import IncidenceSubcoalgebra, Poset, full_incidence_coalgebra
from qcf.quiver import (
    PathSubcoalgebra,
    Quiver,
    WindowedFamily,
    build_family,
    full_path_coalgebra,
)
from qcf.rand import random_incidence_subcoalgebra, random_path_subcoalgebra
from qcf.scalars import Cyc


@pytest.fixture
def single_arrow():
    quiver = Quiver(["u", "v"], [("a", "u", "v")])
    return quiver, full_path_coalgebra(quiver)


def test_zero_form_is_balanced(single_arrow):
    _, coalg = single_arrow
    assert is_balanced(BilinearForm(coalg, {})).ok


def test_diagonal_on_arrow_is_not_balanced(single_arrow):
    quiver, coalg = single_arrow
    a = quiver.arrow_path("a")
    check = is_balanced(BilinearForm(coalg, {(a, a): Cyc.one()}))
    assert not check.ok
    assert check.violation[0] == a and check.violation[1] == a


def test_single_arrow_parameter_paths(single_arrow):
    quiver, coalg = single_arrow
    params = path_form_params(coalg)
    assert params.paths == (quiver.arrow_path("a"),)
    form = form_from_path_params(coalg, params, all_ones_alpha_path(params))
    assert is_balanced(form).ok
    # the only nonzero entries pair the arrow against the matching vertices
    assert form.entry(quiver.arrow_path("a"), quiver.vertex_path("u")).is_one()
    assert form.entry(quiver.vertex_path("v"), quiver.arrow_path("a")).is_one()
    assert len(form.entries) == 2


def test_grouplike_parameter_paths_are_vertices():
    coalg = full_path_coalgebra(Quiver(["x", "y", "z"], []))
    params = path_form_params(coalg)
    assert sorted(p.source for p in params.paths) == ["x", "y", "z"]
    assert all(p.is_vertex() for p in params.paths)


def test_cycle_parameter_paths_exclude_vertices():
    coalg = build_family(WindowedFamily.cycle(2, 1))
    params = path_form_params(coalg)
    assert sorted(p.length for p in params.paths) == [1, 1, 2, 2]


def test_bruteforce_dimensions_match_examples(single_arrow):
    _, arrow_coalg = single_arrow
    grouplike = full_path_coalgebra(Quiver(["x", "y", "z"], []))
    cycle = build_family(WindowedFamily.cycle(2, 1))
    assert len(balanced_space_bruteforce(grouplike)) == 3
    assert len(balanced_space_bruteforce(arrow_coalg)) == 1
    assert len(balanced_space_bruteforce(cycle)) == 4


def test_bruteforce_respects_bound(single_arrow):
    _, coalg = single_arrow
    with pytest.raises(FormError):
        balanced_space_bruteforce(coalg, bound=2)


def test_form_with_partial_zero_alpha_still_balanced():
    coalg = build_family(WindowedFamily.cycle(2, 1))
    params = path_form_params(coalg)
    alpha = {}
    for i, d in enumerate(params.paths):
        alpha[d] = Cyc.rational(i % 2)  # some zero entries
    assert is_balanced(form_from_path_params(coalg, params, alpha)).ok


def test_incidence_params_antichain():
    poset = Poset(["p", "q", "r"], [])
    coalg = full_incidence_coalgebra(poset)
    params = incidence_form_params(coalg)
    assert params.size == 3
    assert all(cls.x == cls.y for cls in params.marked)
    assert len(balanced_space_bruteforce(coalg)) == 3


def test_incidence_params_chain_has_one_marked_class():
    poset = Poset.from_covers(["0", "1", "2"], [("0", "1"), ("1", "2")])
    coalg = full_incidence_coalgebra(poset)
    params = incidence_form_params(coalg)
    assert params.size == 1
    cls = params.marked[0]
    assert (cls.x, cls.y) == ("0", "2")
    assert cls.members == ("0", "1", "2")
    form = form_from_incidence_params(coalg, params, all_ones_alpha_incidence(params))
    assert is_balanced(form).ok
    assert len(balanced_space_bruteforce(coalg)) == 1


def ladder_window(levels: int = 3, width: int = 2):
    """A finite window of the two-layer order a_n < b_{n,i} < a_{n+1},
    with the segments of length <= 1 plus the two long jump families."""
    elements = [f"a{n}" for n in range(levels + 1)]
    covers = []
    for n in range(levels):
        for i in range(1, width + 1):
            elements.append(f"b{n}_{i}")
            covers.append((f"a{n}", f"b{n}_{i}"))
            covers.append((f"b{n}_{i}", f"a{n + 1}"))
    poset = Poset.from_covers(elements, covers)
    basis = [(e, e) for e in elements]
    for n in range(levels):
        basis.append((f"a{n}", f"a{n + 1}"))
        for i in range(1, width + 1):
            basis.append((f"a{n}", f"b{n}_{i}"))
            basis.append((f"b{n}_{i}", f"a{n + 1}"))
    for n in range(levels - 1):
        for i in range(1, width + 1):
            basis.append((f"b{n}_{i}", f"b{n + 1}_{i}"))
    return poset, IncidenceSubcoalgebra(poset, basis)


def test_ladder_window_is_interval_closed():
    _, coalg = ladder_window()
    assert coalg.validate() == []


def test_ladder_window_marked_classes_sit_on_the_jumps():
    levels, width = 3, 2
    _, coalg = ladder_window(levels, width)
    params = incidence_form_params(coalg)
    marked_pairs = {(cls.x, cls.y) for cls in params.marked}
    for n in range(levels):
        assert (f"a{n}", f"a{n + 1}") in marked_pairs
    for n in range(levels - 1):
        for i in range(1, width + 1):
            assert (f"b{n}_{i}", f"b{n + 1}_{i}") in marked_pairs
    # frozen census for this window, confirmed by the nullspace oracle
    assert params.size == 19
    assert len(balanced_space_bruteforce(coalg)) == params.size


def test_radicals_of_zero_and_identity_forms():
    coalg = full_path_coalgebra(Quiver(["x", "y"], []))
    zero = BilinearForm(coalg, {})
    left, right = radicals(zero)
    assert len(left) == len(right) == 2
    quiver = coalg.quiver
    ident = BilinearForm(
        coalg,
        {
            (quiver.vertex_path(v), quiver.vertex_path(v)): Cyc.one()
            for v in ("x", "y")
        },
    )
    left, right = radicals(ident)
    assert left == [] and right == []


def test_radical_of_non_cofrobenius_form(single_arrow):
    _, coalg = single_arrow
    params = path_form_params(coalg)
    form = form_from_path_params(coalg, params, all_ones_alpha_path(params))
    left, right = radicals(form)
    assert len(left) == 1 and len(right) == 1


def test_radical_dims_invariant_under_basis_permutation(single_arrow):
    quiver, coalg = single_arrow
    reordered = PathSubcoalgebra(quiver, list(reversed(coalg.basis_list)))
    params = path_form_params(coalg)
    for target in (coalg, reordered):
        form = form_from_path_params(target, params, all_ones_alpha_path(params))
        left, right = radicals(form)
        assert (len(left), len(right)) == (1, 1)


def test_cyclotomic_alpha_values_stay_balanced():
    coalg = build_family(WindowedFamily.cycle(2, 1))
    params = path_form_params(coalg)
    alpha = {d: Cyc.root(3) ** k for k, d in enumerate(params.paths)}
    form = form_from_path_params(coalg, params, alpha)
    assert is_balanced(form).ok
    left, right = radicals(form)
    assert left == [] and right == []


def test_bruteforce_vectors_are_balanced_small_sweep():
    rng = random.Random(5)
    for _ in range(15):
        coalg = random_path_subcoalgebra(rng, max_basis=12)
        for form in balanced_space_bruteforce(coalg):
            assert is_balanced(form).ok
    for _ in range(15):
        coalg = random_incidence_subcoalgebra(rng, max_elements=6, max_basis=14)
        for form in balanced_space_bruteforce(coalg):
            assert is_balanced(form).ok
