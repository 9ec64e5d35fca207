import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.errors import (
    CayleyTableError,
    GroupSpecError,
    GroupTooLargeError,
    InputError,
    NonOrthogonalError,
    TupleSpaceTooLargeError,
)
from core.exactlin import RationalMatrix
from symmetry.builtin_groups import (
    builtin_group,
    list_builtin_families,
    load_cayley_table,
    load_explicit_generators,
    parse_group_spec,
    validate_cayley_table,
)
from symmetry.matrix_group import ElementTuple, GroupElement, close_group
from symmetry.tuples import TupleMode, enumerate_tuples, fixed_subspace, tuple_space_size


def G(rows):
    return GroupElement.from_rows(rows)


R90 = [[0, -1], [1, 0]]


# --------------------------------------------------------------------------- #
# Elements and closure
# --------------------------------------------------------------------------- #

def test_non_orthogonal_element_is_rejected():
    with pytest.raises(NonOrthogonalError):
        G([[1, 1], [0, 1]])


def test_close_cyclic_shift():
    shift = G([[0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]])
    group = close_group([shift])
    assert len(group) == 4
    assert group.identity_index == 0


def test_close_identity():
    assert len(close_group([G([[1, 0], [0, 1]])])) == 1


def test_close_octahedral_generators():
    swap = G([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    cycle = G([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    flip = G([[-1, 0, 0], [0, 1, 0], [0, 0, 1]])
    group = close_group([swap, cycle, flip])
    assert len(group) == 2**3 * math.factorial(3)
    assert group.check_closure()


def test_close_group_respects_cap():
    with pytest.raises(GroupTooLargeError, match="cap of 3"):
        close_group([G(R90)], cap=3)


def test_close_group_rejects_mixed_dimensions():
    with pytest.raises(InputError):
        close_group([G(R90), G([[1, 0, 0], [0, 1, 0], [0, 0, 1]])])


# --------------------------------------------------------------------------- #
# Builtin families
# --------------------------------------------------------------------------- #

@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_family_orders(m):
    assert len(builtin_group("cyclic", m)) == m
    assert len(builtin_group("symmetric", m)) == math.factorial(m)
    assert len(builtin_group("hyperoctahedral", m)) == 2**m * math.factorial(m)


def test_cyclic_three_shift_matrices():
    group = builtin_group("cyclic", 3)
    assert group[0].is_identity()
    assert group[1].matrix == RationalMatrix.from_rows([[0, 0, 1], [1, 0, 0], [0, 1, 0]])


@pytest.mark.parametrize("spec", [
    "c4:rotation2d", "cyclic:5:regular", "symmetric:3:natural", "hyperoctahedral:2",
])
def test_builtin_groups_are_closed_and_orthogonal(spec):
    group = parse_group_spec(spec)
    assert group[0].is_identity()
    assert all(g.matrix.is_orthogonal() for g in group)
    assert group.check_closure()


@given(st.integers(0, 47), st.integers(0, 47))
@settings(max_examples=40, deadline=None)
def test_products_and_inverses_stay_in_group(i, j):
    group = parse_group_spec("hyperoctahedral:3")
    a, b = group[i], group[j]
    assert (a @ b) in group
    assert GroupElement(a.matrix.transpose()) in group


def test_c4_elements_in_order():
    group = parse_group_spec("c4:rotation2d")
    assert group[1].matrix == RationalMatrix.from_rows(R90)
    assert group.element_index(G([[-1, 0], [0, -1]])) == 2


def test_builtin_cap():
    with pytest.raises(GroupTooLargeError):
        parse_group_spec("hyperoctahedral:4", closure_cap=100)


@pytest.mark.parametrize("spec", [
    "cyclic:0:regular", "cyclic:x:regular", "cyclic:3", "dihedral:4", "c4", "cayley:",
    "symmetric:3:regular",
])
def test_bad_specs(spec):
    with pytest.raises(GroupSpecError):
        parse_group_spec(spec)


def test_list_builtin_families():
    syntaxes = [row[0] for row in list_builtin_families()]
    assert "cyclic:<m>:regular" in syntaxes
    assert "explicit:<path>" in syntaxes


# --------------------------------------------------------------------------- #
# Files
# --------------------------------------------------------------------------- #

def test_cayley_regular_representation(data_dir):
    group = parse_group_spec(f"cayley:{data_dir / 'c3.cayley'}")
    assert len(group) == 3
    assert group.ambient_dim == 3
    assert group.check_closure()


def test_cayley_non_associative(data_dir):
    with pytest.raises(CayleyTableError) as info:
        load_cayley_table(data_dir / "loop5.cayley")
    assert info.value.triple is not None
    assert all(1 <= k <= 5 for k in info.value.triple)


def test_cayley_validation_errors():
    with pytest.raises(CayleyTableError, match="identity"):
        validate_cayley_table([[1, 0], [1, 0]])
    with pytest.raises(CayleyTableError, match="out of range"):
        validate_cayley_table([[0, 2], [1, 0]])
    with pytest.raises(CayleyTableError, match="cap"):
        validate_cayley_table([[0] * 3] * 3, cap=2)


def test_explicit_generators(data_dir):
    assert len(parse_group_spec(f"explicit:{data_dir / 'r90.gens'}")) == 4
    assert len(parse_group_spec(f"explicit:{data_dir / 'reflections3.gens'}")) == 8


def test_explicit_family_reports_its_closure(data_dir):
    family = load_explicit_generators(data_dir / "r90.gens")
    group = family.build()
    assert family.order() == len(group) == 4
    matrices = list(family.matrices())
    assert matrices[0].is_identity()
    assert [g.matrix for g in group] == matrices


def test_explicit_non_orthogonal(data_dir):
    with pytest.raises(NonOrthogonalError):
        load_explicit_generators(data_dir / "shear.gens")


def test_missing_file(data_dir):
    with pytest.raises(InputError):
        parse_group_spec(f"cayley:{data_dir / 'nope.cayley'}")


# --------------------------------------------------------------------------- #
# Tuples
# --------------------------------------------------------------------------- #

def test_exhaustive_count_and_order(c4):
    tuples = list(enumerate_tuples(c4, 3))
    assert len(tuples) == 64 == tuple_space_size(c4, 3)
    assert tuples[0].indices == (0, 0, 0)
    assert tuples[1].indices == (0, 0, 1)
    assert tuples[-1].indices == (3, 3, 3)


def test_trivial_group_single_tuple():
    group = parse_group_spec("cyclic:1:regular")
    tuples = list(enumerate_tuples(group, 5))
    assert [t.indices for t in tuples] == [(0,) * 5]


def test_sampled_is_deterministic(hyper3):
    mode = TupleMode.sampled(seed=7, count=10)
    first = [t.indices for t in enumerate_tuples(hyper3, 4, mode)]
    second = [t.indices for t in enumerate_tuples(hyper3, 4, mode)]
    assert first == second
    assert len(first) == 10


def test_window_partitions_the_stream(c4):
    whole = [t.indices for t in enumerate_tuples(c4, 3)]
    parts = [t.indices for t in enumerate_tuples(c4, 3, start=0, stop=20)]
    parts += [t.indices for t in enumerate_tuples(c4, 3, start=20)]
    assert parts == whole


def test_tuple_space_cap_is_eager(hyper3):
    with pytest.raises(TupleSpaceTooLargeError, match="--sample"):
        enumerate_tuples(hyper3, 4, cap=1000)


def test_bad_arity(c4):
    with pytest.raises(InputError):
        enumerate_tuples(c4, 0)


def test_element_tuple_from_elements(c4):
    t = ElementTuple.from_elements(c4, [G(R90), G([[1, 0], [0, 1]])])
    assert t.indices == (1, 0)
    with pytest.raises(InputError):
        ElementTuple.from_elements(c4, [G([[1, 0], [0, -1]])])


# --------------------------------------------------------------------------- #
# Fixed subspaces
# --------------------------------------------------------------------------- #

def test_fixed_subspace_of_rotations(rotation_tuple):
    assert fixed_subspace(rotation_tuple).dim == 0


def test_fixed_subspace_of_identity():
    group = parse_group_spec("symmetric:3:natural")
    assert fixed_subspace(ElementTuple(group, (0, 0, 0))).dim == 3


@given(st.lists(st.integers(0, 5), min_size=1, max_size=4))
@settings(max_examples=30, deadline=None)
def test_permutations_fix_all_ones(indices):
    group = parse_group_spec("symmetric:3:natural")
    fix = fixed_subspace(ElementTuple(group, tuple(indices)))
    assert fix.dim >= 1
    assert (1, 1, 1) in fix


@given(st.lists(st.integers(0, 47), min_size=1, max_size=3), st.integers(0, 47))
@settings(max_examples=30, deadline=None)
def test_fixed_subspace_shrinks(indices, extra):
    group = parse_group_spec("hyperoctahedral:3")
    base = fixed_subspace(ElementTuple(group, tuple(indices)))
    grown = fixed_subspace(ElementTuple(group, tuple(indices) + (extra,)))
    assert grown.dim <= base.dim
    for v in grown.basis:
        assert v in base
    for k in tuple(indices) + (extra,):
        for v in grown.basis:
            assert group[k].apply(v) == v
