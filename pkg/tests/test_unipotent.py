from collections import defaultdict

import pytest

from weylunip.partitions import family_members, partitions, scale, add_psi, dominance_leq
from weylunip.unipotent import (
    OMEGA,
    all_epsilon_functions,
    bad_label,
    bad_leq,
    enumerate_unipotent,
    epsilon_family,
    epsilon_function,
    epsilon_max,
    format_unipotent,
    free_indices,
    good_label,
    good_leq,
    label_to_json,
    theta2,
    theta2_column_recipe,
    theta2_columns,
    unipotent_leq,
)


def test_epsilon_forced_and_free_values():
    fam = epsilon_family("Sp", 4)
    e = epsilon_max((4, 4), fam)
    assert free_indices(fam, (4, 4)) == (4,)
    assert e.value(4) == 1
    assert e.value(3) == OMEGA  # odd row
    assert e.value(2) == OMEGA  # multiplicity zero
    assert e.value(1) == OMEGA
    # even row with odd multiplicity is pinned to 1
    e = epsilon_max((4, 2), epsilon_family("Sp", 3))
    assert free_indices(epsilon_family("Sp", 3), (4, 2)) == ()
    assert e.value(4) == 1
    assert e.value(2) == 1
    # epsilon(0) is 1 on the symplectic side, 0 on the orthogonal side
    assert epsilon_max((2, 2), epsilon_family("Sp", 2)).value(0) == 1
    assert epsilon_max((2, 2), epsilon_family("O_even", 2)).value(0) == 0


def test_epsilon_plus_one_family():
    # for the parity-flipped family, free indices are odd rows of even
    # positive multiplicity
    fam = epsilon_family("GLd", 6)
    assert fam.kind == "plus_one"
    assert free_indices(fam, (3, 3)) == (3,)
    assert free_indices(fam, (5, 1)) == ()
    e = epsilon_max((5, 1), fam)
    assert e.value(5) == 1 and e.value(1) == 1
    assert e.value(2) == OMEGA


def test_epsilon_function_validation():
    fam = epsilon_family("Sp", 4)
    e = epsilon_function(fam, (4, 4), {4: 0})
    assert e.value(4) == 0
    with pytest.raises(ValueError):
        epsilon_function(fam, (4, 4), {})  # missing free index
    with pytest.raises(ValueError):
        epsilon_function(fam, (4, 4), {4: 0, 2: 1})  # 2 is not free
    with pytest.raises(ValueError):
        epsilon_function(fam, (4, 4), {4: 2})  # out of range


def test_all_epsilon_functions_counts():
    fam = epsilon_family("Sp", 6)
    alphas = {(4, 4, 2, 2): 4, (6, 4, 2): 1, (2, 2, 2, 2, 2, 2): 2}
    for a, count in alphas.items():
        funcs = all_epsilon_functions(a, fam)
        assert len(funcs) == count
        assert funcs[0] == epsilon_max(a, fam)
        assert len(set(funcs)) == count


def test_label_factories_validate():
    assert good_label("Sp", 2, (2, 2)).partition == (2, 2)
    with pytest.raises(ValueError):
        good_label("Sp", 2, (3, 1))  # odd rows must have even multiplicity
    with pytest.raises(ValueError):
        good_label("O_even", 2, (2, 1, 1))  # even rows must have even multiplicity
    with pytest.raises(ValueError):
        good_label("Sp", 3, (2, 2))  # wrong total
    with pytest.raises(ValueError):
        bad_label("Sp", 2, (3, 1))
    with pytest.raises(ValueError):
        bad_label("GLd", 4, (2, 1, 1))  # even rows must have even multiplicity
    assert bad_label("GLd", 4, (2, 2)).partition == (2, 2)
    # odd orthogonal labels carry an odd number of ones
    assert bad_label("O_odd", 2, (4, 1)).partition == (4, 1)
    assert bad_label("O_odd", 2, (2, 2, 1)).partition == (2, 2, 1)
    with pytest.raises(ValueError):
        bad_label("O_odd", 2, (4, 1, 1, 1))  # wrong total
    with pytest.raises(ValueError):
        bad_label("O_odd", 3, (5, 2))  # even number of 1s
    with pytest.raises(ValueError):
        bad_label("O_odd", 4, (5, 3, 1))  # rows 5 and 3 have odd multiplicity
    with pytest.raises(ValueError):
        bad_label("GLd", 4, (4,), epsilon={2: 1})  # stray epsilon index


def test_good_leq_is_dominance():
    for a in partitions(6):
        for b in partitions(6):
            la, lb = good_label("GL", 6, a), good_label("GL", 6, b)
            assert good_leq(la, lb) == dominance_leq(a, b)
    with pytest.raises(ValueError):
        good_leq(good_label("GL", 4, (4,)), good_label("Sp", 2, (4,)))


def test_bad_leq_epsilon_strictness():
    lo = bad_label("Sp", 2, (2, 2), epsilon={2: 0})
    hi = bad_label("Sp", 2, (2, 2), epsilon={2: 1})
    assert bad_leq(lo, hi)
    assert not bad_leq(hi, lo)
    top = bad_label("Sp", 2, (4,))
    assert bad_leq(lo, top) and bad_leq(hi, top)
    assert not bad_leq(top, hi)


def test_bad_leq_parity_condition():
    # equal partition sums with odd column difference force the upper
    # epsilon away from zero
    a = bad_label("Sp", 4, (4, 2, 2), epsilon={2: 1})
    b = bad_label("Sp", 4, (4, 4), epsilon={4: 0})
    assert dominance_leq(a.partition, b.partition)
    assert not bad_leq(a, b)
    b1 = bad_label("Sp", 4, (4, 4), epsilon={4: 1})
    assert bad_leq(a, b1)


def test_bad_leq_component_mismatch_raises():
    inside = bad_label("O_even", 4, (4, 4))  # even length
    outside = bad_label("O_even", 4, (8,))  # odd length
    assert inside.so_component == "SO"
    assert outside.so_component == "O\\SO"
    with pytest.raises(ValueError):
        bad_leq(inside, outside)


def test_bad_leq_is_partial_order_with_unique_max():
    for group, n in [("Sp", 4), ("O_odd", 3), ("GLd", 7), ("O_even", 4)]:
        labs = [u for u in enumerate_unipotent(group, n, "2") if u.split is None]
        if group == "O_even":
            labs = [u for u in labs if u.so_component == "SO"]
        order = {
            (a, b): bad_leq(a, b) for a in labs for b in labs
        }
        for a in labs:
            assert order[(a, a)]
            for b in labs:
                if order[(a, b)] and order[(b, a)]:
                    assert a == b
                for c in labs:
                    if order[(a, b)] and order[(b, c)]:
                        assert order[(a, c)]
        by_partition = defaultdict(list)
        for u in labs:
            by_partition[u.partition].append(u)
        fam = epsilon_family(group, n)
        for alpha, group_labs in by_partition.items():
            maxima = [
                u for u in group_labs if all(bad_leq(v, u) for v in group_labs)
            ]
            assert len(maxima) == 1
            assert maxima[0].epsilon == epsilon_max(alpha, fam)


def test_split_markers_compare_as_base():
    one, two = (
        u
        for u in enumerate_unipotent("O_even", 4, "2")
        if u.partition == (4, 4) and u.split is not None
    )
    assert one.split == "I" and two.split == "II"
    assert bad_leq(one, two) and bad_leq(two, one)
    assert one != two


def test_unipotent_leq_dispatch():
    assert unipotent_leq(good_label("Sp", 2, (2, 2)), good_label("Sp", 2, (4,)))
    assert unipotent_leq(
        bad_label("Sp", 2, (2, 2), epsilon={2: 0}), bad_label("Sp", 2, (4,))
    )
    with pytest.raises(ValueError):
        unipotent_leq(good_label("Sp", 2, (4,)), bad_label("Sp", 2, (4,)))


def test_theta2_worked_example():
    lab = bad_label("O_even", 9, (6, 6, 4, 2))
    out = theta2(lab)
    assert out.partition == (7, 5, 5, 1)
    assert out.group == "O_even" and out.kind == "good"
    assert theta2_columns((6, 6, 4, 2)) == (4, 3, 3, 3, 3, 1, 1)
    assert theta2_column_recipe((6, 6, 4, 2)) == (7, 5, 5, 1)


def test_theta2_cases():
    # symplectic: partition kept
    assert theta2(bad_label("Sp", 3, (4, 2))).partition == (4, 2)
    # odd orthogonal: strip the one, transfer, restore by parity
    assert theta2(bad_label("O_odd", 2, (4, 1))).partition == (5,)
    assert theta2(bad_label("O_odd", 2, (2, 2, 1))).partition == (3, 1, 1)
    assert theta2(bad_label("O_odd", 3, (4, 2, 1))).partition == (5, 1, 1)
    assert theta2(bad_label("O_odd", 4, (4, 4, 1))).partition == (5, 3, 1)


def test_theta2_rejects():
    with pytest.raises(ValueError):
        theta2(good_label("Sp", 2, (4,)))
    with pytest.raises(ValueError):
        theta2(bad_label("GLd", 3, (3,)))
    lab = bad_label("Sp", 2, (2, 2), epsilon={2: 0})
    with pytest.raises(ValueError):
        theta2(lab)  # epsilon below maximum
    with pytest.raises(ValueError):
        theta2(bad_label("O_odd", 4, (3, 3, 2, 1)))  # odd parts beside the 1


def test_recipe_matches_add_psi():
    for m in range(1, 9):
        for a in partitions(m):
            ev = scale(a, 2)
            assert theta2_column_recipe(ev) == add_psi(ev)


def test_enumerate_counts():
    assert len(enumerate_unipotent("Sp", 2, "good")) == 4
    assert len(enumerate_unipotent("Sp", 2, "2")) == 5
    good8 = enumerate_unipotent("O_even", 4, "good")
    assert len(good8) == 12
    bad8 = [u for u in enumerate_unipotent("O_even", 4, "2") if u.so_component == "SO"]
    assert len(bad8) == 12
    # odd orthogonal labels in characteristic 2 biject with symplectic
    # ones by dropping the trailing 1
    for n in range(1, 6):
        sp = enumerate_unipotent("Sp", n, "2")
        oo = enumerate_unipotent("O_odd", n, "2")
        assert len(sp) == len(oo)
        assert {u.partition for u in oo} == {
            tuple(sorted(u.partition + (1,), reverse=True)) for u in sp
        }
    with pytest.raises(ValueError):
        enumerate_unipotent("GLd", 4, "good")  # no unipotents there


def test_enumerate_good_splits():
    parts = [
        (format_unipotent(u)) for u in enumerate_unipotent("O_even", 4, "good")
    ]
    assert "[4,4]_I" in parts and "[4,4]_II" in parts
    assert "[2,2,2,2]_I" in parts and "[2,2,2,2]_II" in parts
    assert "[4,4]" not in parts


def test_enumerate_members_valid():
    for group, n, char in [
        ("Sp", 4, "good"),
        ("Sp", 4, "2"),
        ("O_odd", 3, "good"),
        ("O_odd", 3, "2"),
        ("O_even", 3, "good"),
        ("O_even", 3, "2"),
        ("GLd", 5, "2"),
        ("GL", 4, "good"),
    ]:
        labs = enumerate_unipotent(group, n, char)
        assert len(set(labs)) == len(labs)
        for u in labs:
            assert u.group == group


def test_format_unipotent():
    assert format_unipotent(good_label("Sp", 2, (4,))) == "[4]"
    assert format_unipotent(bad_label("Sp", 2, (4,))) == "([4],*)"
    assert format_unipotent(bad_label("Sp", 2, (2, 2))) == "([2,2],ε(2)=1)"
    assert (
        format_unipotent(bad_label("Sp", 6, (4, 4, 2, 2)))
        == "([4,4,2,2],ε(4)=ε(2)=1)"
    )
    mixed = bad_label("Sp", 6, (4, 4, 2, 2), epsilon={4: 1, 2: 0})
    assert format_unipotent(mixed) == "([4,4,2,2],ε(4)=1,ε(2)=0)"


def test_label_to_json():
    payload = label_to_json(bad_label("O_even", 4, (4, 4)))
    assert payload == {
        "partition": [4, 4],
        "group": "O",
        "epsilon": {"4": 1},
        "family": "minus_one",
        "component": "SO",
    }
    payload = label_to_json(good_label("Sp", 2, (4,)))
    assert payload["partition"] == [4]
    assert payload["group"] == "Sp"
    assert "epsilon" not in payload
