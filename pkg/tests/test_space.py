import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import topolab as T
from topolab.errors import BadParams, NotATopology

from _oracles import naive_closure, naive_interior, naive_labeled_families

SIERP = T.sierpinski()


def opens_of(fm, n):
    return [a for a in range(1 << n) if fm >> a & 1]


# ---------------------------------------------------------------- validation

def test_sierpinski_accepted():
    s = T.new_space(2, [0b00, 0b01, 0b11])
    assert s == SIERP
    assert s.opens == (0, 1, 3)


def test_discrete_3_accepted():
    s = T.new_space(3, range(8))
    assert s == T.discrete(3)
    assert len(s.opens) == 8


def test_missing_union_rejected():
    # {0} and {1} open but their union (= the full set) is not
    with pytest.raises(NotATopology, match="full set"):
        T.new_space(2, [0b00, 0b01, 0b10])


def test_missing_union_names_the_pair():
    with pytest.raises(NotATopology) as e:
        T.new_space(3, [0b000, 0b001, 0b010, 0b111])
    msg = str(e.value)
    assert "{0}" in msg and "{1}" in msg and "{0,1}" in msg


def test_missing_empty_and_full_rejected():
    with pytest.raises(NotATopology, match="empty set"):
        T.new_space(2, [0b01, 0b11])
    with pytest.raises(NotATopology, match="full set|whole"):
        T.new_space(2, [0b00, 0b01])


def test_missing_intersection_rejected():
    # {0,1} and {1,2} present, {1} absent
    with pytest.raises(NotATopology) as e:
        T.new_space(3, [0b000, 0b011, 0b110, 0b111])
    assert "{1}" in str(e.value)


def test_validator_matches_naive_oracle_exhaustively():
    # every candidate family on <= 3 points validates iff the brute-force
    # oracle accepts it
    for n in range(4):
        good = set(naive_labeled_families(n))
        size = 1 << n
        full = size - 1
        base = (1 << 0) | (1 << full)
        middles = [a for a in range(size) if a not in (0, full)]
        for pick in range(1 << len(middles)):
            fm = base
            for i, a in enumerate(middles):
                if pick >> i & 1:
                    fm |= 1 << a
            members = opens_of(fm, n)
            if fm in good:
                assert T.new_space(n, members).n == n
            else:
                with pytest.raises(NotATopology):
                    T.new_space(n, members)


def test_large_space_validation_uses_reconstruction_path():
    # a 12-point khalimsky interval round-trips through the validator
    k = T.khalimsky_interval(12)
    assert T.new_space(12, k.opens) == k
    # breaking one open set is caught on the same path
    broken = [u for u in k.opens if u != k.opens[1]]
    with pytest.raises(NotATopology):
        T.new_space(12, broken)


def test_bad_params():
    for n in (-1, 17, "2", 2.0, True):
        with pytest.raises(BadParams):
            T.new_space(n, [0])
    with pytest.raises(BadParams):
        T.new_space(2, [0, 4, 3])       # bit outside ground set
    with pytest.raises(BadParams):
        T.new_space(2, [0, -1, 3])
    with pytest.raises(BadParams):
        T.new_space(2, [0, True, 3])    # bools are not subsets
    with pytest.raises(BadParams):
        T.new_space(2, [0, "1", 3])


def test_duplicates_collapse():
    s = T.new_space(2, [0, 1, 3, 1, 0])
    assert s.opens == (0, 1, 3)


def test_opens_stored_sorted_by_size_then_value():
    s = T.new_space(3, [7, 0, 3, 1, 5])
    assert s.opens == (0, 1, 3, 5, 7)


# ---------------------------------------------------------- interior/closure

def test_interior_examples():
    assert SIERP.interior(0b10) == 0          # only the empty open fits
    assert SIERP.interior(0b11) == 0b11       # X is open
    assert T.indiscrete(2).interior(0b01) == 0


def test_closure_examples():
    assert SIERP.closure(0b01) == 0b11        # closed sets: {}, {1}, X
    assert SIERP.closure(0b00) == 0b00
    assert T.discrete(3).closure(0b110) == 0b110


def test_interior_closure_match_naive_oracle():
    for n in range(4):
        for fm in naive_labeled_families(n):
            opens = opens_of(fm, n)
            s = T.new_space(n, opens)
            for a in range(1 << n):
                assert s.interior(a) == naive_interior(n, opens, a)
                assert s.closure(a) == naive_closure(n, opens, a)


def test_membership_flags():
    assert SIERP.is_open(0b01) and not SIERP.is_closed(0b01)
    assert not SIERP.is_clopen(0b01)
    assert SIERP.is_clopen(0b11) and SIERP.is_clopen(0)
    ind = T.indiscrete(2)
    assert not ind.is_open(0b01) and not ind.is_closed(0b01)


def test_check_subset_rejects_stray_bits():
    with pytest.raises(BadParams):
        SIERP.interior(0b100)
    with pytest.raises(BadParams):
        SIERP.closure(-1)


def test_discrete_and_indiscrete_operator_shapes():
    d = T.discrete(3)
    for a in d.subsets():
        assert d.interior(a) == a == d.closure(a)
    ind = T.indiscrete(3)
    full = ind.full
    for a in ind.subsets():
        assert ind.interior(a) == (full if a == full else 0)
        assert ind.closure(a) == (0 if a == 0 else full)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 3), st.data())
def test_kuratowski_laws_random(n, data):
    fams = naive_labeled_families(n)
    fm = data.draw(st.sampled_from(fams))
    s = T.new_space(n, opens_of(fm, n))
    a = data.draw(st.integers(0, s.full))
    ia, ca = s.interior(a), s.closure(a)
    assert ia & a == ia and a & ca == a
    assert s.interior(ia) == ia and s.closure(ca) == ca
    assert ia == s.full ^ s.closure(s.full ^ a)
    assert s.is_open(ia) and s.is_closed(ca)


# ------------------------------------------------------------------ generators

def test_generator_structures():
    assert T.sierpinski().opens == (0, 1, 3)
    assert T.khalimsky_interval(3).opens == (0, 0b010, 0b011, 0b110, 0b111)
    assert T.discrete(0).opens == (0,)
    assert T.indiscrete(1).opens == (0, 1)
    assert T.particular_point(3, 0).opens == (0, 1, 3, 5, 7)
    ex = T.excluded_point(3, 2)
    assert ex.opens == (0, 1, 2, 3, 7)


def test_khalimsky_minimal_neighbourhoods():
    k = T.khalimsky_interval(5)
    assert k.min_nbhd == (0b00011, 0b00010, 0b01110, 0b01000, 0b11000)


def test_generate_dispatch():
    assert T.generate("sierpinski") == SIERP
    assert T.generate("discrete", 3) == T.discrete(3)
    assert T.generate("khalimsky_interval", 4) == T.khalimsky_interval(4)
    with pytest.raises(BadParams):
        T.generate("nosuch")
    with pytest.raises(BadParams):
        T.generate("discrete")            # missing arity
    with pytest.raises(BadParams):
        T.generate("sierpinski", 2)
    with pytest.raises(BadParams):
        T.generate("particular_point", 3, 5)


def test_generators_validate():
    gens = [T.discrete(4), T.indiscrete(4), T.sierpinski(),
            T.particular_point(4, 2), T.excluded_point(4, 1),
            T.khalimsky_interval(7)]
    for s in gens:
        assert T.new_space(s.n, s.opens) == s


# ------------------------------------------------------------------ formats

def test_record_round_trip():
    for s in (SIERP, T.discrete(0), T.khalimsky_interval(4)):
        assert T.space_from_record(s.to_record()) == s
        assert T.space_from_json(s.to_json()) == s


def test_json_shape_exact():
    assert SIERP.to_json() == '{"n":2,"opens":[[],[0],[0,1]]}'
    assert T.discrete(0).to_json() == '{"n":0,"opens":[[]]}'


def test_record_strict_keys():
    with pytest.raises(BadParams):
        T.space_from_record({"n": 2, "opens": [[], [0], [0, 1]], "x": 1})
    with pytest.raises(BadParams):
        T.space_from_record({"n": 2})
    with pytest.raises(BadParams):
        T.space_from_record([2, []])


def test_bad_json_is_input_error():
    with pytest.raises(BadParams):
        T.space_from_json("{not json")
    with pytest.raises(BadParams):
        T.space_from_json('{"n":2,"opens":[[],[0],[0,2]]}')  # point out of range
    with pytest.raises(NotATopology):
        T.space_from_json('{"n":2,"opens":[[],[0]]}')


def test_subset_helpers():
    assert T.subset_of_points([0, 2], 3) == 0b101
    assert T.subset_of_points([], 3) == 0
    assert T.points_of(0b101) == [0, 2]
    assert T.format_subset(0b101) == "{0,2}"
    assert T.format_subset(0) == "{}"
    with pytest.raises(BadParams):
        T.subset_of_points([3], 3)
    with pytest.raises(BadParams):
        T.subset_of_points([True], 3)


def test_repr_is_readable():
    assert repr(SIERP) == "FiniteSpace(n=2, opens=[{},{0},{0,1}])"


def test_spaces_hash_and_compare():
    assert T.new_space(2, [0, 1, 3]) == SIERP
    assert hash(T.new_space(2, [0, 1, 3])) == hash(SIERP)
    assert T.new_space(2, [0, 2, 3]) != SIERP
    assert len({T.discrete(2), T.discrete(2), T.indiscrete(2)}) == 2
