import pytest
from hypothesis import given
from hypothesis import strategies as st

from lgvlab.guards import GuardExceeded
from lgvlab.objects import (
    Partition,
    PlanePartition,
    Tableau,
    count_tableaux,
    enumerate_plane_partitions,
    enumerate_tableaux,
)
from lgvlab.paths import (
    Endpoints,
    Path,
    SignedPathFamily,
    count_connection_paths,
    count_families,
    count_ni_families,
    east_step_labels,
    enumerate_connection_paths,
    enumerate_families,
    enumerate_identity_families,
    enumerate_ni_families,
    first_step_east_count,
    is_nonintersecting,
    last_step_east_count,
    plane_partition_endpoints,
    pp_decode,
    pp_encode,
    ssyt_decode,
    ssyt_encode,
    tableau_endpoints,
)


# --- paths ------------------------------------------------------------------

def test_path_basics():
    p = Path((-1, -1), "ESE")
    assert p.end == (1, -2)
    assert p.points() == ((-1, -1), (0, -1), (0, -2), (1, -2))
    assert len(p) == 3
    with pytest.raises(ValueError):
        Path((0, 0), "EN")


def test_path_json_roundtrip():
    p = Path((2, -3), "SSE")
    assert p.to_json() == {"start": [2, -3], "word": "SSE"}
    assert Path.from_json(p.to_json()) == p


@given(st.tuples(st.integers(-5, 5), st.integers(-5, 5)),
       st.text(alphabet="ES", max_size=8))
def test_path_end_matches_step_counts(start, word):
    p = Path(start, word)
    assert p.end == (start[0] + word.count("E"), start[1] - word.count("S"))
    assert len(p.points()) == len(word) + 1


# --- endpoint configurations --------------------------------------------------

def test_plane_partition_endpoints_frozen():
    ep = plane_partition_endpoints(Partition([1, 1]), 1)
    assert ep.a == ((-1, -1), (-2, -2))
    assert ep.b == ((0, -2), (-1, -3))
    ep2 = plane_partition_endpoints(Partition([2, 1]), 2)
    assert ep2.a == ((-1, -1), (-2, -2))
    assert ep2.b == ((1, -3), (-1, -4))


def test_tableau_endpoints_use_transposed_shape():
    # shape (2,1) transposes to (2,1); three variables
    ep = tableau_endpoints(Partition([2, 1]), 3)
    assert ep.a == ((-1, -1), (-2, -2))
    assert ep.b == ((1, -2), (-1, -4))
    # shape (3): one column path per transposed part
    ep3 = tableau_endpoints(Partition([3]), 2)
    assert ep3.n == 3


def test_connection_counts():
    assert count_connection_paths((-1, -1), (0, -2)) == 2
    assert count_connection_paths((0, 0), (2, -1)) == 3
    assert count_connection_paths((0, 0), (-1, 0)) == 0
    paths = list(enumerate_connection_paths((0, 0), (2, -1)))
    assert [p.word for p in paths] == ["EES", "ESE", "SEE"]
    assert list(enumerate_connection_paths((0, 0), (-1, -1))) == []


@given(st.integers(0, 4), st.integers(0, 4))
def test_connection_enumeration_matches_count(dx, dy):
    a, b = (0, 0), (dx, -dy)
    assert sum(1 for _ in enumerate_connection_paths(a, b)) == \
        count_connection_paths(a, b)


# --- families -----------------------------------------------------------------

def test_family_validation():
    ep = plane_partition_endpoints(Partition([1, 1]), 1)
    good = SignedPathFamily(ep, (0, 1), [Path((-1, -1), "ES"), Path((-2, -2), "SE")])
    assert good.sign == 1 and good.is_identity()
    with pytest.raises(ValueError, match="permutation"):
        SignedPathFamily(ep, (0, 0), good.paths)
    with pytest.raises(ValueError, match="starts"):
        SignedPathFamily(ep, (0, 1), [Path((0, 0), "ES"), good.paths[1]])
    with pytest.raises(ValueError, match="ends"):
        SignedPathFamily(ep, (1, 0), good.paths)


def test_family_json_roundtrip_one_indexed():
    ep = plane_partition_endpoints(Partition([1, 1]), 1)
    crossed = SignedPathFamily(
        ep, (1, 0), [Path((-1, -1), "SS"), Path((-2, -2), "EE")])
    data = crossed.to_json()
    assert data["sigma"] == [2, 1]
    assert SignedPathFamily.from_json(data, ep) == crossed
    assert crossed.sign == -1


def test_family_counts_frozen():
    cases = [
        ((1, 1), 1, 5, 3),
        ((2, 1), 2, 22, 14),
        ((2, 2), 2, 52, 20),
    ]
    for parts, bound, total, ni in cases:
        ep = plane_partition_endpoints(Partition(parts), bound)
        families = list(enumerate_families(ep))
        assert len(families) == count_families(ep) == total
        assert len(set(families)) == total
        ni_list = [f for f in families if is_nonintersecting(f)]
        assert len(ni_list) == count_ni_families(ep) == ni
        assert sum(f.sign for f in families) == ni


def test_nonintersecting_families_have_identity_permutation():
    # on both endpoint configurations vertex-disjointness forces sigma = id,
    # which is what lets the identity-permutation stream find all of them
    instances = [
        plane_partition_endpoints(Partition([2, 1]), 2),
        plane_partition_endpoints(Partition([1, 1, 1]), 1),
        tableau_endpoints(Partition([2, 1]), 3),
        tableau_endpoints(Partition([2, 2]), 3),
    ]
    for ep in instances:
        for family in enumerate_families(ep):
            if is_nonintersecting(family):
                assert family.is_identity()


def test_ni_stream_matches_filtered_full_stream():
    ep = plane_partition_endpoints(Partition([2, 1]), 2)
    direct = set(enumerate_ni_families(ep))
    filtered = {f for f in enumerate_families(ep) if is_nonintersecting(f)}
    assert direct == filtered
    identity = list(enumerate_identity_families(ep))
    assert all(f.is_identity() for f in identity)
    assert direct <= set(identity)


def test_enumerate_families_guard():
    ep = plane_partition_endpoints(Partition([2, 1]), 2)
    with pytest.raises(GuardExceeded):
        list(enumerate_families(ep, guard_limit=10))


# --- plane partition encoding ---------------------------------------------

def test_pp_encode_frozen_word():
    pp = PlanePartition(Partition([2]), 1, [[1, 0]])
    family = pp_encode(pp)
    assert [p.word for p in family.paths] == ["ESE"]
    assert family.is_identity()
    assert is_nonintersecting(family)


def test_pp_statistics_transfer_to_path_words():
    # a row contains 0 iff its path ends with an east step, and contains
    # the bound iff it starts with one
    for parts, bound in [((2, 1), 2), ((2, 2), 2), ((1, 1), 1)]:
        shape = Partition(parts)
        for pp in enumerate_plane_partitions(shape, bound):
            family = pp_encode(pp)
            assert last_step_east_count(family) == pp.zero_rows()
            assert first_step_east_count(family) == pp.max_rows()


def test_pp_roundtrip_exhaustive():
    for parts, bound in [((2, 1), 2), ((3, 1), 1), ((1, 1, 1), 2), ((), 3)]:
        shape = Partition(parts)
        for pp in enumerate_plane_partitions(shape, bound):
            family = pp_encode(pp)
            assert pp_decode(family, shape, bound) == pp


def test_pp_decode_is_inverse_on_ni_families():
    shape, bound = Partition([2, 1]), 2
    ep = plane_partition_endpoints(shape, bound)
    seen = set()
    for family in enumerate_ni_families(ep):
        pp = pp_decode(family, shape, bound)
        assert pp_encode(pp) == family
        seen.add(pp)
    assert len(seen) == 14


def test_pp_decode_rejects_intersecting():
    ep = plane_partition_endpoints(Partition([1, 1]), 1)
    crossed = SignedPathFamily(
        ep, (0, 1), [Path((-1, -1), "SE"), Path((-2, -2), "ES")])
    with pytest.raises(ValueError):
        pp_decode(crossed, Partition([1, 1]), 1)


# --- tableau encoding -------------------------------------------------------

def test_ssyt_encode_frozen_words():
    t = Tableau(Partition([2, 1]), 3, [[1, 1], [2]])
    family = ssyt_encode(t)
    assert [p.word for p in family.paths] == ["EES", "ESS"]
    assert east_step_labels(family, 3) == (2, 1, 0)
    assert ssyt_decode(family, t.shape, 3) == t


def test_ssyt_roundtrip_exhaustive():
    for parts, n in [((2, 1), 3), ((2, 2), 3), ((3,), 2), ((1, 1), 4)]:
        shape = Partition(parts)
        for t in enumerate_tableaux(shape, n):
            family = ssyt_encode(t)
            assert east_step_labels(family, n) == t.weight()
            assert ssyt_decode(family, shape, n) == t


def test_ssyt_decode_is_inverse_on_ni_families():
    shape, n = Partition([2, 1]), 3
    ep = tableau_endpoints(shape, n)
    count = 0
    for family in enumerate_ni_families(ep):
        t = ssyt_decode(family, shape, n)
        assert ssyt_encode(t) == family
        count += 1
    assert count == count_tableaux(shape, n) == 8


def test_ni_count_on_tableau_endpoints_is_tableau_count():
    for parts, n in [((2, 1), 3), ((3,), 3), ((2, 2), 4), ((1, 1, 1), 2)]:
        shape = Partition(parts)
        ep = tableau_endpoints(shape, n)
        assert count_ni_families(ep) == count_tableaux(shape, n)
