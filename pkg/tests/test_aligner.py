import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prosched.aligner import align, align_word, project_span
from prosched.errors import RangeOutOfBounds

from oracles import exhaustive_min_cost


def pairs_as_tuples(alignment):
    return [(p.graphemes, tuple(p.phonemes)) for p in alignment.pairs]


class TestGoldens:
    def test_where(self, en_mappings):
        result = align("where", ("W", "EH", "R"), en_mappings)
        assert result.cost == 0
        assert pairs_as_tuples(result) == [
            ("wh", ("W",)), ("e", ("EH",)), ("r", ("R",)), ("e", ())]
        assert str(result) == "wh→W, e→EH, r→R, e→∅"

    def test_whence_invalid_pron(self, en_mappings):
        result = align("whence", ("W", "Z", "EH", "T"), en_mappings)
        assert result.cost == 3
        pairs = pairs_as_tuples(result)
        assert ("", ("Z",)) in pairs
        assert ("n", ("T",)) in pairs
        assert ("c", ()) in pairs
        allowed = {(p.graphemes, p.phonemes) for p in result.pairs if p.allowed}
        assert ("wh", ("W",)) in allowed
        assert ("e", ("EH",)) in allowed

    def test_single_pair_identity(self):
        result = align("a", ("AH",), {("a", ("AH",))})
        assert result.cost == 0
        assert pairs_as_tuples(result) == [("a", ("AH",))]


class TestDegenerate:
    def test_empty_graphemes_all_insertions(self):
        result = align("", ("W", "EH"), {("a", ("AH",))})
        assert result.cost == 2
        assert pairs_as_tuples(result) == [("", ("W",)), ("", ("EH",))]

    def test_empty_phonemes_all_deletions(self):
        result = align("ab", (), {("a", ("AH",))})
        assert result.cost == 2
        assert pairs_as_tuples(result) == [("a", ()), ("b", ())]

    def test_allowed_silent_deletion_is_free(self):
        result = align("e", (), {("e", ())})
        assert result.cost == 0

    def test_both_empty(self):
        result = align("", (), {("a", ("AH",))})
        assert result.cost == 0
        assert result.pairs == ()

    def test_degenerate_mapping_ignored(self):
        result = align("ab", ("AH",), {("", ()), ("a", ("AH",))})
        assert result.cost == 1
        assert pairs_as_tuples(result) == [("a", ("AH",)), ("b", ())]


POOL = [
    ("a", ("AH",)), ("a", ("AE",)), ("b", ("B",)), ("c", ("K",)),
    ("c", ("S",)), ("ab", ("AE", "B")), ("bc", ("B",)), ("e", ()),
    ("e", ("EH",)), ("", ("Z",)), ("abc", ("AH", "B", "S")),
]


class TestOptimality:
    def test_thousand_random_instances_match_oracle(self):
        rng = random.Random(20240816)
        for _ in range(1000):
            g = "".join(rng.choice("abce") for _ in range(rng.randint(0, 6)))
            p = tuple(rng.choice(["AH", "AE", "B", "EH", "K", "S", "Z"])
                      for _ in range(rng.randint(0, 5)))
            mappings = set(rng.sample(POOL, rng.randint(0, len(POOL))))
            got = align(g, p, mappings)
            assert got.cost == exhaustive_min_cost(g, p, mappings), (g, p, mappings)

    @settings(max_examples=200, deadline=None)
    @given(
        g=st.text(alphabet="abce", max_size=6),
        p=st.lists(st.sampled_from(["AH", "AE", "B", "EH", "K", "S", "Z"]),
                   max_size=5),
        maps=st.sets(st.sampled_from(POOL)),
    )
    def test_cost_matches_oracle_property(self, g, p, maps):
        got = align(g, tuple(p), maps)
        assert got.cost == exhaustive_min_cost(g, tuple(p), maps)

    @settings(max_examples=200, deadline=None)
    @given(
        g=st.text(alphabet="abce", max_size=6),
        p=st.lists(st.sampled_from(["AH", "AE", "B", "EH", "K", "S", "Z"]),
                   max_size=5),
        maps=st.sets(st.sampled_from(POOL)),
    )
    def test_partition_totality_and_soundness(self, g, p, maps):
        got = align(g, tuple(p), maps)
        assert "".join(pair.graphemes for pair in got.pairs) == g
        flat = tuple(s for pair in got.pairs for s in pair.phonemes)
        assert flat == tuple(p)
        if got.cost == 0:
            assert all((pair.graphemes, pair.phonemes) in maps
                       for pair in got.pairs)
        for pair in got.pairs:
            if pair.allowed:
                assert (pair.graphemes, pair.phonemes) in maps

    def test_deterministic(self, en_mappings):
        first = align("where", ("W", "EH", "R"), en_mappings)
        for _ in range(5):
            assert align("where", ("W", "EH", "R"), en_mappings) == first


class TestMultiPronunciation:
    def test_keeps_least_cost(self, en_mappings):
        best = align_word("a", [("ZH",), ("AH",)], en_mappings)
        assert best.cost == 0
        assert pairs_as_tuples(best) == [("a", ("AH",))]


class TestProjectSpan:
    def test_where_e_projects_to_eh(self, en_mappings):
        result = align("where", ("W", "EH", "R"), en_mappings)
        assert project_span(result, (2, 3)) == {1}

    def test_silent_trailing_e_projects_nowhere(self, en_mappings):
        result = align("where", ("W", "EH", "R"), en_mappings)
        assert project_span(result, (4, 5)) == set()

    def test_long_o_projects_to_ao(self, en_mappings):
        result = align("long", ("L", "AO", "NG"), en_mappings)
        assert project_span(result, (1, 2)) == {1}

    def test_range_out_of_bounds(self, en_mappings):
        result = align("long", ("L", "AO", "NG"), en_mappings)
        with pytest.raises(RangeOutOfBounds):
            project_span(result, (2, 9))
        with pytest.raises(RangeOutOfBounds):
            project_span(result, (-1, 2))
