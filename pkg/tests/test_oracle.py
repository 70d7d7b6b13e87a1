import math
from itertools import product

import pytest

from fibocube.oracle import (
    UNREACHABLE,
    build_graph,
    find_critical_pairs,
    first_violation_dimension,
    graph_distance,
    graph_to_dot,
    graph_to_json_dict,
    index_bruteforce,
    is_isometric,
)
from fibocube.words import Word, hamming


def W(text):
    return Word.parse(text)


# Vertex set of Q_4(101), frozen from independent string-level enumeration.
Q4_101_VERTICES = [
    "0000", "0001", "0010", "0011", "0100", "0110",
    "0111", "1000", "1001", "1100", "1110", "1111",
]

FIBONACCI_COUNTS = [2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610, 987, 1597]


class TestBuildGraph:
    def test_fibonacci_cube_d4(self):
        assert build_graph(W("11"), 4).vertex_count == 8

    def test_pattern_1_leaves_one_vertex(self):
        g = build_graph(W("1"), 3)
        assert [str(w) for w in g.words()] == ["000"]

    def test_q4_101_exact_vertex_set(self):
        g = build_graph(W("101"), 4)
        assert [str(w) for w in g.words()] == Q4_101_VERTICES
        assert g.vertex_count == 12

    def test_longer_pattern_gives_full_cube(self):
        g = build_graph(W("0110"), 3)
        assert g.vertex_count == 8

    def test_fibonacci_recurrence(self):
        counts = [build_graph(W("11"), d).vertex_count for d in range(1, 16)]
        assert counts == FIBONACCI_COUNTS
        for i in range(2, len(counts)):
            assert counts[i] == counts[i - 1] + counts[i - 2]

    def test_full_cube_iff_pattern_longer_than_dimension(self):
        for nf in range(1, 4):
            for bits in product("01", repeat=nf):
                f = W("".join(bits))
                for d in range(1, 5):
                    count = build_graph(f, d).vertex_count
                    assert (count == 1 << d) == (f.length > d)

    def test_dimension_cap(self):
        with pytest.raises(ValueError, match="cap"):
            build_graph(W("11"), 26)
        with pytest.raises(ValueError, match="cap"):
            build_graph(W("11"), 6, cap=5)
        assert build_graph(W("11"), 5, cap=5).vertex_count == 13


class TestGraphDistance:
    def test_detour_distance(self):
        g = build_graph(W("101"), 4)
        assert graph_distance(g, W("1111"), W("1001")) == 4
        assert hamming(W("1111"), W("1001")) == 2

    def test_self_distance(self):
        g = build_graph(W("101"), 4)
        assert graph_distance(g, W("0110"), W("0110")) == 0

    def test_short_detour(self):
        g = build_graph(W("101"), 3)
        assert graph_distance(g, W("010"), W("111")) == 2

    def test_non_vertex_rejected(self):
        g = build_graph(W("101"), 4)
        with pytest.raises(ValueError):
            graph_distance(g, W("1010"), W("0000"))

    def test_distance_at_least_hamming(self):
        g = build_graph(W("101"), 4)
        ws = list(g.words())
        strict = 0
        for a in ws:
            for b in ws:
                d = graph_distance(g, a, b)
                assert d >= hamming(a, b)
                if d > hamming(a, b):
                    strict += 1
        assert strict > 0


class TestIsIsometric:
    def test_q3_101_isometric(self):
        assert is_isometric(build_graph(W("101"), 3)).isometric

    def test_q4_101_violation(self):
        v = is_isometric(build_graph(W("101"), 4))
        assert not v.isometric
        alpha, beta, dg, h = v.violating_pair
        assert (str(alpha), str(beta), dg, h) == ("1001", "1111", 4, 2)

    def test_full_cube_fast_path(self):
        v = is_isometric(build_graph(W("01100"), 4))
        assert v.isometric and v.violating_pair is None

    def test_with_min_p(self):
        v = is_isometric(build_graph(W("101"), 4), with_min_p=True)
        assert v.minimal_critical_p == 2

    def test_verdict_matches_pair_presence(self):
        for text in ["11", "101", "0011"]:
            f = W(text)
            for d in range(2, 2 * f.length):
                g = build_graph(f, d)
                assert is_isometric(g).isometric == (not find_critical_pairs(g))


class TestCriticalPairs:
    def test_q4_101(self):
        pairs = find_critical_pairs(build_graph(W("101"), 4))
        assert [(str(c.alpha), str(c.beta), c.p, c.blocked_side) for c in pairs] == [
            ("1001", "1111", 2, "both")
        ]

    def test_empty_cases(self):
        assert find_critical_pairs(build_graph(W("101"), 3)) == []
        assert find_critical_pairs(build_graph(W("11"), 2)) == []

    def test_q8_00011_mixed_p_values(self):
        # Frozen from independent string-level enumeration.
        g = build_graph(W("00011"), 8)
        pairs = find_critical_pairs(g)
        assert [(str(c.alpha), str(c.beta), c.p, c.blocked_side) for c in pairs] == [
            ("00001011", "00010011", 2, "both"),
            ("00001011", "00010111", 3, "alpha"),
        ]
        minimal = find_critical_pairs(g, minimal_only=True)
        assert [(str(c.alpha), str(c.beta), c.p) for c in minimal] == [
            ("00001011", "00010011", 2)
        ]

    def test_q7_0011_pure_three(self):
        pairs = find_critical_pairs(build_graph(W("0011"), 7))
        assert [(str(c.alpha), str(c.beta), c.p, c.blocked_side) for c in pairs] == [
            ("0001011", "0010111", 3, "both")
        ]

    def test_alpha_lexicographically_first(self):
        for text, d in [("101", 4), ("00011", 8), ("0011", 7)]:
            for c in find_critical_pairs(build_graph(W(text), d)):
                assert c.alpha < c.beta

    def test_blocked_side_definition(self):
        g = build_graph(W("101"), 4)
        (c,) = find_critical_pairs(g)
        for endpoint in (c.alpha, c.beta):
            other = c.beta if endpoint is c.alpha else c.alpha
            from fibocube.words import contains_factor, differing_positions

            for i in differing_positions(endpoint, other):
                assert contains_factor(endpoint.flip(i), W("101"))


class TestIndexBruteforce:
    @pytest.mark.parametrize(
        "text,expected",
        [("101", 4), ("11", None), ("1", None), ("1001", 5), ("0011", 7), ("010", 4)],
    )
    def test_known_indices(self, text, expected):
        assert index_bruteforce(W(text)) == expected

    def test_cap_exceeded(self):
        with pytest.raises(ValueError, match="cap"):
            index_bruteforce(W("1" * 14))

    def test_symmetry_under_reverse_and_complement(self):
        for n in range(1, 4):
            for bits in product("01", repeat=n):
                f = W("".join(bits))
                b = index_bruteforce(f)
                assert index_bruteforce(f.reverse()) == b
                assert index_bruteforce(f.complement()) == b

    def test_nonisometry_persists_upward(self):
        for d in range(4, 8):
            assert not is_isometric(build_graph(W("101"), d)).isometric

    def test_first_violation_scan(self):
        assert first_violation_dimension(W("101"), 8) == 4
        assert first_violation_dimension(W("11"), 8) is None


class TestExports:
    def test_dot_q2_11(self):
        dot = graph_to_dot(build_graph(W("11"), 2))
        assert dot == (
            'graph "Q_2(11)" {\n'
            '  "00";\n'
            '  "01";\n'
            '  "10";\n'
            '  "00" -- "01";\n'
            '  "00" -- "10";\n'
            "}\n"
        )

    def test_dot_counts_q4_11(self):
        dot = graph_to_dot(build_graph(W("11"), 4))
        assert dot.count(";") == 8 + 10  # 8 vertices, 10 edges

    def test_json_dict(self):
        data = graph_to_json_dict(build_graph(W("11"), 3))
        assert data["vertex_count"] == 5
        assert data["vertices"] == ["000", "001", "010", "100", "101"]
        assert ["000", "001"] in data["edges"]
        assert all(a < b for a, b in data["edges"])

    def test_unreachable_constant(self):
        assert UNREACHABLE == math.inf
