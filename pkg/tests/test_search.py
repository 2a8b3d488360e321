import itertools
import json
import random

import pytest

from helpers import random_quiver
from lequiver.construct import quiver_from_le
from lequiver.gseed import Mode, verify_sequence
from lequiver.le import LeDiagram, parse_diagram
from lequiver.quiver import Quiver
from lequiver.search import Outcome, check_result, find_sequence


def markov():
    return Quiver.from_arrows("abc", [("a", "b", 2), ("b", "c", 2), ("c", "a", 2)])


def test_single_vertex():
    q = Quiver.from_arrows(["v"], [])
    assert find_sequence(q).sequence == ["v"]


def test_no_mutable_vertices():
    q = Quiver.from_arrows(["v"], [], frozen=["v"])
    res = find_sequence(q)
    assert res.found and res.sequence == []


def test_a2_maximal_green():
    q = Quiver.from_arrows(["1", "2"], [("1", "2")])
    res = find_sequence(q, Mode.MAXIMAL_GREEN)
    assert res.outcome is Outcome.FOUND and res.sequence == ["1", "2"]


def test_markov_not_found_within_depth_8():
    res = find_sequence(markov(), Mode.GREEN_TO_RED, max_depth=8, max_nodes=10**6)
    assert res.outcome is Outcome.EXHAUSTED and res.sequence is None
    assert res.stats.max_depth == 8


def test_cap_hit():
    res = find_sequence(markov(), max_depth=30, max_nodes=50)
    assert res.outcome is Outcome.CAP_HIT


def test_caps_must_be_positive():
    with pytest.raises(ValueError):
        find_sequence(markov(), max_nodes=0)


def test_result_json():
    q = Quiver.from_arrows(["1", "2"], [("1", "2")])
    data = json.loads(find_sequence(q).to_json())
    assert data["outcome"] == "found" and data["sequence"] == ["1", "2"]
    assert set(data["stats"]) == {"nodes", "max_depth", "dedup_hits", "iterations"}


def test_deterministic():
    q = quiver_from_le(parse_diagram("111/111/111"))
    assert find_sequence(q).to_dict() == find_sequence(q).to_dict()


def _brute_force_shortest(q, mode, depth):
    """Length of the shortest accepted sequence by trying every word."""
    vs = q.mutable_vertices
    for n in range(depth + 1):
        for word in itertools.product(vs, repeat=n):
            if any(a == b for a, b in zip(word, word[1:])):
                continue
            if verify_sequence(q, list(word), mode).accepted:
                return n
    return None


@pytest.mark.parametrize("mode", list(Mode))
def test_shortest_length_matches_brute_force(mode):
    rng = random.Random(4)
    for _ in range(60):
        q = random_quiver(rng, max_n=3, max_mult=1)
        res = find_sequence(q, mode, max_depth=5)
        expected = _brute_force_shortest(q, mode, 5)
        if expected is None:
            assert not res.found
        else:
            assert res.found and len(res.sequence) == expected
            assert check_result(q, res, mode)


def test_maximal_green_results_are_green_to_red():
    rng = random.Random(8)
    for _ in range(40):
        q = random_quiver(rng, max_n=4, max_mult=1)
        res = find_sequence(q, Mode.MAXIMAL_GREEN, max_depth=8)
        if res.found:
            assert verify_sequence(q, res.sequence, Mode.GREEN_TO_RED).accepted


def test_grid_3x4_found():
    q = quiver_from_le(LeDiagram.all_ones(3, 4))
    res = find_sequence(q, Mode.MAXIMAL_GREEN, max_depth=12)
    assert check_result(q, res, Mode.MAXIMAL_GREEN)


def test_check_result_rejects_missing():
    res = find_sequence(markov(), max_depth=2)
    assert not check_result(markov(), res, Mode.GREEN_TO_RED)
