import os

import numpy as np
import pytest

from hypothesis import given, settings, strategies as st

from alignedlinkpred.networks import HeterogeneousNetwork, AlignedPair, UserPartition
from alignedlinkpred.networks import NetworkFormatError, ReferentialIntegrityError, AnchorMapError
from alignedlinkpred.networks import read_network, write_network, read_anchors, write_anchors
from alignedlinkpred.networks import build_aligned_pair, reverse_aligned_pair
from alignedlinkpred.networks import partition_users, withhold_information
from alignedlinkpred.networks import sample_aligned_subnetworks, network_statistics
from alignedlinkpred.networks import tokenize_words


def write_lines(path, lines):
    with open(path, "w", encoding="utf-8") as f:
        f.write("\n".join(lines) + "\n")
    return(str(path))


@pytest.fixture
def network_files(tmp_path):
    def make(users, links, events=()):
        return(write_lines(tmp_path / "users.txt", users),
               write_lines(tmp_path / "links.txt", links),
               write_lines(tmp_path / "events.txt", events))
    return(make)


def test_read_network_single_link(network_files):
    net = read_network(*network_files(["1", "2", "3"], ["1 2"]))
    assert net.users == (1, 2, 3)
    assert net.links() == [(1, 2)]


def test_read_network_collapses_reversed_links(network_files):
    net = read_network(*network_files(["1", "2", "3"], ["1 2", "2 1", "# comment", ""]))
    assert net.number_of_links == 1
    assert 2 in net.neighbors(1) and 1 in net.neighbors(2)


def test_read_network_unknown_user(network_files):
    with pytest.raises(ReferentialIntegrityError):
        read_network(*network_files(["1", "2", "3"], ["1 9"]))


@pytest.mark.parametrize("line", ["1", "1 2 3", "1 x", "1 1"])
def test_read_network_malformed_link_reports_line(network_files, line):
    with pytest.raises(NetworkFormatError, match=r"links\.txt:2"):
        read_network(*network_files(["1", "2"], ["# header", line]))


@pytest.mark.parametrize("line", ["1 loc 5,91.0,0.0", "1 time 24", "1 smell rose", "1 loc 5,1.0"])
def test_read_network_malformed_event(network_files, line):
    with pytest.raises(ValueError):
        read_network(*network_files(["1", "2"], ["1 2"], [line]))


def test_read_network_events(network_files):
    net = read_network(*network_files(["1", "2"], ["1 2"],
                                      ["1 loc 7,40.7,-74.0", "1 time 9", "1 word Coffee!", "2 time 23"]))
    assert net.location_events(1) == ((7, 40.7, -74.0),)
    assert net.time_events(1) == (9,)
    assert net.word_events(1) == ("coffee",)
    assert net.time_events(2) == (23,)
    assert net.location_events(2) == ()


def test_tokenize_words():
    assert tokenize_words("Coffee, then #Running!") == ["coffee", "then", "running"]


def test_network_round_trip(tmp_path, small_aligned_pair):
    net = small_aligned_pair.target
    paths = [str(tmp_path / "t" / name) for name in ("users.txt", "links.txt", "events.txt")]
    write_network(net, *paths)
    assert read_network(*paths) == net


def test_network_rejects_self_link_and_bad_hour():
    with pytest.raises(ValueError):
        HeterogeneousNetwork([1, 2], [(1, 1)])
    with pytest.raises(ValueError):
        HeterogeneousNetwork([1, 2], time_events={1: [24]})
    with pytest.raises(ReferentialIntegrityError):
        HeterogeneousNetwork([1, 2], word_events={3: ["a"]})


def test_build_aligned_pair_full_coverage(tmp_path):
    target = HeterogeneousNetwork([1, 2], [(1, 2)])
    source = HeterogeneousNetwork([10, 20], [(10, 20)])
    aligned = build_aligned_pair(target, source, write_lines(tmp_path / "a.txt", ["1 10", "2 20"]))
    assert aligned.coverage == 1.0
    assert aligned.counterpart(2) == 20
    assert aligned.target_counterpart(10) == 1


def test_build_aligned_pair_empty_anchor_file(tmp_path):
    target = HeterogeneousNetwork([1, 2])
    source = HeterogeneousNetwork([10, 20])
    path = tmp_path / "a.txt"
    path.write_text("", encoding="utf-8")
    aligned = build_aligned_pair(target, source, str(path))
    assert aligned.coverage == 0.0
    assert aligned.counterpart(1) is None


@pytest.mark.parametrize("lines", [["1 10", "1 20"], ["1 10", "2 10"]])
def test_read_anchors_non_injective(tmp_path, lines):
    with pytest.raises(AnchorMapError):
        read_anchors(write_lines(tmp_path / "a.txt", lines))


def test_anchor_round_trip_and_reverse(tmp_path, small_aligned_pair):
    path = str(tmp_path / "anchors.txt")
    write_anchors(small_aligned_pair, path)
    assert read_anchors(path) == small_aligned_pair.anchors

    reversed_pair = reverse_aligned_pair(small_aligned_pair)
    assert reversed_pair.target is small_aligned_pair.source
    for t, s in small_aligned_pair.anchors.items():
        assert reversed_pair.counterpart(s) == t


def test_aligned_pair_rejects_unknown_anchor():
    with pytest.raises(ReferentialIntegrityError):
        AlignedPair(HeterogeneousNetwork([1]), HeterogeneousNetwork([2]), {1: 3})


@pytest.mark.parametrize("number_of_users,fraction,expected", [(1000, 0.2, 200), (10, 0.2, 2), (5, 0.5, 3)])
def test_partition_sizes(number_of_users, fraction, expected):
    partition = partition_users(HeterogeneousNetwork(range(number_of_users)), fraction, random_seed=4)
    assert len(partition.new_users) == expected
    assert len(partition.old_users) == number_of_users - expected


@given(st.integers(min_value=0, max_value=2**31 - 1))
@settings(max_examples=30, deadline=None)
def test_partition_covers_users(seed):
    net = HeterogeneousNetwork(range(37))
    partition = partition_users(net, 0.3, random_seed=seed)
    assert partition.new_users | partition.old_users == set(net.users)
    assert len(partition.new_users & partition.old_users) == 0
    assert partition == partition_users(net, 0.3, random_seed=seed)


def test_partition_errors():
    with pytest.raises(ValueError):
        partition_users(HeterogeneousNetwork([]), 0.2)
    with pytest.raises(ValueError):
        partition_users(HeterogeneousNetwork([1, 2]), 1.0)
    with pytest.raises(ValueError):
        UserPartition([1, 2], [2, 3])


@pytest.fixture
def star_network():
    return(HeterogeneousNetwork(range(11), [(0, k) for k in range(1, 11)],
                                time_events={0: list(range(10))},
                                word_events={0: ["w" + str(k) for k in range(10)]}))


def test_withhold_ratio_zero(star_network):
    visible = withhold_information(star_network, [0], 0.0, random_seed=1)
    assert visible.degree(0) == 0
    assert visible.time_events(0) == ()
    assert visible.word_events(0) == ()
    assert visible.users == star_network.users


def test_withhold_ratio_one_is_identity(star_network):
    assert withhold_information(star_network, [0], 1.0, random_seed=1) == star_network


def test_withhold_rounding(star_network):
    visible = withhold_information(star_network, [0], 0.3, random_seed=1)
    assert visible.degree(0) == 3
    assert len(visible.time_events(0)) == 3


def test_withhold_star_with_all_users_new(star_network):
    visible = withhold_information(star_network, star_network.users, 0.3, random_seed=1)
    assert visible.degree(0) == 3


def test_withhold_lower_id_new_user_decides(small_aligned_pair, small_partition):
    target = small_aligned_pair.target
    new_users = small_partition.new_users
    visible = withhold_information(target, new_users, 0.5, random_seed=6)
    checked = 0
    for u in new_users:
        if any(v in new_users and v < u for v in target.neighbors(u)):
            continue
        assert visible.degree(u) == int(np.floor(0.5 * target.degree(u) + 0.5))
        checked += 1
    assert checked > 0
    for u, v in visible.links():
        assert target.has_link(u, v)


def test_withhold_leaves_old_users(small_aligned_pair, small_partition):
    target = small_aligned_pair.target
    visible = withhold_information(target, small_partition.new_users, 0.4, random_seed=2)
    for u in small_partition.old_users:
        assert visible.time_events(u) == target.time_events(u)
        assert visible.location_events(u) == target.location_events(u)
    old_links = [(u, v) for u, v in target.links()
                 if u in small_partition.old_users and v in small_partition.old_users]
    assert all(visible.has_link(u, v) for u, v in old_links)


@given(st.integers(min_value=0, max_value=10**6),
       st.floats(min_value=0.0, max_value=1.0),
       st.floats(min_value=0.0, max_value=1.0))
@settings(max_examples=40, deadline=None)
def test_withhold_is_nested(seed, a, b):
    net = HeterogeneousNetwork(range(12), [(0, k) for k in range(1, 12)] + [(1, 2), (2, 3)])
    low, high = min(a, b), max(a, b)
    kept_low = set(withhold_information(net, [0, 1], low, random_seed=seed).links())
    kept_high = set(withhold_information(net, [0, 1], high, random_seed=seed).links())
    assert kept_low <= kept_high


def test_network_statistics(star_network):
    statistics = network_statistics(star_network)
    assert statistics["users"] == 11
    assert statistics["social_links"] == 10
    assert statistics["time_events"] == 10
    assert statistics["words"] == 10


def test_sample_aligned_subnetworks(small_aligned_pair):
    subset = sample_aligned_subnetworks(small_aligned_pair, number_of_users=50, random_seed=0)
    assert subset.target.number_of_users == 50
    assert subset.source.number_of_users == 50
    assert subset.coverage == 1.0
    for u, v in subset.target.links():
        assert small_aligned_pair.target.has_link(u, v)
    with pytest.raises(ValueError):
        sample_aligned_subnetworks(small_aligned_pair, number_of_users=10**6)


def test_sample_aligned_subnetworks_is_deterministic(small_aligned_pair):
    first = sample_aligned_subnetworks(small_aligned_pair, number_of_users=30, random_seed=5)
    second = sample_aligned_subnetworks(small_aligned_pair, number_of_users=30, random_seed=5)
    assert first.target == second.target
    assert first.anchors == second.anchors


def test_written_files_are_created_in_missing_directories(tmp_path):
    net = HeterogeneousNetwork([1, 2], [(1, 2)])
    paths = [str(tmp_path / "a" / "b" / name) for name in ("u.txt", "l.txt", "e.txt")]
    write_network(net, *paths)
    assert all(os.path.exists(p) for p in paths)
