import numpy as np
import pytest

from hypothesis import given, settings, strategies as st

from alignedlinkpred.networks import GeneratorParams, HeterogeneousNetwork
from alignedlinkpred.networks import generate_aligned_networks, degree_histogram

from conftest import small_generator_params


def test_copy_limit_is_isomorphic_under_anchors():
    aligned = generate_aligned_networks(small_generator_params(p_overlap=1.0, p_extra=0.0,
                                                               anchor_coverage=1.0))
    mapped = sorted(tuple(sorted((aligned.counterpart(u), aligned.counterpart(v))))
                    for u, v in aligned.target.links())
    assert mapped == aligned.source.links()


def test_no_overlap_no_extra_is_edgeless():
    aligned = generate_aligned_networks(small_generator_params(p_overlap=0.0, p_extra=0.0))
    assert aligned.target.number_of_links == 0
    assert aligned.source.number_of_links > 0


def test_full_coverage_is_a_bijection():
    aligned = generate_aligned_networks(small_generator_params())
    anchors = aligned.anchors
    assert aligned.coverage == 1.0
    assert sorted(anchors.keys()) == list(aligned.target.users)
    assert sorted(anchors.values()) == list(aligned.source.users)


def test_partial_coverage():
    aligned = generate_aligned_networks(small_generator_params(anchor_coverage=0.5))
    assert len(aligned.anchors) == 60


def test_generation_is_reproducible():
    first = generate_aligned_networks(small_generator_params(random_seed=11))
    second = generate_aligned_networks(small_generator_params(random_seed=11))
    third = generate_aligned_networks(small_generator_params(random_seed=12))
    assert first.target == second.target
    assert first.source == second.source
    assert first.anchors == second.anchors
    assert first.target.links() != third.target.links()


def test_accounts_share_latent_preferences():
    aligned = generate_aligned_networks(small_generator_params(mean_locations=30.0))
    target, source = aligned.target, aligned.source
    same, other = list(), list()
    users = list(target.users)
    for k, u in enumerate(users):
        x = target.channel_counts("location", u)
        y = source.channel_counts("location", aligned.counterpart(u))
        z = source.channel_counts("location", aligned.counterpart(users[(k + 1) % len(users)]))
        same.append(len(set(x) & set(y)))
        other.append(len(set(x) & set(z)))
    assert np.mean(same) > np.mean(other)


@pytest.mark.parametrize("field,value", [("p_overlap", 1.5), ("p_extra", -0.1),
                                         ("anchor_coverage", 2.0), ("number_of_users", 0),
                                         ("attach_m", 0), ("vocabulary_size", 0)])
def test_invalid_params(field, value):
    params = small_generator_params(**{field: value})
    with pytest.raises(ValueError):
        generate_aligned_networks(params)


def heavy_tail_params(seed):
    return(GeneratorParams(number_of_users=1000, attach_m=3, mean_locations=1.0, mean_posts=1.0,
                           mean_words=1.0, random_seed=seed))


@pytest.mark.slow
def test_source_degrees_are_heavy_tailed():
    heavy = 0
    for seed in range(10):
        degrees = [d for _, d in generate_aligned_networks(heavy_tail_params(seed)).source.graph.degree()]
        if max(degrees) > 10 * np.median(degrees):
            heavy += 1
    assert heavy >= 9


def test_degree_histogram_triangle():
    assert degree_histogram(HeterogeneousNetwork([1, 2, 3], [(1, 2), (2, 3), (1, 3)])) == [(2, 3)]


def test_degree_histogram_star():
    star = HeterogeneousNetwork(range(6), [(0, k) for k in range(1, 6)])
    assert degree_histogram(star) == [(5, 1), (1, 5)]


@given(st.integers(min_value=0, max_value=10**6))
@settings(max_examples=10, deadline=None)
def test_handshake_lemma_on_generated_networks(seed):
    aligned = generate_aligned_networks(small_generator_params(number_of_users=60, random_seed=seed))
    for net in (aligned.target, aligned.source):
        assert sum(d * c for d, c in degree_histogram(net)) == 2 * net.number_of_links
        assert sum(c for _, c in degree_histogram(net)) == net.number_of_users
