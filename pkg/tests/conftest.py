import pytest

from alignedlinkpred.networks import GeneratorParams, generate_aligned_networks
from alignedlinkpred.networks import HeterogeneousNetwork, partition_users


def small_generator_params(**overrides):
    values = dict(number_of_users=120, attach_m=3, mean_locations=8.0, mean_posts=8.0,
                  mean_words=12.0, vocabulary_size=300, number_of_locations=80,
                  number_of_topics=6, number_of_cities=3, random_seed=3)
    values.update(overrides)
    return(GeneratorParams(**values))


@pytest.fixture(scope="session")
def small_aligned_pair():
    return(generate_aligned_networks(small_generator_params()))


@pytest.fixture(scope="session")
def small_partition(small_aligned_pair):
    return(partition_users(small_aligned_pair.target, 0.2, random_seed=0))


@pytest.fixture
def overlap_network():
    # Γ(1) = {3, 4, 5}, Γ(2) = {4, 5, 6}; user 7 is isolated.
    return(HeterogeneousNetwork(range(1, 8), [(1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (2, 6)]))
