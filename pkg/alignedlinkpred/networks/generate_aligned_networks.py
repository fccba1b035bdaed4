from dataclasses import dataclass, asdict

import numpy as np
import networkx as nx

from .heterogeneous_network import HeterogeneousNetwork, AlignedPair


@dataclass
class GeneratorParams:
    """
    Parameters of the synthetic aligned network generator.

    Arguments
    ---------
    number_of_users : integer
        Users per network (one real person owns one account in each network).

    attach_m : integer
        Preferential attachment links per arriving user in the base graph.

    p_overlap : float
        Probability that a source social link is copied into the target.

    p_extra : float
        Target-only links, as a fraction of the number of base links.

    anchor_coverage : float
        Fraction of persons whose two accounts are revealed as anchors.

    mean_locations, mean_posts, mean_words : float
        Mean number of check-ins, timestamped posts and words per account.

    vocabulary_size, number_of_locations : integer
        Sizes of the word and location universes.

    number_of_topics, number_of_cities : integer
        Word topics and geographic city clusters used by the latent preferences.

    homophily : float
        Probability that a latent preference is inherited from an earlier
        neighbour in the attachment process.

    random_seed : integer
        Seed; generation is bit-reproducible for a fixed seed.
    """

    number_of_users: int = 1000
    attach_m: int = 3
    p_overlap: float = 0.8
    p_extra: float = 0.1
    anchor_coverage: float = 1.0
    mean_locations: float = 20.0
    mean_posts: float = 30.0
    mean_words: float = 50.0
    vocabulary_size: int = 2000
    number_of_locations: int = 500
    number_of_topics: int = 20
    number_of_cities: int = 5
    homophily: float = 0.5
    random_seed: int = 0

    def validate(self):
        for name in ("p_overlap", "p_extra", "anchor_coverage", "homophily"):
            value = getattr(self, name)
            if not (0.0 <= value <= 1.0):
                raise ValueError(name + " must lie in [0, 1].")
        for name in ("number_of_users", "attach_m", "vocabulary_size", "number_of_locations",
                     "number_of_topics", "number_of_cities"):
            if int(getattr(self, name)) < 1:
                raise ValueError(name + " must be at least 1.")
        for name in ("mean_locations", "mean_posts", "mean_words"):
            if getattr(self, name) < 0.0:
                raise ValueError(name + " must be non-negative.")
        if self.attach_m >= self.number_of_users:
            raise ValueError("attach_m must be smaller than number_of_users.")
        if self.number_of_topics > self.vocabulary_size:
            raise ValueError("number_of_topics cannot exceed vocabulary_size.")

    def as_dict(self):
        return(asdict(self))


def _inherit(random_generator, own, inherited, homophily):
    mixed = list(own)
    for i in range(len(mixed)):
        if len(inherited) > 0 and random_generator.random() < homophily:
            mixed[i] = inherited[random_generator.integers(len(inherited))]
    return(mixed)


def _latent_preferences(base_graph, params, random_generator):
    number_of_favourites = 5
    preferences = list()
    for person in range(params.number_of_users):
        earlier = sorted(v for v in base_graph.adj[person] if v < person)

        locations = random_generator.choice(params.number_of_locations, size=number_of_favourites).tolist()
        topics = random_generator.choice(params.number_of_topics, size=2).tolist()
        peak_hour = int(random_generator.integers(24))

        if len(earlier) > 0:
            inherited_locations = list()
            inherited_topics = list()
            for v in earlier:
                inherited_locations.extend(preferences[v]["locations"])
                inherited_topics.extend(preferences[v]["topics"])
            locations = _inherit(random_generator, locations, inherited_locations, params.homophily)
            topics = _inherit(random_generator, topics, inherited_topics, params.homophily)
            if random_generator.random() < params.homophily:
                peak_hour = preferences[earlier[random_generator.integers(len(earlier))]]["peak_hour"]

        preferences.append({"locations": locations,
                            "location_weights": random_generator.dirichlet(np.ones(number_of_favourites)),
                            "topics": topics,
                            "peak_hour": peak_hour})
    return(preferences)


def _draw_events(preference, params, location_table, topic_words, random_generator):
    hours = np.arange(24)

    number_of_checkins = random_generator.poisson(params.mean_locations)
    favourite = random_generator.random(number_of_checkins) < 0.8
    picks = random_generator.choice(preference["locations"], size=number_of_checkins,
                                    p=preference["location_weights"])
    anywhere = random_generator.integers(params.number_of_locations, size=number_of_checkins)
    location_ids = np.where(favourite, picks, anywhere)
    location_events = [(int(i), location_table[i][0], location_table[i][1]) for i in location_ids]

    number_of_posts = random_generator.poisson(params.mean_posts)
    hour_profile = np.exp(2.0 * np.cos(2.0 * np.pi * (hours - preference["peak_hour"]) / 24.0))
    hour_profile = hour_profile / hour_profile.sum()
    time_events = random_generator.choice(hours, size=number_of_posts, p=hour_profile).tolist()

    number_of_words = random_generator.poisson(params.mean_words)
    on_topic = random_generator.random(number_of_words) < 0.7
    topic_picks = random_generator.choice(preference["topics"], size=number_of_words)
    word_ids = list()
    for k in range(number_of_words):
        if on_topic[k]:
            words = topic_words[topic_picks[k]]
            word_ids.append(int(words[random_generator.integers(len(words))]))
        else:
            word_ids.append(int(random_generator.integers(params.vocabulary_size)))
    word_events = ["w" + str(i) for i in word_ids]

    return(location_events, [int(h) for h in time_events], word_events)


def generate_aligned_networks(params=None,
                              verbose=False):
    """
    Generate a synthetic pair of aligned heterogeneous networks.

    A base social graph over persons is grown by preferential attachment and
    becomes the source network.  Each source link is copied into the target
    with probability p_overlap, and Binomial(|E|, p_extra) uniformly random
    target-only links are added.  Every person carries latent location, hour
    and topic preferences, partly inherited from earlier neighbours, from which
    the events of both accounts are drawn independently.  Target ids are the
    person indices, source ids a shuffled block starting at number_of_users;
    anchor_coverage of the persons are revealed as anchors.

    Arguments
    ---------
    params : GeneratorParams
        Generator parameters (defaults when None).

    verbose : boolean
        Print progress to the screen.

    Returns
    -------
    AlignedPair

    Example
    -------
    >>> aligned = generate_aligned_networks(GeneratorParams(number_of_users=200, random_seed=3))
    """

    if params is None:
        params = GeneratorParams()
    params.validate()

    random_generator = np.random.default_rng(params.random_seed)
    n = params.number_of_users

    if verbose == True:
        print("Generator:  growing the preferential attachment graph.")

    base_graph = nx.barabasi_albert_graph(n, params.attach_m,
                                          seed=int(random_generator.integers(2**31 - 1)))
    base_links = sorted((min(u, v), max(u, v)) for u, v in base_graph.edges())

    target_ids = list(range(n))
    source_ids = (n + random_generator.permutation(n)).tolist()

    source_links = [(source_ids[u], source_ids[v]) for u, v in base_links]

    copied = random_generator.random(len(base_links)) < params.p_overlap
    target_links = set(link for link, keep in zip(base_links, copied) if keep)

    number_of_extra_links = int(random_generator.binomial(len(base_links), params.p_extra))
    occupied = set(base_links)
    number_of_extra_links = min(number_of_extra_links, n * (n - 1) // 2 - len(occupied))
    while number_of_extra_links > 0:
        u, v = random_generator.integers(n, size=2)
        link = (int(min(u, v)), int(max(u, v)))
        if u == v or link in occupied:
            continue
        occupied.add(link)
        target_links.add(link)
        number_of_extra_links -= 1

    if verbose == True:
        print("Generator:  drawing auxiliary events.")

    city_centers = np.column_stack((random_generator.uniform(-60.0, 60.0, params.number_of_cities),
                                    random_generator.uniform(-170.0, 170.0, params.number_of_cities)))
    location_city = random_generator.integers(params.number_of_cities, size=params.number_of_locations)
    location_offsets = random_generator.normal(0.0, 0.1, size=(params.number_of_locations, 2))
    location_coordinates = city_centers[location_city] + location_offsets
    location_table = [(float(np.clip(lat, -90.0, 90.0)), float(np.clip(lon, -180.0, 180.0)))
                      for lat, lon in location_coordinates]

    word_topic = random_generator.integers(params.number_of_topics, size=params.vocabulary_size)
    word_topic[:params.number_of_topics] = np.arange(params.number_of_topics)
    topic_words = [np.flatnonzero(word_topic == k) for k in range(params.number_of_topics)]

    preferences = _latent_preferences(base_graph, params, random_generator)

    target_events = {"location": dict(), "time": dict(), "word": dict()}
    source_events = {"location": dict(), "time": dict(), "word": dict()}
    for person in range(n):
        for ids, events in ((target_ids, target_events), (source_ids, source_events)):
            location_events, time_events, word_events = _draw_events(
                preferences[person], params, location_table, topic_words, random_generator)
            events["location"][ids[person]] = location_events
            events["time"][ids[person]] = time_events
            events["word"][ids[person]] = word_events

    target = HeterogeneousNetwork(target_ids, sorted(target_links),
                                  location_events=target_events["location"],
                                  time_events=target_events["time"],
                                  word_events=target_events["word"])
    source = HeterogeneousNetwork(source_ids, source_links,
                                  location_events=source_events["location"],
                                  time_events=source_events["time"],
                                  word_events=source_events["word"])

    number_of_anchors = int(np.floor(params.anchor_coverage * n + 0.5))
    anchored_persons = sorted(random_generator.permutation(n)[:number_of_anchors].tolist())
    anchors = {target_ids[p]: source_ids[p] for p in anchored_persons}

    if verbose == True:
        print("Generator:  target " + str(target.number_of_links) + " links, source " +
              str(source.number_of_links) + " links, " + str(len(anchors)) + " anchors.")

    return(AlignedPair(target, source, anchors))
