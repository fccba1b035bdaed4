import re
import math

from collections import Counter
from functools import cached_property

import numpy as np
import networkx as nx

from sklearn.feature_extraction import DictVectorizer

CHANNELS = ("location", "time", "word")


class NetworkFormatError(ValueError):
    """Malformed line in one of the network files."""


class ReferentialIntegrityError(ValueError):
    """A link, event or anchor names a user the network does not contain."""


class AnchorMapError(ValueError):
    """An account is anchored to more than one counterpart."""


def tokenize_words(text):
    """
    Lowercase and split text on whitespace and punctuation.

    Arguments
    ---------
    text : string
        Raw text of a post or a single word payload.

    Returns
    -------
    List of tokens.

    Example
    -------
    >>> tokenize_words("Coffee, then #Running!")
    ['coffee', 'then', 'running']
    """
    return(re.findall(r"[^\W_]+", text.lower()))


class HeterogeneousNetwork(object):
    """
    Social network with users, undirected social links and the auxiliary
    location, time and word events attached to each user.

    The network is immutable after construction.  Per-user channel vectors
    (location counts, hour-of-day counts, TF-IDF word weights) and the
    corresponding user-by-key sparse matrices are computed on first use and
    shared by the feature and sampling code.

    Arguments
    ---------
    users : iterable of integers
        User ids.

    social_links : iterable of (integer, integer)
        Undirected social links.  Duplicates and reversed duplicates collapse.

    location_events : dict
        Maps a user id to a sequence of (location_id, latitude, longitude).

    time_events : dict
        Maps a user id to a sequence of hour-of-day slots in 0..23.

    word_events : dict
        Maps a user id to a sequence of word tokens.

    Example
    -------
    >>> net = HeterogeneousNetwork([1, 2, 3], [(1, 2)], time_events={1: [9, 9]})
    >>> net.number_of_links
    1
    """

    def __init__(self, users, social_links=None, location_events=None,
                 time_events=None, word_events=None):

        graph = nx.Graph()
        graph.add_nodes_from(sorted(int(u) for u in users))

        if social_links is not None:
            for u, v in social_links:
                if u == v:
                    raise ValueError("Self-link on user " + str(u) + " is not allowed.")
                for w in (u, v):
                    if w not in graph:
                        raise ReferentialIntegrityError(
                            "Social link (" + str(u) + ", " + str(v) + ") references unknown user " + str(w) + ".")
                graph.add_edge(u, v)

        self._graph = nx.freeze(graph)
        self._users = tuple(graph.nodes())
        self._index = {u: i for i, u in enumerate(self._users)}

        self._location_events = self._check_events(location_events, "location")
        self._time_events = self._check_events(time_events, "time")
        self._word_events = self._check_events(word_events, "word")

        self._location_coordinates = dict()
        for events in self._location_events.values():
            for location_id, latitude, longitude in events:
                known = self._location_coordinates.setdefault(location_id, (latitude, longitude))
                if known != (latitude, longitude):
                    raise ValueError("Location " + str(location_id) + " has inconsistent coordinates.")

    def _check_events(self, events, channel):
        checked = dict()
        if events is None:
            return(checked)
        for u, items in events.items():
            if u not in self._index:
                raise ReferentialIntegrityError(
                    "The " + channel + " events reference unknown user " + str(u) + ".")
            items = tuple(items)
            for item in items:
                if channel == "location":
                    location_id, latitude, longitude = item
                    if not (-90.0 <= latitude <= 90.0) or not (-180.0 <= longitude <= 180.0):
                        raise ValueError("Location " + str(location_id) + " has out of range coordinates.")
                elif channel == "time":
                    if int(item) != item or not (0 <= item <= 23):
                        raise ValueError("Hour slot " + str(item) + " is outside 0..23.")
            if len(items) > 0:
                checked[u] = items
        return(checked)

    @property
    def users(self):
        return(self._users)

    @property
    def graph(self):
        return(self._graph)

    @property
    def number_of_users(self):
        return(len(self._users))

    @property
    def number_of_links(self):
        return(self._graph.number_of_edges())

    @property
    def location_coordinates(self):
        return(dict(self._location_coordinates))

    def location_coordinate(self, location_id):
        return(self._location_coordinates[location_id])

    def __contains__(self, user):
        return(user in self._index)

    def __len__(self):
        return(len(self._users))

    def check_user(self, user):
        if user not in self._index:
            raise ValueError("Unknown user " + str(user) + ".")

    def user_index(self, user):
        self.check_user(user)
        return(self._index[user])

    def links(self):
        return(sorted((min(u, v), max(u, v)) for u, v in self._graph.edges()))

    def neighbors(self, user):
        self.check_user(user)
        return(set(self._graph.adj[user]))

    def degree(self, user):
        self.check_user(user)
        return(self._graph.degree(user))

    def has_link(self, u, v):
        return(self._graph.has_edge(u, v))

    def location_events(self, user):
        return(self._location_events.get(user, ()))

    def time_events(self, user):
        return(self._time_events.get(user, ()))

    def word_events(self, user):
        return(self._word_events.get(user, ()))

    def events(self, channel, user):
        if channel == "location":
            return(self.location_events(user))
        elif channel == "time":
            return(self.time_events(user))
        elif channel == "word":
            return(self.word_events(user))
        else:
            raise ValueError("Unknown channel " + str(channel) + ".")

    def channel_counts(self, channel, user):
        """Raw count vector of one channel; location events are keyed by location id."""
        self.check_user(user)
        if channel == "location":
            return(Counter(location_id for location_id, _, _ in self.location_events(user)))
        return(Counter(self.events(channel, user)))

    @cached_property
    def _word_idf(self):
        document_frequency = Counter()
        for u in self._users:
            document_frequency.update(set(self.word_events(u)))
        number_of_documents = len(self._users)
        return({word: math.log(number_of_documents / df) for word, df in document_frequency.items()})

    @cached_property
    def _channel_vectors(self):
        vectors = dict()
        for channel in CHANNELS:
            vectors[channel] = [self.channel_counts(channel, u) for u in self._users]
        idf = self._word_idf
        vectors["word_count"] = vectors["word"]
        vectors["word"] = list()
        for counts in vectors["word_count"]:
            weights = {word: count * idf[word] for word, count in counts.items() if idf[word] > 0.0}
            vectors["word"].append(weights)
        return(vectors)

    @cached_property
    def _channel_matrices(self):
        matrices = dict()
        for channel, rows in self._channel_vectors.items():
            vectorizer = DictVectorizer(dtype=np.float64, sort=True)
            matrices[channel] = vectorizer.fit_transform(
                [{str(key): float(value) for key, value in row.items()} for row in rows]).tocsr()
        return(matrices)

    def channel_vector(self, channel, user):
        """
        Sparse vector (dict of key to non-negative weight) of one user.

        ``channel`` is one of "location", "time", "word" (TF-IDF weights) or
        "word_count" (raw word counts).
        """
        index = self.user_index(user)
        if channel not in self._channel_vectors:
            raise ValueError("Unknown channel " + str(channel) + ".")
        return(self._channel_vectors[channel][index])

    def channel_matrix(self, channel):
        """Users-by-keys CSR matrix of a channel; rows follow ``self.users``."""
        if channel not in self._channel_matrices:
            raise ValueError("Unknown channel " + str(channel) + ".")
        return(self._channel_matrices[channel])

    def adjacency_matrix(self, users=None):
        if users is None:
            users = self._users
        return(nx.to_scipy_sparse_array(self._graph, nodelist=list(users), dtype=np.float64, format="csr"))

    def subnetwork(self, users):
        """Induced subnetwork on ``users`` keeping all their events."""
        keep = set(users)
        for u in keep:
            self.check_user(u)
        return(HeterogeneousNetwork(
            keep,
            self._graph.subgraph(keep).edges(),
            location_events={u: e for u, e in self._location_events.items() if u in keep},
            time_events={u: e for u, e in self._time_events.items() if u in keep},
            word_events={u: e for u, e in self._word_events.items() if u in keep}))

    def __eq__(self, other):
        if not isinstance(other, HeterogeneousNetwork):
            return(NotImplemented)
        if self._users != other._users or self.links() != other.links():
            return(False)
        for u in self._users:
            if Counter(self.location_events(u)) != Counter(other.location_events(u)):
                return(False)
            if Counter(self.time_events(u)) != Counter(other.time_events(u)):
                return(False)
            if Counter(self.word_events(u)) != Counter(other.word_events(u)):
                return(False)
        return(True)

    def __hash__(self):
        return(id(self))

    def __repr__(self):
        return("HeterogeneousNetwork(users=" + str(self.number_of_users) +
               ", links=" + str(self.number_of_links) + ")")


class AlignedPair(object):
    """
    Target and source networks joined by a bijective partial anchor map.

    Arguments
    ---------
    target : HeterogeneousNetwork
        Network in which links are predicted.

    source : HeterogeneousNetwork
        Aligned network providing transferred information.

    anchors : dict
        Maps target user ids to source user ids.
    """

    def __init__(self, target, source, anchors=None):
        self.target = target
        self.source = source

        if anchors is None:
            anchors = dict()
        anchors = dict(anchors)
        inverse = dict()
        for t, s in anchors.items():
            if t not in target:
                raise ReferentialIntegrityError("Anchor references unknown target user " + str(t) + ".")
            if s not in source:
                raise ReferentialIntegrityError("Anchor references unknown source user " + str(s) + ".")
            if s in inverse:
                raise AnchorMapError("Source user " + str(s) + " is anchored more than once.")
            inverse[s] = t

        self._anchors = anchors
        self._inverse = inverse

    @property
    def anchors(self):
        return(dict(self._anchors))

    @property
    def coverage(self):
        """Fraction of target users with an anchored source account."""
        if self.target.number_of_users == 0:
            return(0.0)
        return(len(self._anchors) / self.target.number_of_users)

    def counterpart(self, target_user):
        return(self._anchors.get(target_user))

    def target_counterpart(self, source_user):
        return(self._inverse.get(source_user))

    def __repr__(self):
        return("AlignedPair(target=" + repr(self.target) + ", source=" + repr(self.source) +
               ", coverage=" + "{:.3f}".format(self.coverage) + ")")


class UserPartition(object):
    """
    Disjoint split of the target users into new and old users.
    """

    def __init__(self, new_users, old_users):
        self.new_users = frozenset(new_users)
        self.old_users = frozenset(old_users)
        if len(self.new_users & self.old_users) > 0:
            raise ValueError("New and old users overlap.")

    def is_new(self, user):
        return(user in self.new_users)

    def __eq__(self, other):
        if not isinstance(other, UserPartition):
            return(NotImplemented)
        return(self.new_users == other.new_users and self.old_users == other.old_users)

    def __hash__(self):
        return(hash((self.new_users, self.old_users)))

    def __repr__(self):
        return("UserPartition(new=" + str(len(self.new_users)) + ", old=" + str(len(self.old_users)) + ")")
