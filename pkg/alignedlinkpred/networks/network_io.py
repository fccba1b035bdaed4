import os

from .heterogeneous_network import (HeterogeneousNetwork, NetworkFormatError,
                                    ReferentialIntegrityError, AnchorMapError,
                                    tokenize_words)


def _read_records(file_name):
    with open(file_name, "r", encoding="utf-8") as f:
        for line_number, line in enumerate(f, start=1):
            stripped = line.strip()
            if stripped == "" or stripped.startswith("#"):
                continue
            yield line_number, stripped


def _parse_int(token, file_name, line_number):
    try:
        return(int(token))
    except ValueError:
        raise NetworkFormatError(file_name + ":" + str(line_number) +
                                 ": expected an integer id, got '" + token + "'.")


def read_network(users_file_name,
                 links_file_name,
                 events_file_name,
                 verbose=False):
    """
    Read a heterogeneous network from its users, links and events files.

    Formats (UTF-8, lines starting with '#' are ignored):
        users:  one integer id per line.
        links:  two whitespace-separated ids per line; both directions of a
                follow relation collapse into one undirected link.
        events: <user-id> <loc|time|word> <payload> where the loc payload is
                <location-id>,<lat>,<lon>, the time payload an hour in 0..23
                and the word payload text that is lowercased and tokenized.

    Arguments
    ---------
    users_file_name : string
        Path of the users file.

    links_file_name : string
        Path of the links file.

    events_file_name : string
        Path of the events file.

    verbose : boolean
        Print progress to the screen.

    Returns
    -------
    HeterogeneousNetwork

    Example
    -------
    >>> net = read_network("target/users.txt", "target/links.txt", "target/events.txt")
    """

    users = list()
    seen = set()
    for line_number, record in _read_records(users_file_name):
        fields = record.split()
        if len(fields) != 1:
            raise NetworkFormatError(users_file_name + ":" + str(line_number) +
                                     ": expected one user id per line.")
        user = _parse_int(fields[0], users_file_name, line_number)
        if user not in seen:
            seen.add(user)
            users.append(user)

    links = set()
    for line_number, record in _read_records(links_file_name):
        fields = record.split()
        if len(fields) != 2:
            raise NetworkFormatError(links_file_name + ":" + str(line_number) +
                                     ": expected two user ids per line.")
        u = _parse_int(fields[0], links_file_name, line_number)
        v = _parse_int(fields[1], links_file_name, line_number)
        if u == v:
            raise NetworkFormatError(links_file_name + ":" + str(line_number) +
                                     ": self-link on user " + str(u) + ".")
        for w in (u, v):
            if w not in seen:
                raise ReferentialIntegrityError(links_file_name + ":" + str(line_number) +
                                                ": unknown user " + str(w) + ".")
        links.add((min(u, v), max(u, v)))

    location_events = dict()
    time_events = dict()
    word_events = dict()
    for line_number, record in _read_records(events_file_name):
        where = events_file_name + ":" + str(line_number)
        fields = record.split(None, 2)
        if len(fields) != 3:
            raise NetworkFormatError(where + ": expected '<user-id> <kind> <payload>'.")
        user = _parse_int(fields[0], events_file_name, line_number)
        if user not in seen:
            raise ReferentialIntegrityError(where + ": unknown user " + str(user) + ".")
        kind, payload = fields[1], fields[2]
        if kind == "loc":
            parts = payload.split(",")
            if len(parts) != 3:
                raise NetworkFormatError(where + ": location payload must be '<id>,<lat>,<lon>'.")
            try:
                location_id = int(parts[0])
                latitude = float(parts[1])
                longitude = float(parts[2])
            except ValueError:
                raise NetworkFormatError(where + ": malformed location payload '" + payload + "'.")
            if not (-90.0 <= latitude <= 90.0) or not (-180.0 <= longitude <= 180.0):
                raise NetworkFormatError(where + ": coordinates out of range.")
            location_events.setdefault(user, list()).append((location_id, latitude, longitude))
        elif kind == "time":
            try:
                hour = int(payload)
            except ValueError:
                raise NetworkFormatError(where + ": malformed hour '" + payload + "'.")
            if hour < 0 or hour > 23:
                raise NetworkFormatError(where + ": hour " + str(hour) + " outside 0..23.")
            time_events.setdefault(user, list()).append(hour)
        elif kind == "word":
            word_events.setdefault(user, list()).extend(tokenize_words(payload))
        else:
            raise NetworkFormatError(where + ": unknown event kind '" + kind + "'.")

    if verbose == True:
        print("Read network:  " + str(len(users)) + " users, " + str(len(links)) + " links.")

    try:
        network = HeterogeneousNetwork(users, links, location_events, time_events, word_events)
    except ValueError as e:
        if isinstance(e, (NetworkFormatError, ReferentialIntegrityError)):
            raise
        raise NetworkFormatError(events_file_name + ": " + str(e))

    return(network)


def write_network(network,
                  users_file_name,
                  links_file_name,
                  events_file_name):
    """
    Write a heterogeneous network in the format read by read_network.

    Arguments
    ---------
    network : HeterogeneousNetwork
        Network to serialize.

    users_file_name : string
        Destination of the users file.

    links_file_name : string
        Destination of the links file.

    events_file_name : string
        Destination of the events file.

    Example
    -------
    >>> write_network(net, "out/users.txt", "out/links.txt", "out/events.txt")
    """

    for file_name in (users_file_name, links_file_name, events_file_name):
        directory = os.path.dirname(file_name)
        if directory != "" and not os.path.exists(directory):
            os.makedirs(directory)

    with open(users_file_name, "w", encoding="utf-8") as f:
        for u in network.users:
            f.write(str(u) + "\n")

    with open(links_file_name, "w", encoding="utf-8") as f:
        for u, v in network.links():
            f.write(str(u) + " " + str(v) + "\n")

    with open(events_file_name, "w", encoding="utf-8") as f:
        for u in network.users:
            for location_id, latitude, longitude in network.location_events(u):
                f.write(str(u) + " loc " + str(location_id) + "," + repr(float(latitude)) +
                        "," + repr(float(longitude)) + "\n")
            for hour in network.time_events(u):
                f.write(str(u) + " time " + str(hour) + "\n")
            for word in network.word_events(u):
                f.write(str(u) + " word " + word + "\n")


def read_anchors(anchors_file_name):
    """
    Read anchor links as a dict from target user id to source user id.

    Raises AnchorMapError when an account appears in more than one anchor.
    """

    anchors = dict()
    used_sources = dict()
    for line_number, record in _read_records(anchors_file_name):
        where = anchors_file_name + ":" + str(line_number)
        fields = record.split()
        if len(fields) != 2:
            raise NetworkFormatError(where + ": expected '<target-id> <source-id>'.")
        t = _parse_int(fields[0], anchors_file_name, line_number)
        s = _parse_int(fields[1], anchors_file_name, line_number)
        if t in anchors:
            raise AnchorMapError(where + ": target user " + str(t) + " is anchored more than once.")
        if s in used_sources:
            raise AnchorMapError(where + ": source user " + str(s) + " is anchored more than once.")
        anchors[t] = s
        used_sources[s] = t
    return(anchors)


def write_anchors(aligned_pair, anchors_file_name):
    directory = os.path.dirname(anchors_file_name)
    if directory != "" and not os.path.exists(directory):
        os.makedirs(directory)
    with open(anchors_file_name, "w", encoding="utf-8") as f:
        for t, s in sorted(aligned_pair.anchors.items()):
            f.write(str(t) + " " + str(s) + "\n")
