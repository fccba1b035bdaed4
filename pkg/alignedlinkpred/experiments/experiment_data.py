import configparser
import os

from ..networks import read_network, write_network, write_anchors, build_aligned_pair
from ..networks import generate_aligned_networks, reverse_aligned_pair, network_statistics
from ..networks import sample_aligned_subnetworks

NETWORK_FILES = ("users.txt", "links.txt", "events.txt")
ANCHORS_FILE = "anchors.txt"
MANIFEST_FILE = "manifest.ini"


def _network_file_names(directory, role):
    return([os.path.join(directory, role, file_name) for file_name in NETWORK_FILES])


def write_experiment_data(aligned_pair,
                          directory,
                          params=None):
    """
    Write an aligned pair as a data directory.

    Layout: ``target/`` and ``source/`` each hold users.txt, links.txt and
    events.txt; ``anchors.txt`` maps target to source ids and
    ``manifest.ini`` echoes the generator parameters, the seed, the network
    statistics and the file census.

    Arguments
    ---------
    aligned_pair : AlignedPair
        Pair to serialize.

    directory : string
        Output directory, created when missing.

    params : GeneratorParams
        Parameters the pair was generated with (optional).

    Returns
    -------
    List of written file paths, manifest last.
    """

    written = list()
    for role, network in (("target", aligned_pair.target), ("source", aligned_pair.source)):
        file_names = _network_file_names(directory, role)
        write_network(network, *file_names)
        written.extend(file_names)

    anchors_file_name = os.path.join(directory, ANCHORS_FILE)
    write_anchors(aligned_pair, anchors_file_name)
    written.append(anchors_file_name)

    manifest = configparser.ConfigParser()
    if params is not None:
        manifest["generator"] = {key: repr(value) if isinstance(value, float) else str(value)
                                 for key, value in params.as_dict().items()}
    for role, network in (("target", aligned_pair.target), ("source", aligned_pair.source)):
        manifest[role] = {key: str(value) for key, value in network_statistics(network).items()}
    manifest["anchors"] = {"count": str(len(aligned_pair.anchors)),
                           "coverage": repr(aligned_pair.coverage)}

    manifest_file_name = os.path.join(directory, MANIFEST_FILE)
    manifest["files"] = {"count": str(len(written) + 1),
                         "paths": ", ".join(os.path.relpath(f, directory) for f in written + [manifest_file_name])}

    with open(manifest_file_name, "w", encoding="utf-8") as f:
        manifest.write(f)
    written.append(manifest_file_name)

    return(written)


def read_experiment_data(directory,
                         verbose=False):
    """Read an aligned pair from a directory written by write_experiment_data."""

    target = read_network(*_network_file_names(directory, "target"), verbose=verbose)
    source = read_network(*_network_file_names(directory, "source"), verbose=verbose)
    return(build_aligned_pair(target, source, os.path.join(directory, ANCHORS_FILE), verbose=verbose))


def load_experiment_data(spec,
                         verbose=False):
    """
    Aligned pair of an ExperimentSpec: read from ``data_directory`` or
    generated from ``generator``, cut down to ``number_of_users`` anchored
    users when that is set, then swapped when ``reverse`` is set.
    """

    if spec.data_directory is not None:
        aligned_pair = read_experiment_data(spec.data_directory, verbose=verbose)
    else:
        aligned_pair = generate_aligned_networks(spec.generator, verbose=verbose)

    if spec.number_of_users is not None:
        aligned_pair = sample_aligned_subnetworks(aligned_pair, number_of_users=spec.number_of_users,
                                                  random_seed=spec.subset_seed, verbose=verbose)

    if spec.reverse == True:
        aligned_pair = reverse_aligned_pair(aligned_pair)

    return(aligned_pair)
