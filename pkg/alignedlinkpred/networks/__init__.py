from .heterogeneous_network import HeterogeneousNetwork, AlignedPair, UserPartition
from .heterogeneous_network import NetworkFormatError, ReferentialIntegrityError, AnchorMapError
from .heterogeneous_network import tokenize_words, CHANNELS

from .network_io import read_network, write_network, read_anchors, write_anchors
from .build_aligned_pair import build_aligned_pair, reverse_aligned_pair
from .partition_users import partition_users
from .withhold_information import withhold_information
from .sample_aligned_subnetworks import sample_aligned_subnetworks
from .network_statistics import degree_histogram, network_statistics
from .generate_aligned_networks import GeneratorParams, generate_aligned_networks
