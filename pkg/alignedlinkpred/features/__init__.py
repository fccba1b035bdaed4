from .social_features import common_neighbors, jaccard, adamic_adar
from .auxiliary_features import spatial_features, temporal_features, text_features

from .extract_link_features import FeatureVector, FEATURE_NAMES, LAYOUTS
from .extract_link_features import layout_feature_names
from .extract_link_features import network_features
from .extract_link_features import pseudo_label
from .extract_link_features import extract_link_features
from .auxiliary_features import vector_statistics
