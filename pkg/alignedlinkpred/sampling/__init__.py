from .user_similarity import user_similarity, similarity_matrix, relevance_vector
from .diversity_matrix import structure_regularization_matrix, diversity_matrix
from .project_simplex import project_simplex

from .optimize_sampling_distribution import SamplingProblem, SamplingDistribution
from .optimize_sampling_distribution import build_sampling_problem
from .optimize_sampling_distribution import optimize_sampling_distribution
from .optimize_sampling_distribution import write_sampling_diagnostics

from .sample_old_users import sample_old_users
