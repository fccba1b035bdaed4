import os

import numpy as np
import pandas as pd

from .project_simplex import project_simplex
from .user_similarity import relevance_vector
from .diversity_matrix import diversity_matrix


class SamplingProblem(object):
    """
    Personalized sampling objective f(delta) = delta's + theta * delta'N delta
    over the probability simplex.

    Arguments
    ---------
    s : array-like
        Relevance vector of length n with non-negative entries.

    N : array-like
        Symmetric n x n regularized diversity matrix.

    theta : float
        Non-negative weight of the diversity term.

    users : sequence of integers
        Old users in the order of s (optional).
    """

    def __init__(self, s, N, theta=0.1, users=None):
        s = np.asarray(s, dtype=np.float64)
        N = np.asarray(N, dtype=np.float64)

        if s.ndim != 1 or s.size == 0:
            raise ValueError("s must be a non-empty vector.")
        if N.shape != (s.size, s.size):
            raise ValueError("N must be a square matrix matching the length of s.")
        if not np.all(np.isfinite(s)) or not np.all(np.isfinite(N)):
            raise ValueError("s and N must be finite.")
        if np.any(s < 0.0):
            raise ValueError("Relevance entries must be non-negative.")
        if not np.array_equal(N, N.T):
            raise ValueError("N must be symmetric.")
        if theta < 0.0:
            raise ValueError("theta must be non-negative.")
        if users is not None and len(users) != s.size:
            raise ValueError("users must match the length of s.")

        self.s = s
        self.N = N
        self.theta = float(theta)
        self.users = None if users is None else tuple(users)

    @property
    def size(self):
        return(self.s.size)

    def objective(self, delta):
        return(float(delta @ self.s + self.theta * (delta @ (self.N @ delta))))

    def gradient(self, delta):
        return(self.s + 2.0 * self.theta * (self.N @ delta))


class SamplingDistribution(object):
    """
    Sampling rate distribution delta on the simplex and the per-iteration
    objective values that produced it.
    """

    def __init__(self, delta, objective_trace, users=None):
        self.delta = np.asarray(delta, dtype=np.float64)
        self.objective_trace = np.asarray(objective_trace, dtype=np.float64)
        self.users = None if users is None else tuple(users)

    @property
    def objective(self):
        return(float(self.objective_trace[-1]))

    def __repr__(self):
        return("SamplingDistribution(n=" + str(self.delta.size) + ", objective=" +
               "{:.6f}".format(self.objective) + ", iterations=" + str(self.objective_trace.size) + ")")


def build_sampling_problem(network,
                           partition,
                           theta=0.1):
    """
    Assemble the sampling problem of the old users of a target network.

    Arguments
    ---------
    network : HeterogeneousNetwork
        Target network (with withheld information when applicable).

    partition : UserPartition
        New/old split of the target users.

    theta : float
        Weight of the regularized diversity term.

    Returns
    -------
    SamplingProblem over ``sorted(partition.old_users)``.
    """

    old_users = sorted(partition.old_users)
    s = relevance_vector(network, old_users, partition.new_users)
    N = diversity_matrix(network.subnetwork(old_users))
    return(SamplingProblem(s, N, theta=theta, users=old_users))


def _ascend(problem, delta, value, maximum_number_of_iterations, tolerance, trace):
    step = 1.0
    for _ in range(maximum_number_of_iterations):
        gradient = problem.gradient(delta)
        while True:
            candidate = project_simplex(delta + step * gradient)
            candidate_value = problem.objective(candidate)
            if not np.isfinite(candidate_value):
                raise FloatingPointError("Sampling objective is not finite.")
            if candidate_value >= value:
                break
            step *= 0.5
            if step < 1e-20:
                candidate, candidate_value = delta, value
                break

        change = np.max(np.abs(candidate - delta))
        delta, value = candidate, candidate_value
        trace.append(value)
        if change < tolerance:
            break
        step = min(2.0 * step, 1e6)

    return(delta, value)


def optimize_sampling_distribution(problem,
                                   maximum_number_of_iterations=500,
                                   tolerance=1e-10,
                                   number_of_vertex_restarts=3,
                                   verbose=False):
    """
    Maximize the personalized sampling objective on the probability simplex.

    Projected gradient ascent starts at the uniform distribution; every step
    is halved until the objective does not decrease, and iterations stop when
    the sup-norm change of delta falls below the tolerance.  For theta > 0 the
    objective is a quadratic whose maxima may lie at vertices or on faces of
    the simplex that the first ascent does not reach, so the ascent is
    repeated from the ``number_of_vertex_restarts`` best vertices and the best
    point found is kept.  The objective trace records the best value reached
    so far after every iteration.

    Arguments
    ---------
    problem : SamplingProblem
        Relevance vector, diversity matrix and theta.

    maximum_number_of_iterations : integer
        Iteration budget per ascent.

    tolerance : float
        Stopping threshold on max |delta_{k+1} - delta_k|.

    number_of_vertex_restarts : integer
        Number of best simplex vertices the ascent is restarted from (0 runs
        the single ascent from the uniform distribution).

    verbose : boolean
        Print progress to the screen.

    Returns
    -------
    SamplingDistribution whose objective trace is non-decreasing.

    Example
    -------
    >>> problem = SamplingProblem([0.1, 0.9], np.eye(2), theta=0.0)
    >>> optimize_sampling_distribution(problem).delta
    array([0., 1.])
    """

    if maximum_number_of_iterations < 1:
        raise ValueError("maximum_number_of_iterations must be at least 1.")
    if number_of_vertex_restarts < 0:
        raise ValueError("number_of_vertex_restarts must be non-negative.")

    n = problem.size
    delta = np.full(n, 1.0 / n)
    value = problem.objective(delta)
    if not np.isfinite(value):
        raise FloatingPointError("Sampling objective is not finite.")
    trace = [value]

    best_delta, best_value = _ascend(problem, delta, value, maximum_number_of_iterations, tolerance, trace)

    vertex_values = problem.s + problem.theta * np.diag(problem.N)
    # Stable order keeps ties deterministic.
    vertices = np.argsort(-vertex_values, kind="stable")[:min(n, number_of_vertex_restarts)]
    for vertex in vertices:
        delta = np.zeros(n)
        delta[vertex] = 1.0
        value = problem.objective(delta)
        restart_trace = [value]
        delta, value = _ascend(problem, delta, value, maximum_number_of_iterations, tolerance, restart_trace)

        trace.extend(max(best_value, v) for v in restart_trace)
        if value > best_value + tolerance * max(1.0, abs(best_value)):
            if verbose == True:
                print("Personalized sampling:  restart from vertex " + str(int(vertex)) +
                      " improves the objective to " + "{:.6f}".format(value) + ".")
            best_delta, best_value = delta, value

    if verbose == True:
        print("Personalized sampling:  objective " + "{:.6f}".format(best_value) + " after " +
              str(len(trace) - 1) + " iterations.")

    return(SamplingDistribution(best_delta, trace, users=problem.users))


def write_sampling_diagnostics(output_prefix,
                               problem,
                               distribution):
    """
    Write s, diag(N) and delta per old user to <output_prefix>_vectors.csv and
    the objective trace to <output_prefix>_trace.csv.
    """

    directory = os.path.dirname(output_prefix)
    if directory != "" and not os.path.exists(directory):
        os.makedirs(directory)

    users = problem.users
    if users is None:
        users = range(problem.size)

    vectors = pd.DataFrame({"user": list(users),
                            "s": problem.s,
                            "N_diag": np.diag(problem.N),
                            "delta": distribution.delta})
    vectors.to_csv(output_prefix + "_vectors.csv", index=False)

    trace = pd.DataFrame({"iteration": np.arange(distribution.objective_trace.size),
                          "objective": distribution.objective_trace})
    trace.to_csv(output_prefix + "_trace.csv", index=False)
