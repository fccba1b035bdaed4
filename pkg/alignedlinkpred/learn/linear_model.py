import os

import numpy as np

from scipy.special import expit
from sklearn.preprocessing import StandardScaler


class LinearModel(object):
    """
    Linear link classifier on z-scored features.

    score(x) = w . ((x - mean) / scale) + b; the predicted label is 1 iff the
    score is positive.  Features that were constant in the training data keep
    weight 0 and scale 1.

    Arguments
    ---------
    weights : array-like
        One weight per feature.

    bias : float
        Intercept.

    means : array-like
        Training means per feature.

    scales : array-like
        Training standard deviations per feature (1 for constant features).

    layout_id : string
        Feature layout the model was trained on (optional).

    loss_history : array-like
        Training loss per gradient iteration (optional).
    """

    def __init__(self, weights, bias, means, scales, layout_id=None, loss_history=None):
        self.weights = np.asarray(weights, dtype=np.float64)
        self.bias = float(bias)
        self.means = np.asarray(means, dtype=np.float64)
        self.scales = np.asarray(scales, dtype=np.float64)
        self.layout_id = layout_id
        self.loss_history = np.asarray(loss_history if loss_history is not None else [], dtype=np.float64)

        if not (self.weights.shape == self.means.shape == self.scales.shape) or self.weights.ndim != 1:
            raise ValueError("weights, means and scales must be vectors of equal length.")
        if not np.all(np.isfinite(self.weights)) or not np.isfinite(self.bias):
            raise ValueError("Model parameters must be finite.")
        if np.any(self.scales <= 0.0):
            raise ValueError("Scales must be positive.")

    @property
    def number_of_features(self):
        return(self.weights.size)

    def standardize(self, features):
        features = np.asarray(features, dtype=np.float64)
        if features.shape[-1] != self.number_of_features:
            raise ValueError("Expected " + str(self.number_of_features) + " features, got " +
                             str(features.shape[-1]) + ".")
        return((features - self.means) / self.scales)

    def score(self, features):
        """Decision value of one feature vector (float) or of a matrix (array)."""
        if hasattr(features, "values") and hasattr(features, "layout_id"):
            features = features.values
        scores = self.standardize(features) @ self.weights + self.bias
        if np.ndim(scores) == 0:
            return(float(scores))
        return(scores)

    def predict(self, features):
        return((np.asarray(self.score(features)) > 0.0).astype(int))


def _logistic_loss(Z, targets, weights, bias, l2_lambda):
    margins = targets * (Z @ weights + bias)
    return(np.mean(np.logaddexp(0.0, -margins)) + 0.5 * l2_lambda * (weights @ weights))


def train_linear_model(features,
                       labels,
                       l2_lambda=1e-3,
                       number_of_epochs=500,
                       layout_id=None,
                       verbose=False):
    """
    Train an L2-regularized logistic regression by full-batch gradient descent.

    Features are z-scored with training statistics only; constant features
    are left out of the optimization and keep weight 0.  Each step size
    starts from twice the previous accepted step and is halved until the
    Armijo condition holds, so the training loss never increases.

    Arguments
    ---------
    features : array-like
        Matrix of shape (number_of_instances, number_of_features).

    labels : array-like
        Binary labels in {0, 1}; both classes must be present.

    l2_lambda : float
        Weight of the L2 penalty on the (standardized) weights.

    number_of_epochs : integer
        Maximum number of gradient iterations.

    layout_id : string
        Feature layout tag stored with the model.

    verbose : boolean
        Print progress to the screen.

    Returns
    -------
    LinearModel

    Example
    -------
    >>> model = train_linear_model(X_train, y_train)
    >>> scores = model.score(X_test)
    """

    X = np.asarray(features, dtype=np.float64)
    y = np.asarray(labels)

    if X.ndim != 2:
        raise ValueError("features must be a matrix.")
    if y.shape != (X.shape[0],):
        raise ValueError("labels must have one entry per instance.")
    if not np.all(np.isin(y, (0, 1))):
        raise ValueError("labels must be 0 or 1.")
    if np.unique(y).size < 2:
        raise ValueError("Training data must contain both classes.")

    constant = np.ptp(X, axis=0) == 0.0
    scaler = StandardScaler().fit(X)
    means = scaler.mean_
    scales = np.where(constant, 1.0, scaler.scale_)

    Z = ((X - means) / scales)[:, ~constant]
    targets = 2.0 * y - 1.0
    m = Z.shape[0]

    weights = np.zeros(Z.shape[1])
    bias = 0.0
    loss = _logistic_loss(Z, targets, weights, bias, l2_lambda)
    loss_history = [loss]

    step = 1.0
    for epoch in range(number_of_epochs):
        residual = -targets * expit(-targets * (Z @ weights + bias))
        gradient_weights = Z.T @ residual / m + l2_lambda * weights
        gradient_bias = residual.mean()
        squared_gradient_norm = gradient_weights @ gradient_weights + gradient_bias ** 2
        if squared_gradient_norm < 1e-20:
            break

        while True:
            candidate_weights = weights - step * gradient_weights
            candidate_bias = bias - step * gradient_bias
            candidate_loss = _logistic_loss(Z, targets, candidate_weights, candidate_bias, l2_lambda)
            if candidate_loss <= loss - 0.5 * step * squared_gradient_norm:
                break
            step *= 0.5
            if step < 1e-20:
                candidate_weights, candidate_bias, candidate_loss = weights, bias, loss
                break

        weights, bias, loss = candidate_weights, candidate_bias, candidate_loss
        loss_history.append(loss)
        step = min(2.0 * step, 1e3)

    if verbose == True:
        print("Linear model:  training loss " + "{:.6f}".format(loss) + " after " +
              str(len(loss_history) - 1) + " iterations.")

    full_weights = np.zeros(X.shape[1])
    full_weights[~constant] = weights

    return(LinearModel(full_weights, bias, means, scales, layout_id=layout_id, loss_history=loss_history))


def write_linear_model(model, file_name):
    """
    Write a model as a plain-text key = value file (layout, bias, weights,
    means, scales).
    """

    directory = os.path.dirname(file_name)
    if directory != "" and not os.path.exists(directory):
        os.makedirs(directory)

    def join(values):
        return(",".join(repr(float(v)) for v in values))

    with open(file_name, "w", encoding="utf-8") as f:
        f.write("layout = " + str(model.layout_id) + "\n")
        f.write("bias = " + repr(model.bias) + "\n")
        f.write("weights = " + join(model.weights) + "\n")
        f.write("means = " + join(model.means) + "\n")
        f.write("scales = " + join(model.scales) + "\n")


def read_linear_model(file_name):
    """Read a model written by write_linear_model."""

    entries = dict()
    with open(file_name, "r", encoding="utf-8") as f:
        for line_number, line in enumerate(f, start=1):
            line = line.strip()
            if line == "" or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(file_name + ":" + str(line_number) + ": expected 'key = value'.")
            key, value = line.split("=", 1)
            entries[key.strip()] = value.strip()

    for key in ("layout", "bias", "weights", "means", "scales"):
        if key not in entries:
            raise ValueError(file_name + ": missing key '" + key + "'.")

    def split(value):
        if value == "":
            return([])
        return([float(v) for v in value.split(",")])

    layout_id = None if entries["layout"] == "None" else entries["layout"]
    return(LinearModel(split(entries["weights"]), float(entries["bias"]),
                       split(entries["means"]), split(entries["scales"]), layout_id=layout_id))
