import configparser

from dataclasses import dataclass, field, fields

from ..networks import GeneratorParams
from ..methods import MethodId

DEFAULT_RATIOS = (0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7)


@dataclass
class ExperimentSpec:
    """
    Everything a generate/run/sweep invocation needs.

    Arguments
    ---------
    data_directory : string
        Directory written by ``write_experiment_data``; when None the aligned
        pair is generated from ``generator``.

    generator : GeneratorParams
        Synthetic data parameters.

    methods : tuple of MethodId
        Methods to evaluate.

    ratios : tuple of floats
        Remaining information ratios of the new users.

    seeds : tuple of integers
        One partition, withholding, sampling and fold assignment per seed.

    theta, rho : float
        Personalized sampling parameters.

    new_fraction : float
        Fraction of target users treated as new.

    number_of_folds : integer
        Cross-validation folds over new-user instances.

    l2_lambda : float
        L2 penalty of the linear model.

    number_of_epochs : integer
        Gradient iterations of the linear model.

    number_of_users : integer
        If given, the experiment runs on an anchored subset of this many
        users of each network (see ``sample_aligned_subnetworks``).

    subset_seed : integer
        Seed of the subset breadth-first search.

    reverse : boolean
        Swap the roles of target and source network.

    number_of_jobs : integer
        Worker processes of the sweep.

    output_directory : string
        Where results and generated data are written.

    sampling_diagnostics_directory : string
        If given, personalized sampling vectors are dumped there.
    """

    data_directory: str = None
    generator: GeneratorParams = field(default_factory=GeneratorParams)
    number_of_users: int = None
    subset_seed: int = 0
    methods: tuple = tuple(MethodId)
    ratios: tuple = DEFAULT_RATIOS
    seeds: tuple = (0,)
    theta: float = 0.1
    rho: float = 0.5
    new_fraction: float = 0.2
    number_of_folds: int = 5
    l2_lambda: float = 1e-3
    number_of_epochs: int = 500
    reverse: bool = False
    number_of_jobs: int = 1
    output_directory: str = "results"
    sampling_diagnostics_directory: str = None

    def validate(self):
        self.methods = tuple(m if isinstance(m, MethodId) else MethodId.parse(m) for m in self.methods)
        self.ratios = tuple(float(r) for r in self.ratios)
        self.seeds = tuple(int(s) for s in self.seeds)

        if len(self.methods) == 0:
            raise ValueError("At least one method is required.")
        if len(self.ratios) == 0:
            raise ValueError("At least one ratio is required.")
        if len(self.seeds) == 0:
            raise ValueError("At least one seed is required.")
        for ratio in self.ratios:
            if not (0.0 <= ratio <= 1.0):
                raise ValueError("Ratios must lie in [0, 1].")
        if not (0.0 < self.rho <= 1.0):
            raise ValueError("rho must lie in (0, 1].")
        if self.theta < 0.0:
            raise ValueError("theta must be non-negative.")
        if not (0.0 < self.new_fraction < 1.0):
            raise ValueError("new_fraction must lie in (0, 1).")
        if self.number_of_folds < 2:
            raise ValueError("number_of_folds must be at least 2.")
        if self.number_of_jobs == 0:
            raise ValueError("number_of_jobs must be nonzero.")
        if self.number_of_users is not None:
            self.number_of_users = int(self.number_of_users)
            if self.number_of_users < 1:
                raise ValueError("number_of_users must be at least 1.")
        self.generator.validate()
        return(self)


def _split(value):
    return([item.strip() for item in value.replace(";", ",").split(",") if item.strip() != ""])


def _parse_bool(value):
    if isinstance(value, bool):
        return(value)
    lowered = str(value).strip().lower()
    if lowered in ("1", "yes", "true", "on"):
        return(True)
    if lowered in ("0", "no", "false", "off"):
        return(False)
    raise ValueError("Not a boolean: " + str(value) + ".")


# [experiment] key -> (ExperimentSpec field, parser)
_EXPERIMENT_KEYS = {"methods": ("methods", lambda v: tuple(MethodId.parse(m) for m in _split(v))),
                    "ratios": ("ratios", lambda v: tuple(float(r) for r in _split(v))),
                    "seeds": ("seeds", lambda v: tuple(int(s) for s in _split(v))),
                    "theta": ("theta", float),
                    "rho": ("rho", float),
                    "new_fraction": ("new_fraction", float),
                    "folds": ("number_of_folds", int),
                    "l2_lambda": ("l2_lambda", float),
                    "epochs": ("number_of_epochs", int),
                    "jobs": ("number_of_jobs", int),
                    "output": ("output_directory", str),
                    "dump_sampling": ("sampling_diagnostics_directory", str)}


def read_experiment_spec(config_file_name=None,
                         overrides=None):
    """
    Build an ExperimentSpec from an INI file and explicit overrides.

    Sections: ``[data]`` (directory, reverse, number_of_users, subset_seed),
    ``[generator]`` (any GeneratorParams field) and ``[experiment]``
    (methods, ratios, seeds, theta, rho, new_fraction, folds, l2_lambda,
    epochs, jobs, output, dump_sampling).  Lists are comma separated.
    Overrides are ExperimentSpec field names (or ``random_seed`` for the
    generator) and win over the file; None values are ignored.

    Arguments
    ---------
    config_file_name : string
        Path of the INI file (optional).

    overrides : dict
        Field values taking precedence over the file.

    Returns
    -------
    Validated ExperimentSpec.

    Example
    -------
    >>> spec = read_experiment_spec("sweep.ini", {"seeds": (0, 1, 2)})
    """

    spec = ExperimentSpec()
    generator_values = dict()

    if config_file_name is not None:
        parser = configparser.ConfigParser()
        with open(config_file_name, "r", encoding="utf-8") as f:
            parser.read_file(f)

        unknown = set(parser.sections()) - {"data", "generator", "experiment"}
        if len(unknown) > 0:
            raise ValueError("Unknown configuration sections: " + ", ".join(sorted(unknown)) + ".")

        if parser.has_section("data"):
            for key, value in parser.items("data"):
                if key == "directory":
                    spec.data_directory = value
                elif key == "reverse":
                    spec.reverse = _parse_bool(value)
                elif key == "number_of_users":
                    spec.number_of_users = int(value)
                elif key == "subset_seed":
                    spec.subset_seed = int(value)
                else:
                    raise ValueError("Unknown key '" + key + "' in section [data].")

        if parser.has_section("generator"):
            types = {f.name: f.type for f in fields(GeneratorParams)}
            for key, value in parser.items("generator"):
                if key not in types:
                    raise ValueError("Unknown key '" + key + "' in section [generator].")
                generator_values[key] = int(value) if types[key] in (int, "int") else float(value)

        if parser.has_section("experiment"):
            for key, value in parser.items("experiment"):
                if key not in _EXPERIMENT_KEYS:
                    raise ValueError("Unknown key '" + key + "' in section [experiment].")
                name, parse = _EXPERIMENT_KEYS[key]
                setattr(spec, name, parse(value))

    if overrides is not None:
        for name, value in overrides.items():
            if value is None:
                continue
            if name == "random_seed":
                generator_values["random_seed"] = int(value)
            elif name in {f.name for f in fields(ExperimentSpec)}:
                setattr(spec, name, value)
            else:
                raise ValueError("Unknown override " + name + ".")

    spec.generator = GeneratorParams(**generator_values)
    return(spec.validate())
