from .link_instances import LinkInstance, LinkInstances, GROUPS
from .link_instances import build_link_instances

from .run_method import MethodId, MethodConfig
from .run_method import evaluate_method, run_method
