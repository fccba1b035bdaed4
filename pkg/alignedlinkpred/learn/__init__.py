from .linear_model import LinearModel, train_linear_model
from .linear_model import read_linear_model, write_linear_model

from .custom_metrics import auc, accuracy
from .kfold_split import kfold_split
