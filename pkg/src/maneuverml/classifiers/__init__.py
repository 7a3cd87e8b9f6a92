# ABOUTME: Classifier package: the four learners, the decision rule and model documents
# ABOUTME: Built-in classifiers are registered as plugins by the base profile

from .decision import (
    DecisionConfig,
    predict_label,
    predict_labels,
    predict_score,
    predict_scores,
    sigmoid,
    sigmoid_array,
)
from .gbdt import GbdtClassifier, GbdtModel, GbdtParams, RegressionTree, gbdt_fit
from .interfaces import Classifier, ModelDocument, TrainedModel
from .knn import KnnClassifier, KnnModel, KnnParams, euclidean, knn_fit, manhattan
from .lda import LdaClassifier, LdaModel, LdaParams, fisher_direction, lda_fit
from .logreg import LogRegClassifier, LogRegModel, LogRegParams, logreg_fit
from .serialization import (
    dump_model,
    load_model,
    parse_model,
    parse_model_document,
    read_model,
    read_model_document,
    save_model,
    write_model,
)
from .training import ScaledModel, fit_classifier, training_curve

__all__ = [
    "Classifier",
    "DecisionConfig",
    "GbdtClassifier",
    "GbdtModel",
    "GbdtParams",
    "KnnClassifier",
    "KnnModel",
    "KnnParams",
    "LdaClassifier",
    "LdaModel",
    "LdaParams",
    "LogRegClassifier",
    "LogRegModel",
    "LogRegParams",
    "ModelDocument",
    "RegressionTree",
    "ScaledModel",
    "TrainedModel",
    "dump_model",
    "euclidean",
    "fisher_direction",
    "fit_classifier",
    "gbdt_fit",
    "knn_fit",
    "lda_fit",
    "load_model",
    "logreg_fit",
    "manhattan",
    "parse_model",
    "parse_model_document",
    "predict_label",
    "predict_labels",
    "predict_score",
    "predict_scores",
    "read_model",
    "read_model_document",
    "save_model",
    "sigmoid",
    "sigmoid_array",
    "training_curve",
    "write_model",
]
