# ABOUTME: Base profile classifier registrations
# ABOUTME: Registers the four built-in classifiers in their canonical order

from typing import Callable

from maneuverml.classifiers.gbdt import GbdtClassifier
from maneuverml.classifiers.interfaces import Classifier
from maneuverml.classifiers.knn import KnnClassifier
from maneuverml.classifiers.lda import LdaClassifier
from maneuverml.classifiers.logreg import LogRegClassifier
from maneuverml.plugins.registry import hookimpl


@hookimpl
def register_classifier(register: Callable[[Classifier], None]) -> None:
    register(LogRegClassifier())
    register(KnnClassifier())
    register(LdaClassifier())
    register(GbdtClassifier())
