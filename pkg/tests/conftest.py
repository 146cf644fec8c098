import time

import pytest

from weilgram.corpus import (
    builtin_covers,
    builtin_curves,
    evaluate_curve_record,
    evaluate_diagram_record,
    seeded_diagrams,
)

CORPUS_BUDGET = 10**7


@pytest.fixture(scope="session")
def corpus_curves():
    return builtin_curves()


@pytest.fixture(scope="session")
def corpus_covers():
    return builtin_covers()


@pytest.fixture(scope="session")
def corpus_evaluation(corpus_curves):
    """Evaluate the whole curated corpus once; records plus wall time."""
    start = time.time()
    records = [evaluate_curve_record(c, budget=CORPUS_BUDGET) for c in corpus_curves]
    elapsed = time.time() - start
    return {"records": records, "elapsed": elapsed}


@pytest.fixture(scope="session")
def diagram_batch():
    return seeded_diagrams(seed=42, per_field=7, fields=((3, 1), (5, 1), (7, 1)))


@pytest.fixture(scope="session")
def diagram_evaluation(diagram_batch):
    return [evaluate_diagram_record(d, budget=CORPUS_BUDGET) for d in diagram_batch]
