import pytest

from algodetect.corpus import load_corpus
from algodetect.resources import minicorpus_jsonl, minicorpus_truth
from algodetect.truth import load_ground_truth


@pytest.fixture(scope="session")
def mini_corpus():
    return load_corpus(minicorpus_jsonl())


@pytest.fixture(scope="session")
def mini_truth(mini_corpus):
    return load_ground_truth(minicorpus_truth(), corpus=mini_corpus)


@pytest.fixture(scope="session")
def corpus_by_id(mini_corpus):
    return {record.method_id: record for record in mini_corpus}
