import json
import os

import numpy as np
import pytest

from alphabwm.model import Fpcs, parse_document

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture_path(name):
    return os.path.join(FIXTURE_DIR, name)


def load_fixture(name):
    with open(fixture_path(name)) as fh:
        return json.load(fh)


def random_fpcs(rng, n=3):
    """Random comparison system with the best-to-worst label dominating the
    rest, matching the elicitation semantics of the method."""
    names = tuple(f"c{k + 1}" for k in range(n))
    b, w = rng.choice(n, size=2, replace=False)
    bw = int(rng.integers(1, 10))
    bto = [str(int(rng.integers(1, bw + 1))) for _ in range(n)]
    otw = [str(int(rng.integers(1, bw + 1))) for _ in range(n)]
    bto[b] = "1"
    otw[w] = "1"
    bto[w] = str(bw)
    otw[b] = str(bw)
    return Fpcs(names, int(b), int(w), tuple(bto), tuple(otw))


@pytest.fixture
def example1():
    return parse_document(load_fixture("example1.json"))


@pytest.fixture
def example2():
    return parse_document(load_fixture("example2.json"))


@pytest.fixture
def supply_chain():
    return parse_document(load_fixture("supply_chain.json"))


@pytest.fixture
def all_ones():
    return parse_document(load_fixture("all_ones.json"))
