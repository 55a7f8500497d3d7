import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from wittlab import chartab, presentations as pres

REPO = os.path.join(os.path.dirname(__file__), "..")
CORPUS = os.path.join(REPO, "corpus")


def group_from_source(text, max_cosets=65536):
    return pres.realize(pres.parse_group_file(text), max_cosets=max_cosets)


@pytest.fixture(scope="session")
def corpus_dir():
    return CORPUS


@pytest.fixture(scope="session")
def corpus_groups(corpus_dir):
    """All bundled groups, keyed by file name."""
    out = {}
    for fname in sorted(os.listdir(corpus_dir)):
        if not fname.endswith(".grp"):
            continue
        with open(os.path.join(corpus_dir, fname), encoding="utf-8") as fh:
            parsed = pres.parse_group_file(fh.read(), filename=fname)
        out[fname[: -len(".grp")]] = pres.realize(parsed)
    return out


@pytest.fixture(scope="session")
def tables(corpus_groups):
    """Memoised character tables for corpus groups."""
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = chartab.burnside_dixon(corpus_groups[name])
        return cache[name]

    return get


@pytest.fixture(scope="session")
def ik_pair():
    from wittlab import deform

    return deform.izumi_kosaki()
