from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for `oracle`

from girthlab import corpus


@pytest.fixture(scope="session")
def cubic14():
    """The bundled census of connected cubic graphs on <= 14 vertices."""
    return list(corpus.iter_corpus(corpus.CUBIC_LE14))


@pytest.fixture(scope="session")
def extension():
    return list(corpus.iter_corpus(corpus.GIRTHREG_EXT))


@pytest.fixture(scope="session")
def whole_corpus(cubic14, extension):
    return cubic14 + extension
