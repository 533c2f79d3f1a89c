import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from seprkit import all_principal_minors, paper_matrix


@pytest.fixture(scope="session")
def builtin_matrix():
    return paper_matrix()


@pytest.fixture(scope="session")
def builtin_minors(builtin_matrix):
    return all_principal_minors(builtin_matrix)
