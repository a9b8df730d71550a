import pytest

from isire.corpus import SampleSet

WORKED = ["aabcde", "acdcfe", "dbbcfe", "adbcef"]


@pytest.fixture
def worked():
    return SampleSet.from_chars(WORKED)
