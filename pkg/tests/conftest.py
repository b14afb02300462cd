import pytest

from voicegroup.modring import Modulus
from voicegroup.extension import enumerate_extension
from voicegroup.voicing import enumerate_J
from voicegroup.triadic import hook_elements


@pytest.fixture(scope="session")
def m12():
    return Modulus(12)


@pytest.fixture(scope="session")
def j12():
    return enumerate_J(12)


@pytest.fixture(scope="session")
def ext12():
    return enumerate_extension(12)


@pytest.fixture(scope="session")
def hooks():
    return hook_elements()
