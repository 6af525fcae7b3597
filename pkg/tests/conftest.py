import random

import pytest
from hypothesis import settings

from assocform.poly_core import parse_form

settings.register_profile("assocform", max_examples=50, deadline=None, derandomize=True)
settings.load_profile("assocform")


@pytest.fixture
def rng():
    return random.Random(20261015)


def P(text, n=2):
    return parse_form(text, n)
