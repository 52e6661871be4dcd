"""One test per acceptance criterion, each printing its pass/fail line."""

import pytest

from exppell.acceptance import CRITERIA
from exppell.config import Config

CONFIG = Config()


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda c: c.__name__.removeprefix("criterion_"))
def test_criterion(criterion, capsys):
    result = criterion(CONFIG)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.detail
