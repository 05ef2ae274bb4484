import random

import pytest
from hypothesis import settings

from dehnscope.corpus import corpus

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def rng():
    return random.Random(20261014)


@pytest.fixture(scope="session")
def graphs():
    return corpus()


def pytest_terminal_summary(terminalreporter):
    import support

    if not support.ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(support.ACCEPTANCE):
        title, ok, seconds, detail = support.ACCEPTANCE[num]
        status = "PASS" if ok else "FAIL"
        line = f"criterion {num:2d}: {status}  {title}  ({seconds:.2f} s)"
        if detail:
            line += f"  {detail}"
        terminalreporter.write_line(line)
