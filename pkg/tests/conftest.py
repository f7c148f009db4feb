import os

import pytest


def pytest_collection_modifyitems(config, items):
    if os.environ.get("QSWITCH_SLOW") == "1":
        return
    skip = pytest.mark.skip(reason="long-running; set QSWITCH_SLOW=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
