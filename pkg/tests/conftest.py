import pytest

_results: dict[int, list[bool]] = {}
_titles: dict[int, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion this test belongs to")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when != "call":
        return
    number, title = mark.args
    _titles[number] = title
    _results.setdefault(number, []).append(call.excinfo is None)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        oks = _results[number]
        status = "PASS" if all(oks) else "FAIL"
        detail = f" ({sum(oks)}/{len(oks)} checks)" if len(oks) > 1 else ""
        terminalreporter.write_line(f"criterion {number}: {status}  {_titles[number]}{detail}")


@pytest.fixture(scope="session")
def corpus_graphs():
    from corpus import corpus

    return corpus()
