import pytest

_acceptance: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    _acceptance[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance, key=lambda s: int(s.split("_")[1]) if s.split("_")[1].isdigit() else 99):
        terminalreporter.write_line(f"{_acceptance[name]} {name}")


@pytest.fixture(scope="session")
def mpgs7():
    from rgbtiling.harness import mpg_corpus

    return mpg_corpus(7)


@pytest.fixture(scope="session")
def cuts7(mpgs7):
    from rgbtiling.harness import cut_corpus

    return cut_corpus(7, mpgs=mpgs7)


@pytest.fixture(scope="session")
def annuli():
    from rgbtiling.harness import annulus_corpus

    return annulus_corpus(insert=False)
