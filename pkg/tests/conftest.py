import pytest

from gkeval import builtin_paper_datasets
from gkeval.records import dump_shootouts_csv, dump_shootouts_json


@pytest.fixture(scope="session")
def datasets():
    return builtin_paper_datasets()


@pytest.fixture(scope="session")
def shootout(datasets):
    def get(name):
        return datasets[name].shootout

    return get


def _write(tmp_path, datasets, names, fmt, filename):
    records = [datasets[n].shootout for n in names]
    text = dump_shootouts_json(records) if fmt == "json" else dump_shootouts_csv(records)
    path = tmp_path / filename
    path.write_text(text, encoding="utf-8")
    return path


@pytest.fixture
def wc2006_csv(tmp_path, datasets):
    return _write(tmp_path, datasets, ["wc2006-lehmann", "wc2006-franco"], "csv", "wc2006.csv")


@pytest.fixture
def euro2020_json(tmp_path, datasets):
    return _write(tmp_path, datasets, ["euro2020-donnarumma", "euro2020-pickford"], "json", "euro2020.json")


@pytest.fixture
def copa2024_csv(tmp_path, datasets):
    return _write(tmp_path, datasets, ["copa2024-romero", "copa2024-crepeau"], "csv", "copa2024.csv")


@pytest.fixture
def example1_csv(tmp_path, datasets):
    return _write(tmp_path, datasets, ["example1-m1", "example1-m2"], "csv", "example1.csv")


_criteria = []


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    props = dict(report.user_properties)
    if "criterion" in props:
        _criteria.append((props["criterion"], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome in sorted(_criteria, key=lambda c: int(c[0].split(".")[0])):
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {label}")
