import pytest

from weakhopf.braided import braided_group_build, decompose_braided_group
from weakhopf.builders import (FieldSpec, build_drinfeld_double, build_group_algebra,
                               build_groupoid_algebra, cyclic_group, discrete_groupoid,
                               indiscrete_groupoid, symmetric_group, trivial_group)
from weakhopf.wha import qt_verify

CYC3 = FieldSpec.cyclotomic(3)


class Case:
    """An algebra with its verified R-matrix, braided group and components (lazy)."""

    def __init__(self, name, builder):
        self.name = name
        self.H, self.R = builder()
        self._rm = self._bg = self._comps = None

    @property
    def rm(self):
        if self._rm is None:
            self._rm = qt_verify(self.H, self.R)
        return self._rm

    @property
    def BG(self):
        if self._bg is None:
            self._bg = braided_group_build(self.H, self.rm)
        return self._bg

    @property
    def comps(self):
        if self._comps is None:
            self._comps = decompose_braided_group(self.BG)
        return self._comps

    def __repr__(self):
        return self.name


BUILDERS = {
    "kS3": lambda: build_group_algebra(symmetric_group(3), CYC3),
    "pair2": lambda: build_groupoid_algebra(indiscrete_groupoid(2)),
    "disc2": lambda: build_groupoid_algebra(discrete_groupoid(2)),
    "DZ2": lambda: build_drinfeld_double(cyclic_group(2)),
    "kZ3": lambda: build_group_algebra(cyclic_group(3), CYC3),
    "trivial": lambda: build_group_algebra(trivial_group()),
    "DS3": lambda: build_drinfeld_double(symmetric_group(3), CYC3),
}

_CACHE = {}


def case(name):
    if name not in _CACHE:
        _CACHE[name] = Case(name, BUILDERS[name])
    return _CACHE[name]


SMALL = ["kS3", "pair2", "disc2", "DZ2"]


@pytest.fixture(params=SMALL)
def small(request):
    return case(request.param)


@pytest.fixture
def kS3():
    return case("kS3")


@pytest.fixture
def pair2():
    return case("pair2")


@pytest.fixture
def DS3():
    return case("DS3")


# -- one line per acceptance criterion in the terminal summary ----------------------------

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for n in getattr(report, "criteria", ()):
        prev = _CRITERIA.get(n, True)
        _CRITERIA[n] = prev and report.passed


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    rep.criteria = [m.args[0] for m in item.iter_markers("criterion")]


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    from test_acceptance import TITLES
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if _CRITERIA[n] else 'FAIL'}  {TITLES[n]}")
