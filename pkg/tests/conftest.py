"""Collect per-criterion outcomes from tests marked ``acceptance(n, title)``
and print one PASS/FAIL line per criterion at the end of the run."""

_titles = {}
_criterion_of = {}
_failed = {}
_ran = set()


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("acceptance")
        if m is not None:
            n, title = m.args
            _titles[n] = title
            _criterion_of[item.nodeid] = n
            _failed.setdefault(n, [])


def pytest_runtest_logreport(report):
    n = _criterion_of.get(report.nodeid)
    if n is None:
        return
    if report.when == "call":
        _ran.add(n)
    if report.failed:
        _failed[n].append(report.nodeid.split("::")[-1])


def pytest_terminal_summary(terminalreporter):
    if not _ran:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_titles):
        if n not in _ran:
            continue
        bad = _failed[n]
        line = f"AC{n} {'FAIL' if bad else 'PASS'}  {_titles[n]}"
        if bad:
            line += f"  (failed: {', '.join(bad)})"
        tr.write_line(line)
