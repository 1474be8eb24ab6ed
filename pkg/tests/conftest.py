import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    # the acceptance module records one verdict per headline check; echo them
    # where capture cannot swallow them
    mod = sys.modules.get("tests.test_acceptance") or sys.modules.get("test_acceptance")
    lines = getattr(mod, "VERDICTS", None) if mod else None
    if lines:
        terminalreporter.section("acceptance checklist")
        for line in lines:
            terminalreporter.write_line(line)
