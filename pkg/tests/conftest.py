import os

from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=60)
settings.register_profile("thorough", deadline=None, max_examples=500)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def pytest_terminal_summary(terminalreporter):
    import gate

    if not gate.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, status, title, detail in sorted(gate.RESULTS):
        terminalreporter.write_line(f"criterion {number}: {status}  {title}  {detail}")
