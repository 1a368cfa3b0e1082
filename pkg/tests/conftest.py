import sys
from fractions import Fraction
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

small_rationals = st.builds(
    Fraction, st.integers(-5, 5), st.integers(1, 4)
)
nonzero_rationals = small_rationals.filter(bool)


def coeff_lists(min_order=0, max_order=8, elements=small_rationals):
    return st.integers(min_order, max_order).flatmap(
        lambda n: st.lists(elements, min_size=n + 1, max_size=n + 1)
    )


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if not mod or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok in mod.RESULTS.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {name}")
