from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from freealg.core import NcPoly
from freealg.series import GroupAlgElem, group_reduce
from freealg.words import is_primitive

settings.register_profile(
    "exact",
    max_examples=200,
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")

rationals = st.fractions(min_value=-9, max_value=9, max_denominator=6)
nonzero_rationals = rationals.filter(bool)


def words(alphabet="xy", min_size=0, max_size=6):
    return st.text(alphabet=alphabet, min_size=min_size, max_size=max_size)


primitive_words = words(min_size=1, max_size=7).filter(is_primitive)


def polys(alphabet="xy", max_terms=4, max_len=4):
    return st.dictionaries(words(alphabet, max_size=max_len), nonzero_rationals, max_size=max_terms).map(NcPoly)


nonzero_polys = polys().filter(bool)

group_words = words("xyXY", max_size=8).map(group_reduce)


def group_elems(max_terms=3):
    return st.dictionaries(group_words, nonzero_rationals, max_size=max_terms).map(GroupAlgElem)


def frac(s: str) -> Fraction:
    return Fraction(s)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
