from fractions import Fraction

import hypothesis.strategies as st
from hypothesis import HealthCheck, settings

from kernexp.kernel import Kernel
from kernexp.numeric import INF, ExtRat
from kernexp.space import Web

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

# lines collected by the acceptance tests, printed after the run
ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


fractions = st.builds(Fraction, st.integers(0, 24), st.integers(1, 12))
ext_rats = st.one_of(fractions.map(ExtRat), st.just(INF), st.just(ExtRat(0)))


def webs(max_atoms=3, min_atoms=0, prefix="a"):
    return st.integers(min_atoms, max_atoms).map(lambda n: Web(tuple(f"{prefix}{i}" for i in range(n))))


def kernels_between(dom, cod, values=fractions):
    cells = [(x, y) for x in dom for y in cod]
    return st.lists(values, min_size=len(cells), max_size=len(cells)).map(
        lambda vs: Kernel(dom, cod, list(zip(cells, vs)))
    )


@st.composite
def kernels(draw, max_atoms=3, values=fractions):
    dom = draw(webs(max_atoms, prefix="x"))
    cod = draw(webs(max_atoms, prefix="y"))
    return draw(kernels_between(dom, cod, values))


@st.composite
def chains(draw, length=3, max_atoms=3):
    """Composable kernels ``k1 : W0 ~> W1, k2 : W1 ~> W2, ...``."""
    ws = [draw(webs(max_atoms, prefix=f"w{i}_")) for i in range(length + 1)]
    return [draw(kernels_between(ws[i], ws[i + 1])) for i in range(length)]
