import random
from fractions import Fraction
from typing import Callable, Iterator

from hypothesis import strategies as st

from minusone.battery import random_params
from minusone.errors import MinusOneError
from minusone.seqs import build_lattice

small_ints = st.integers(min_value=-40, max_value=40)
rationals = st.builds(Fraction, small_ints, st.integers(min_value=1, max_value=30))
nonzero_rationals = rationals.filter(lambda q: q != 0)


def draws(seed: int, count: int, make: Callable[[random.Random], object]) -> Iterator:
    """``count`` non-degenerate subjects; draws raising MinusOneError are skipped."""
    rng = random.Random(seed)
    got = tries = 0
    while got < count:
        tries += 1
        assert tries < 100 * count, "too many degenerate draws"
        try:
            subject = make(rng)
        except MinusOneError:
            continue
        got += 1
        yield subject


def param_draws(seed: int, count: int, **fixed):
    return draws(seed, count, lambda rng: random_params(rng, **fixed))


def lattice_draws(seed: int, count: int, N: int, **fixed):
    """(params, sequences to order N) pairs without eigenvalue collisions."""

    def make(rng):
        p = random_params(rng, **fixed)
        return p, build_lattice(p, N)

    return draws(seed, count, make)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
