import itertools
import math
import warnings

import pytest

from repunit_resolution.semigroup import construct, repunit


def grid_params(bs=(2, 3), ns=(2, 3, 4, 5), as_=range(1, 9)):
    return [(b, n, a) for b in bs for n in ns for a in as_
            if math.gcd(a, repunit(b, n)) == 1]


GRID = grid_params()


def build(b, n, a):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return construct(b, n, a)


def member_by_enumeration(s, gens):
    """Exhaustive search over coefficient vectors bounded by s // g."""
    if s == 0:
        return True
    ranges = [range(s // g + 1) for g in gens[:-1]]
    for coeffs in itertools.product(*ranges):
        rest = s - sum(c * g for c, g in zip(coeffs, gens))
        if rest >= 0 and rest % gens[-1] == 0:
            return True
    return False


def reachable_upto(gens, limit):
    """Coin-problem table: reach[x] iff x is a sum of generators."""
    reach = [False] * (limit + 1)
    reach[0] = True
    for x in range(1, limit + 1):
        reach[x] = any(x >= g and reach[x - g] for g in gens)
    return reach


def apery_by_search(gens, m):
    """Least reachable value per residue, by scanning upwards."""
    limit = m * max(gens)
    reach = reachable_upto(gens, limit)
    out = [None] * m
    for x, ok in enumerate(reach):
        if ok and out[x % m] is None:
            out[x % m] = x
    return out


@pytest.fixture(params=GRID, ids=lambda p: "b{}n{}a{}".format(*p))
def grid_semigroup(request):
    return build(*request.param)


ACCEPTANCE_LINES: dict[str, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[key])
