import pytest

from critical_popular_matching.formats import parse_instance
from critical_popular_matching.models import Matching


I1_TEXT = """\
men m1
women w1
critical m1
pref m1: w1
pref w1: m1
"""

I2_TEXT = """\
men a1 a2
women b1 b2
pref a1: b1 b2
pref a2: b1
pref b1: a1 a2
pref b2: a1
"""

I3_TEXT = """\
men m1 m2
women w1
critical m2
pref m1: w1
pref m2: w1
pref w1: m1 m2
"""

# Two disjoint copies of I2
I4_TEXT = """\
men a1 a2 a3 a4
women b1 b2 b3 b4
pref a1: b1 b2
pref a2: b1
pref a3: b3 b4
pref a4: b3
pref b1: a1 a2
pref b2: a1
pref b3: a3 a4
pref b4: a3
"""

CROSSED_TEXT = """\
men m1 m2
women w1 w2
pref m1: w1 w2
pref m2: w2 w1
pref w1: m2 m1
pref w2: m1 m2
"""

# w3 stays single in every stable matching; m2 has no neighbor
LONELY_TEXT = """\
men m1 m2 m3
women w1 w2 w3
pref m1: w2 w3 w1
pref m3: w1 w2
pref w1: m1 m3
pref w2: m3 m1
pref w3: m1
"""

# Identical master lists on both sides
ALIGNED_TEXT = """\
men m0 n0
women w0 x0
pref m0: w0 x0
pref n0: w0 x0
pref w0: m0 n0
pref x0: m0 n0
"""


@pytest.fixture
def i1():
    return parse_instance(I1_TEXT)


@pytest.fixture
def i2():
    return parse_instance(I2_TEXT)


@pytest.fixture
def i3():
    return parse_instance(I3_TEXT)


@pytest.fixture
def i4():
    return parse_instance(I4_TEXT)


@pytest.fixture
def crossed():
    return parse_instance(CROSSED_TEXT)


@pytest.fixture
def aligned():
    return parse_instance(ALIGNED_TEXT)


@pytest.fixture
def lonely():
    return parse_instance(LONELY_TEXT)


@pytest.fixture
def i4_middle():
    """A popular feasible matching of I4 that is neither of minimum size nor dominant"""
    return Matching([("a1", "b1"), ("a3", "b4"), ("a4", "b3")])


@pytest.fixture
def instance_file(tmp_path):
    def write(text, name="instance.txt"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write
