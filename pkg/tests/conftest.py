import itertools

import pytest
from hypothesis import HealthCheck, settings

from qlfd import Quiver, lfd_verdict, quiver_from_json, tits_form
from qlfd.config import Config

settings.register_profile(
    "ci", max_examples=40, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("ci")


# -- standard quivers ---------------------------------------------------------


def a2():
    return Quiver(("1", "2"), (("1", "2"),))


def a3(orientation=(1, 1)):
    """Path on 1-2-3; orientation bit 1 means the arrow points right."""
    arrows = []
    for i, bit in enumerate(orientation):
        u, v = str(i + 1), str(i + 2)
        arrows.append((u, v) if bit else (v, u))
    return Quiver(("1", "2", "3"), tuple(arrows))


def d4_in():
    return Quiver(("1", "2", "3", "4"), (("1", "4"), ("2", "4"), ("3", "4")))


def d4_out():
    return Quiver(("1", "2", "3", "4"), (("4", "1"), ("4", "2"), ("4", "3")))


def kronecker():
    return Quiver(("1", "2"), (("1", "2"), ("1", "2")))


def cycle(n, oriented=True):
    vs = tuple(str(i + 1) for i in range(n))
    arrows = []
    for i in range(n):
        u, v = vs[i], vs[(i + 1) % n]
        arrows.append((u, v) if oriented or i % 2 == 0 else (v, u))
    return Quiver(vs, tuple(arrows))


E7_JSON = {
    "vertices": ["1", "2", "3", "4", "5", "6", "7", "8"],
    "arrows": [["1", "2"], ["2", "3"], ["3", "4"], ["5", "4"],
               ["6", "5"], ["7", "6"], ["8", "4"]],
    "dim": {"1": 1, "2": 2, "3": 2, "4": 3, "5": 2, "6": 2, "7": 1, "8": 1},
}

E8_JSON = {
    "vertices": ["1", "2", "3", "4", "5", "6", "7", "8", "9"],
    "arrows": [["1", "2"], ["2", "3"], ["9", "3"], ["4", "3"],
               ["5", "4"], ["6", "5"], ["7", "6"], ["8", "7"]],
    "dim": {"1": 2, "2": 3, "3": 5, "4": 4, "5": 4, "6": 3, "7": 2,
            "8": 1, "9": 2},
}


@pytest.fixture(scope="session")
def e7_pair():
    return quiver_from_json(E7_JSON)


@pytest.fixture(scope="session")
def e8_pair():
    return quiver_from_json(E8_JSON)


@pytest.fixture(scope="session")
def config():
    return Config()


# -- corpora ------------------------------------------------------------------


def all_orientations(vertices, edges):
    """Every orientation of an undirected edge list, as quivers."""
    out = []
    for bits in itertools.product((0, 1), repeat=len(edges)):
        arrows = tuple((u, v) if b else (v, u)
                       for (u, v), b in zip(edges, bits))
        out.append(Quiver(tuple(vertices), arrows))
    return out


DYNKIN_SHAPES = {
    "A1": (("1",), ()),
    "A2": (("1", "2"), (("1", "2"),)),
    "A3": (("1", "2", "3"), (("1", "2"), ("2", "3"))),
    "A4": (("1", "2", "3", "4"), (("1", "2"), ("2", "3"), ("3", "4"))),
    "A5": (("1", "2", "3", "4", "5"),
           (("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"))),
    "D4": (("1", "2", "3", "4"), (("1", "4"), ("2", "4"), ("3", "4"))),
    "D5": (("1", "2", "3", "4", "5"),
           (("1", "3"), ("2", "3"), ("3", "4"), ("4", "5"))),
}


def random_tree_quiver(rng, n):
    """Random labelled tree on n vertices with random arrow directions."""
    vs = tuple(str(i + 1) for i in range(n))
    arrows = []
    for i in range(1, n):
        j = rng.randrange(i)
        if rng.random() < 0.5:
            arrows.append((vs[i], vs[j]))
        else:
            arrows.append((vs[j], vs[i]))
    return Quiver(vs, tuple(arrows))


def small_lfd_corpus(config):
    """Verified linear-free pairs on at most 5 vertices."""
    pairs = [
        (a2(), (1, 1)),
        (a3((1, 1)), (1, 1, 1)),
        (a3((1, 0)), (1, 1, 1)),
        (a3((0, 1)), (1, 1, 1)),
        (a3((0, 0)), (1, 1, 1)),
        (d4_in(), (1, 1, 1, 2)),
        (d4_out(), (1, 1, 1, 2)),
        (Quiver(("1", "2", "3", "4"),
                (("1", "2"), ("2", "3"), ("3", "4"))), (1, 1, 1, 1)),
        (Quiver(("1", "2", "3", "4", "5"),
                (("1", "3"), ("2", "3"), ("3", "4"), ("4", "5"))),
         (1, 1, 2, 1, 1)),
    ]
    out = []
    for q, d in pairs:
        if tits_form(q, d) != 1:
            continue
        if lfd_verdict(q, d, config).verdict == "linear_free":
            out.append((q, d))
    return out
