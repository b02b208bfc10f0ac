import pytest

from ncgar.coxeter import parse_descriptor
from ncgar.lattice import build_nc
from ncgar.monoid import DualMonoid

_systems = {}
_lattices = {}
_monoids = {}


@pytest.fixture(scope="session")
def system():
    def get(desc):
        if desc not in _systems:
            _systems[desc] = parse_descriptor(desc)
        return _systems[desc]
    return get


@pytest.fixture(scope="session")
def lattice(system):
    def get(desc):
        if desc not in _lattices:
            _lattices[desc] = build_nc(system(desc))
        return _lattices[desc]
    return get


@pytest.fixture(scope="session")
def monoid(lattice):
    def get(desc):
        if desc not in _monoids:
            _monoids[desc] = DualMonoid(lattice(desc))
        return _monoids[desc]
    return get
