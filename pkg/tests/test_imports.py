import importlib
import sys

import pytest

MODULES = [
    "wittkit",
    "wittkit.errors",
    "wittkit.config",
    "wittkit.exactring",
    "wittkit.wittvec",
    "wittkit.wittrat",
    "wittkit.grouplambda",
    "wittkit.dualtop",
    "wittkit.kummercoh",
    "wittkit.textio",
    "wittkit.schemas",
    "wittkit.instructions",
    "wittkit.verify",
    "wittkit.cli",
]


@pytest.fixture
def fresh_wittkit():
    saved = {name: mod for name, mod in sys.modules.items() if name == "wittkit" or name.startswith("wittkit.")}
    for name in saved:
        del sys.modules[name]
    yield
    for name in [n for n in sys.modules if n == "wittkit" or n.startswith("wittkit.")]:
        del sys.modules[name]
    sys.modules.update(saved)


@pytest.mark.parametrize("name", MODULES)
def test_module_imports_first(name, fresh_wittkit):
    assert importlib.import_module(name).__name__ == name
