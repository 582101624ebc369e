import importlib


def test_package_exposes_version():
    module = importlib.import_module("binomsum")
    assert module.__version__ == "0.1.0"
