import io
import os

import pytest

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "golden")


@pytest.fixture
def run_cli():
    from ambigraph.cli import dispatch

    def _run(*argv):
        out = io.StringIO()
        code = dispatch(list(argv), out=out)
        return code, out.getvalue()

    return _run


@pytest.fixture
def golden():
    def _golden(name, actual):
        path = os.path.join(GOLDEN_DIR, name)
        if os.environ.get("AMBIGRAPH_REGEN_GOLDEN"):
            os.makedirs(GOLDEN_DIR, exist_ok=True)
            with open(path, "w") as fh:
                fh.write(actual)
        with open(path) as fh:
            assert actual == fh.read()

    return _golden
