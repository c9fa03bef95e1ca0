import pathlib

import pytest

GOLDEN_DIR = pathlib.Path(__file__).resolve().parent / "golden"


def pytest_addoption(parser):
    parser.addoption(
        "--regen-golden", action="store_true", default=False,
        help="rewrite the golden CLI transcripts instead of comparing")


@pytest.fixture
def golden(request):
    regen = request.config.getoption("--regen-golden")

    def compare(name, text):
        path = GOLDEN_DIR / name
        if regen:
            GOLDEN_DIR.mkdir(exist_ok=True)
            path.write_text(text)
            return
        assert path.exists(), f"missing golden transcript {name}; " \
                              f"run pytest --regen-golden"
        assert text == path.read_text(), f"output differs from golden/{name}"

    return compare
