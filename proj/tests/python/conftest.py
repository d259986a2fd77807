import json
import os
import pathlib
import shutil
import subprocess

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]
GOLDEN = ROOT / "tests" / "golden"
SCHEMAS = ROOT / "schemas"


def _find_cli():
    env = os.environ.get("JACOBIQ_CLI")
    if env:
        return env
    local = ROOT / "build" / "jacobiq-cli"
    if local.exists():
        return str(local)
    return shutil.which("jacobiq-cli")


@pytest.fixture(scope="session")
def cli():
    path = _find_cli()
    if not path:
        pytest.skip("jacobiq-cli not built")

    def call(*args):
        p = subprocess.run([path, *map(str, args)], capture_output=True, text=True, check=False)
        return p.returncode, p.stdout

    return call


@pytest.fixture(scope="session")
def output_schema():
    return json.loads((SCHEMAS / "cli-output.schema.json").read_text())


@pytest.fixture(scope="session")
def input_schema():
    return json.loads((SCHEMAS / "cli-input.schema.json").read_text())
