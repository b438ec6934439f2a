"""The bundled verification suites must be green as shipped."""

import pytest

from toposlsc.verify import SUITES, run_suite


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes(name):
    cert = run_suite(name)
    assert cert.checks, name
    assert cert.ok, [f"{c.name}: {c.witness}" for c in cert.failures()]


def test_run_all_merges_every_suite():
    cert = run_suite("all")
    prefixes = {c.name.split(".")[0] for c in cert.checks}
    assert prefixes == set(SUITES)
    assert cert.ok
