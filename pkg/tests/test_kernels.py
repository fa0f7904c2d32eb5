import os
import subprocess
import sys

import pytest
from hypothesis import given

from conftest import moduli, partitions, slopes
from corespan import _kernels_py, kernels
from corespan.multigraph import canonical_k
from corespan.partition import Partition, partitions_up_to

compiled = pytest.importorskip("corespan._kernels", reason="compiled kernels not built")


@given(partitions(), slopes, moduli)
def test_backends_agree_on_cell_counts(lam, rs, c):
    assert compiled.cell_counts(lam, *rs, c) == _kernels_py.cell_counts(lam, *rs, c)


@pytest.mark.parametrize("r,s,c", [(1, 1, 1), (2, 1, 2), (3, 2, 2), (1, 3, 3)])
def test_backends_agree_on_involution_and_counts(r, s, c):
    for lam in partitions_up_to(11):
        k = canonical_k(lam, r, s, c)
        parts = tuple(lam)
        assert compiled.involute_parts(parts, r, s, c, k) == _kernels_py.involute_parts(parts, r, s, c, k)
        assert compiled.arrival_counts(parts, r, s, c, k) == _kernels_py.arrival_counts(parts, r, s, c, k)


@pytest.mark.parametrize("impl", [_kernels_py, compiled], ids=["python", "cython"])
def test_kernels_reject_partitions_outside_the_window(impl):
    with pytest.raises(kernels.KernelError):
        impl.involute_parts((6, 1), 3, 1, 2, 6)
    with pytest.raises(kernels.KernelError):
        impl.arrival_counts((6, 1), 3, 1, 2, 6)


def test_walk_back_reports_unrealizable_words():
    with pytest.raises(kernels.KernelError):
        _kernels_py.walk_back({1 * 1 + 0: "E"}, 1, 1, 1, 1)


def test_pure_python_switch():
    env = dict(os.environ, CORESPAN_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import corespan; print(corespan.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@pytest.mark.skipif(bool(os.environ.get("CORESPAN_PURE_PYTHON")), reason="fallback forced")
def test_default_backend_is_compiled_when_built():
    assert kernels.BACKEND == "cython"
