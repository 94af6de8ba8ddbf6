import io
import json
import subprocess
import sys

import pytest

from stratmod import determinantal, ideals, kernels
from stratmod.cli import run
from stratmod.partitions import Partition


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), stdout=buf)
    return code, buf.getvalue()


def payload(*argv):
    code, out = call(*argv)
    assert code == 0, out
    return json.loads(out)


def test_minimal_set():
    out = payload("minimal-set", "--rank", "2", "--gens", "[[2,1],[2,2]]")
    assert out["generators"] == [[2, 1]] and out["zero_ideal"] is False
    assert payload("minimal-set", "--rank", "3", "--gens", "[]")["zero_ideal"] is True


def test_determinantal_matches_library():
    out = payload("determinantal", "--nu", "10,5,1")
    out.pop("command"), out.pop("inputs")
    assert out == determinantal.compare_with_reference((10, 5, 1))
    assert out["extra_minimal"] == [[4, 4, 2], [4, 3, 3]]


def test_step1():
    out = payload("step1", "--l", "2", "--n", "1", "--r", "4")
    assert out["generators"] == [[1, 1, 1, 0]]
    assert out["inputs"] == {"l": 2, "n": 1, "r": 4}


def test_localize_and_fibre():
    out = payload("localize", "--rank", "3", "--gens", "[[2,1,0],[1,1,1]]", "--l", "1")
    assert out["generators"] == [[1, 0]] and out["rank"] == 2
    out = payload("max-fibre", "--ideal", '{"rank": 2, "generators": [[2, 0], [1, 1]]}')
    assert out["fibre"] == [[2, 0], [1, 1]]


def test_vanishing_order():
    out = payload("vanishing-order", "--lambda", "2,1,0", "--point", "e1", "--r", "3", "--s", "3")
    assert out["order"] == 1 and out["tail_sum"] == 1
    out = payload("vanishing-order", "--lambda", "1,1", "--point", "[[1, 0], [0, 0]]", "--r", "2", "--s", "2")
    assert out["order"] == 1 and "tail_sum" not in out


def test_k_expansion_golden():
    out = payload("k-expansion", "--lambda", "1,1", "--s", "1", "--N", "2")
    assert out["coefficients"] == {"2,0": [1, 4], "1,1": [1, 6], "1,0": [1, 3], "0,0": [1, 2]}
    lib = kernels.k_s_expansion(kernels.flat_coeffs, Partition((1, 1)), 1, 2)
    assert json.dumps(out["coefficients"]) == json.dumps(lib.to_json())


def test_k_expansion_pochhammer():
    out = payload("k-expansion", "--lambda", "1,0", "--s", "1", "--N", "1", "--coeffs", "pochhammer", "--c", "3/2")
    # a_(m) = (3/2)_m and C_1^1((m)) = 1/m
    assert out["coefficients"] == {"1,0": [15, 8], "0,0": [3, 2]}


def test_peter_weyl_dim():
    out = payload("peter-weyl-dim", "--lambda", "2,1", "--r", "2", "--s", "2", "--seed", "0")
    assert out["d_lambda"] == 4
    assert out["certificates"]["rank_history"][-5:] == [4] * 5


def test_verify_kernel():
    out = payload("verify-kernel", "--lambda", "2,1", "--n", "1", "--r", "2", "--s", "2", "--seed", "0")
    assert out["c_constant"] == [1, 3]
    assert max(out["residual20"], out["residual21"], out["residual22"]) <= 1e-8


def test_ideal_json_input_matches_library():
    text = '{"rank": 3, "generators": [[2, 1, 0], [1, 1, 1]]}'
    out = payload("localize", "--ideal", text, "--l", "1")
    lib = ideals.localize(ideals.IdealSupport.from_json(json.loads(text)), 1).to_json()
    assert {k: out[k] for k in lib} == lib


@pytest.mark.parametrize("argv", [
    ["verify-kernel", "--lambda", "2,1", "--n", "1", "--r", "2", "--s", "2"],
    ["peter-weyl-dim", "--lambda", "2,1", "--r", "2", "--s", "2"],
    ["minimal-set", "--rank", "2", "--gens", "[[1,2]]"],
    ["minimal-set", "--rank", "2", "--gens", "not json"],
    ["determinantal", "--nu", "1,x"],
    ["step1", "--l", "3", "--n", "1", "--r", "3"],
    ["localize", "--l", "1"],
    ["vanishing-order", "--lambda", "1,0", "--point", "e1", "--r", "3", "--s", "2"],
    ["k-expansion", "--lambda", "1,1", "--s", "2", "--N", "2"],
    [],
])
def test_validation_errors_exit_2(argv):
    code, out = call(*argv)
    assert code == 2
    assert set(json.loads(out)["error"]) == {"type", "message"}


def test_pretty_output():
    code, out = call("--pretty", "step1", "--l", "0", "--n", "1", "--r", "2")
    assert code == 0 and out.startswith("{\n  ")
    code2, out2 = call("step1", "--l", "0", "--n", "1", "--r", "2", "--pretty")
    assert out2 == out


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "stratmod", "step1", "--l", "1", "--n", "2", "--r", "2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["generators"] == [[2, 2]]
