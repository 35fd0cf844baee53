import io
import json
import pathlib
from contextlib import redirect_stderr, redirect_stdout

import pytest

from pisom.cli import run

GOLDEN_DIR = pathlib.Path(__file__).parent / "goldens"

HMM_GRAM_JSON = (
    '{"k": 2, "cells": [["(-3,2,-2,3)", "(-3,2,-3,4)"], '
    '["(-4,3,-2,3)", "(-4,3,-3,4)"]], "witness": ["(-2,3)", "(-3,4)"]}'
)

GOLDEN_CASES = [
    ("reduce", ["reduce", "(2,-1,2,-1)"]),
    ("mul", ["mul", "(-3,3)", "(2,-2)"]),
    ("star", ["star", "(-3,2)"]),
    ("tau", ["tau", "(3,-1)"]),
    ("sigma", ["sigma", "(-2,3,-3,2)", "1"]),
    ("tau_plus", ["tau-plus", "(-4,2,-2,4)"]),
    ("member_d0", ["member", "(-2,3,-3,2)", "D0"]),
    ("member_aplus0", ["member", "(-2,3,-3,2)", "Aplus0"]),
    ("irr", ["irr", "(-3,2,-2,3)"]),
    ("factor", ["factor", "(-2,3,-3,2)"]),
    ("enum5", ["enum-irr", "5", "--json"]),
    ("enum6", ["enum-irr", "6", "--json"]),
    ("alpha", ["alpha", "(1,-1)"]),
    ("omega", ["omega", "(-2,2)"]),
    ("beta_omega", ["beta-omega", "(-4,2,-2,4)"]),
    ("sa_factor", ["sa-factor", "(-3,2,-2,3)"]),
    ("sa_factor_all", ["sa-factor", "(1,-1)", "--all"]),
    ("order_leq", ["order-leq", "(-5,5)", "(-1,1)"]),
    ("order_succ", ["order-succ", "(-3,2,-2,3)"]),
    ("gram", ["gram", '["(-2,3)","(-3,4)"]']),
    ("factor_gram", ["factor-gram", HMM_GRAM_JSON]),
    ("matrix_leq", ["matrix-leq", HMM_GRAM_JSON, HMM_GRAM_JSON]),
    ("matrix_succ", ["matrix-succ", HMM_GRAM_JSON]),
    (
        "matrix_pred",
        ["matrix-pred", '{"k": 2, "cells": [["(-6,5,-2,2,-5,6)", "(-6,5,-4,5)"], '
         '["(-5,4,-5,6)", "(-5,2,-2,5)"]], "witness": ["(2,-5,6)", "(-2,5)"]}'],
    ),
    ("classify_hmm", ["classify", HMM_GRAM_JSON]),
    ("classify_word", ["classify", "(-2,2,-2,2)"]),
    ("partitions", ["partitions", "2", "3"]),
    ("iota_tau", ["iota-tau", '{"k": 1, "cells": [["(-3,2,-2,3)"]], "witness": ["(-2,3)"]}', "[2]"]),
    ("verify_rep", ["verify-rep", "--seed", "0", "--dim", "3", "--count", "20"]),
]


def invoke(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = run(argv)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name,argv", GOLDEN_CASES, ids=[c[0] for c in GOLDEN_CASES])
def test_golden(name, argv):
    code, out, err = invoke(argv)
    assert code == 0, err
    expected = (GOLDEN_DIR / (name + ".txt")).read_bytes()
    assert out.encode() == expected


def test_exit_codes():
    code, _, err = invoke(["reduce", "(0)"])
    assert code == 1 and "zero entry" in err
    code, _, err = invoke(["factor", "(1,-2)"])
    assert code == 1
    code, _, _ = invoke(["bogus-subcommand"])
    assert code == 2
    code, _, _ = invoke(["mul", "(1)"])
    assert code == 2


def test_random_pi_deterministic():
    c1, out1, _ = invoke(["random-pi", "3", "--seed", "11"])
    c2, out2, _ = invoke(["random-pi", "3", "--seed", "11"])
    assert c1 == c2 == 0 and out1 == out2
    obj = json.loads(out1)
    assert obj["n"] == 3


def test_enum_cache_file(tmp_path):
    path = tmp_path / "irr.json"
    code, out1, _ = invoke(["enum-irr", "6", "--json", "--cache", str(path)])
    assert code == 0 and path.exists()
    cached = json.loads(path.read_text())
    assert cached["6"]["elements"] == json.loads(out1)["elements"]
    code, out2, _ = invoke(["enum-irr", "6", "--json", "--cache", str(path)])
    assert out2 == out1


def test_verify_korder_fixture_fails_at_2(tmp_path):
    asset = pathlib.Path(__file__).parent / "assets" / "order_fixture.json"
    code, out, _ = invoke(["verify-korder", "--k", "2", "--fixture", str(asset)])
    assert code == 0
    rpt = json.loads(out)
    assert rpt["total"] == 1 and len(rpt["failures"]) == 1
    code, out, _ = invoke(
        ["verify-korder", "--k", "1", "--fixture", str(asset), "--count", "40"]
    )
    assert code == 0
    rpt = json.loads(out)
    assert rpt["total"] == 40 and rpt["failures"] == []


def test_json_flag_variants():
    code, out, _ = invoke(["mul", "(-3,3)", "(2,-2)", "--json"])
    assert code == 0 and json.loads(out) == "(-3,5,-2)"
    code, out, _ = invoke(["order-leq", "(-5,5)", "(-1,1)", "--json"])
    assert json.loads(out) is True
