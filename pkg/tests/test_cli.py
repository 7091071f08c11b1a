import json

import pytest

from wittkit.cli import run


def output(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.strip(), captured.err.strip()


def test_witt_product_of_teichmuller_lifts(capsys):
    code, out, _ = output(capsys, "witt", "mul", "--ring", "Z", "--depth", "4", "1-2t", "1-3t")
    assert code == 0
    assert out == "1-6t"


def test_witt_json_payload(capsys):
    code, out, _ = output(capsys, "witt", "teich", "--ring", "Z", "--depth", "3", "--json", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema_version"] == "1"
    assert payload["ring"] == "Z" and payload["N"] == 3
    assert payload["tail"] == ["-2", "0", "0"]


def test_witt_ghost(capsys):
    code, out, _ = output(capsys, "witt", "ghost", "--ring", "Z", "--depth", "4", "--json", "1-3t")
    assert code == 0
    assert json.loads(out)["components"] == ["3", "9", "27", "81"]


def test_frobenius_too_deep(capsys):
    code, _, err = output(capsys, "witt", "frob", "--ring", "Z", "--depth", "2", "--index", "3", "1-2t")
    assert code == 1
    assert json.loads(err)["error"] == "truncation_too_shallow"


def test_wrat_product(capsys):
    code, out, _ = output(capsys, "wrat", "mul", "--ring", "Z", "(1-2t)/(1-3t)", "1-5t")
    assert code == 0
    assert out == "(1-10t)/(1-15t)"


def test_phi_scalar_check(capsys):
    code, out, _ = output(capsys, "wrat", "phi", "--prime", "3", "--check", "scalar", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["holds"] is True
    assert payload["ghosts"][0]["components"] == ["-3", "-3", "0", "-3", "-3", "0"]


def test_phi_needs_a_prime(capsys):
    code, _, err = output(capsys, "wrat", "phi", "--prime", "4")
    assert code == 1
    payload = json.loads(err)
    assert payload["error"] == "not_prime" and payload["schema_version"] == "1"


def test_groupring_congruence(capsys):
    code, out, _ = output(capsys, "groupring", "congruence", "--group", "rank=1", "--prime", "2", "[0]+[1]")
    assert code == 0
    assert out.splitlines() == ["2[1]", "divisible=true"]


def test_groupring_towitt_bad_prime(capsys):
    code, _, err = output(
        capsys, "groupring", "towitt", "--group", "rank=1", "--ring", "Q", "--images", "2",
        "--bad-prime", "3", "--prime", "3", "[1]",
    )
    assert code == 1
    assert json.loads(err)["error"] == "excluded_prime"


@pytest.mark.parametrize(
    "op, expected",
    [("ext", "torsion=4,12"), ("pi0dual", "torsion=4,12"), ("pi0spec", "torsion=4,12")],
)
def test_abelian_torsion_operations(op, expected, capsys):
    code, out, _ = output(capsys, "abelian", op, "--group", "rank=0;torsion=4,12")
    assert code == 0
    assert out == expected


def test_ext_of_a_free_group(capsys):
    assert output(capsys, "abelian", "ext", "--group", "rank=3")[1] == "rank=0"


def test_group_flag_normalizes_torsion(capsys):
    assert output(capsys, "abelian", "ext", "--group", "torsion=2,3")[1] == "torsion=6"


def test_snf(capsys):
    code, out, _ = output(capsys, "abelian", "snf", "--matrix", "[[2,4],[6,8]]")
    assert code == 0
    assert out == "diagonal=2,4"


def test_covers_count(capsys):
    code, out, _ = output(capsys, "abelian", "covers", "--rank", "2", "--index", "6", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 12
    assert all(item["index"] == 6 for item in payload["lattices"])


def test_solenoid_chain(capsys):
    code, out, _ = output(capsys, "abelian", "solenoid", "--chain", "2,4,12")
    assert code == 0
    assert out.splitlines()[-1] == "n=12 order=12 surjective=true kernel=3"


def test_cohomology_table(capsys):
    code, out, _ = output(capsys, "cohom", "table", "--group", "6", "--module", "4", "--degree", "2")
    assert code == 0
    assert out == "torsion=2"


def test_cohomology_with_sign_action(capsys):
    code, out, _ = output(
        capsys, "cohom", "table", "--group", "2", "--module", "rank=1", "--degree", "1", "--action", "[[[-1]]]"
    )
    assert code == 0
    assert out == "torsion=2"


@pytest.mark.parametrize("alpha, expected", [("y", "1"), ("y^2", "2")])
def test_kummer_pairing(alpha, expected, capsys):
    code, out, _ = output(
        capsys, "cohom", "kummer", "--base-conductor", "3", "--radical", "2^(1/3)", "--alpha", alpha
    )
    assert code == 0
    assert out == expected


def test_hilbert90(capsys):
    code, out, _ = output(
        capsys, "cohom", "hilbert90", "--base-conductor", "3", "--radical", "2^(1/3)", "--zeta", "z", "--json"
    )
    assert code == 0
    assert json.loads(out)["verified"] is True


def test_galois_symbol(capsys):
    code, out, _ = output(
        capsys, "cohom", "symbol", "--base-conductor", "4", "--radical", "2^(1/2)", "--radical", "3^(1/2)",
        "--alpha", "2", "--n", "2",
    )
    assert code == 0
    assert "(1,0) -> 1" in out.splitlines()


def test_bad_ring_descriptor_is_a_usage_error(capsys):
    code, _, err = output(capsys, "witt", "mul", "--ring", "Zmod", "--depth", "4", "1-2t", "1-3t")
    assert code == 2
    assert "--ring" in err


def test_unparseable_polynomial(capsys):
    code, _, err = output(capsys, "witt", "neg", "--ring", "Z", "--depth", "2", "1/t")
    assert code == 1
    assert json.loads(err)["error"] == "parse_error"


def test_missing_command_is_a_usage_error(capsys):
    assert output(capsys)[0] == 2


def test_verify_single_suite(capsys):
    code, out, _ = output(capsys, "verify", "--suite", "lambda", "--seed", "3", "--trials", "2")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "wittkit verify seed=3"
    assert lines[1].startswith("lambda: ")
    assert lines[-1] == "result: ok"


def test_invalid_environment(capsys, monkeypatch):
    monkeypatch.setenv("WITTKIT_LOG_LEVEL", "LOUD")
    code, _, err = output(capsys, "abelian", "ext", "--group", "rank=1")
    assert code == 1
    assert json.loads(err)["error"] == "configuration_error"
