import orjson
import pytest
from typer.testing import CliRunner

from apps.harness.serializers import dump_instance, instance_document
from core.Relations import Relation, evaluate_instance
from core.Sampling import qubit_sx_sz, qutrit_uncorrelated
from revbound.cli import app

runner = CliRunner()


def _invoke(*args):
    return runner.invoke(app, [str(arg) for arg in args])


@pytest.fixture
def qutrit_file(tmp_path):
    return dump_instance(qutrit_uncorrelated(), tmp_path / "qutrit.json")


@pytest.fixture
def eigenstate_file(tmp_path):
    return dump_instance(qubit_sx_sz(), tmp_path / "eigenstate.json")


def _records(document):
    return {record["relation"]: record for record in document["records"]}


def test_verify_qutrit(qutrit_file):
    result = _invoke("verify", qutrit_file, "--json")
    assert result.exit_code == 0, result.stderr
    document = orjson.loads(result.stdout)
    records = _records(document)
    assert document["ok"] is True
    assert records["REV_COV"]["lhs"] == pytest.approx(2.0)
    assert records["REV_COV"]["rhs"] == pytest.approx(2.0)
    assert records["REV_DW"]["defined"] is True
    assert abs(records["REV_DW"]["gap"]) <= 1e-8
    assert document["scalars"]["abs_cov"] == pytest.approx(0.0, abs=1e-12)


def test_verify_table_output(qutrit_file):
    result = _invoke("verify", qutrit_file)
    assert result.exit_code == 0
    assert "REV_COV" in result.stdout
    assert "derived scalars" in result.stdout


def test_verify_eigenstate_marks_rev_dw_undefined(eigenstate_file):
    result = _invoke("verify", eigenstate_file, "--json")
    assert result.exit_code == 0
    records = _records(orjson.loads(result.stdout))
    assert records["REV_DW"]["defined"] is False
    assert records["REV_COV"]["defined"] is True
    assert records["REV_PROD"]["defined"] is True


def test_verify_corrupted_claim_exits_one(tmp_path):
    spec = qutrit_uncorrelated()
    claims = evaluate_instance(spec.a, spec.b, spec.phi, [Relation.IN0])
    document = instance_document(spec, claims)
    document["records"][0].update({"holds": False, "gap": -1.0})
    path = tmp_path / "corrupted.json"
    path.write_bytes(orjson.dumps(document))

    result = _invoke("verify", path, "--json")
    assert result.exit_code == 1
    # a failed relation is a record, not a raised error
    assert isinstance(result.exception, SystemExit)
    assert "Traceback" not in result.stderr
    claim = orjson.loads(result.stdout)["claims"][0]
    assert claim["relation"] == "IN0"
    assert claim["consistent"] is False
    assert claim["agrees"] is False


def test_verify_honest_claims_pass(tmp_path):
    spec = qutrit_uncorrelated()
    path = dump_instance(spec, tmp_path / "claims.json", evaluate_instance(spec.a, spec.b, spec.phi))
    assert _invoke("verify", path, "--quiet").exit_code == 0


def test_verify_input_errors_exit_two(tmp_path):
    assert _invoke("verify", tmp_path / "missing.json").exit_code == 2
    bad = tmp_path / "bad.json"
    bad.write_bytes(orjson.dumps({"dim": 2, "A": [[[0, 0], [1, 0]], [[0, 0], [0, 0]]], "B": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]], "phi": [[1, 0], [0, 0]]}))
    result = _invoke("verify", bad)
    assert result.exit_code == 2
    assert "Hermitian" in result.stderr
    assert _invoke("verify", bad, "--relations", "NOPE").exit_code == 2


def test_sweep_csv_is_byte_identical_across_runs_and_workers(tmp_path):
    outputs = []
    for index, (workers, pool) in enumerate([(1, "SERIAL"), (1, "SERIAL"), (4, "THREAD")]):
        path = tmp_path / f"sweep-{index}.csv"
        result = _invoke(
            "sweep", "--dims", "2,3", "--trials", "300", "--seed", "7",
            "--workers", workers, "--pool", pool, "--output", path, "--quiet",
        )
        assert result.exit_code == 0, result.stderr
        outputs.append(path.read_bytes())
    assert outputs[0] == outputs[1] == outputs[2]

    lines = outputs[0].decode().splitlines()
    assert lines[0] == "trial_seed,dim,provenance,relation,defined,holds,lhs,rhs,gap"
    assert len(lines) == 1 + 2 * 300 * len(Relation)
    assert lines[1].startswith("7,2,HAAR_GUE,ID1,true,true,")


def test_sweep_json_to_stdout():
    result = _invoke("sweep", "--dims", "3", "--trials", "50", "--format", "json", "--relations", "REV_COV,ROBERTSON")
    assert result.exit_code == 0
    document = orjson.loads(result.stdout)
    assert document["total_violations"] == 0
    tallies = {tally["relation"]: tally for tally in document["tallies"]}
    assert set(tallies) == {"REV_COV", "ROBERTSON"}
    assert tallies["REV_COV"]["trials"] == 50
    assert tallies["REV_COV"]["gap_min"] <= tallies["REV_COV"]["gap_median"] <= tallies["REV_COV"]["gap_max"]


def test_sweep_eigenstates_leave_rev_dw_undefined():
    result = _invoke(
        "sweep", "--dims", "2,3", "--trials", "40", "--provenance", "EIGENSTATE",
        "--relations", "REV_DW", "--format", "json",
    )
    assert result.exit_code == 0
    (tally,) = orjson.loads(result.stdout)["tallies"]
    assert tally["undefined_count"] == tally["trials"] == 80
    assert tally["worst_gap"] is None


def test_sweep_orthogonal_deviations_saturate_rev_cov():
    result = _invoke(
        "sweep", "--dims", "2,3,4", "--trials", "40", "--provenance", "ortho-deviation",
        "--relations", "REV_COV", "--format", "json",
    )
    assert result.exit_code == 0
    document = orjson.loads(result.stdout)
    (tally,) = document["tallies"]
    assert tally["equality_count"] == tally["trials"] == 80
    assert document["config"]["skipped"] == ["ORTHO_DEVIATION d=2: needs dim >= 3"]


@pytest.mark.parametrize(
    "args",
    [
        ["--dims", "two"],
        ["--trials", "0"],
        ["--provenance", "EXPLICIT"],
        ["--provenance", "GHZ"],
        ["--pool", "GPU", "--workers", "2"],
        ["--seed", "-1"],
        ["--tolerance", "0"],
    ],
)
def test_sweep_invalid_flags_exit_two(args):
    result = _invoke("sweep", "--trials", "5", *args)
    assert result.exit_code == 2


def test_extremal_on_named_example(tmp_path):
    output = tmp_path / "extremal.json"
    result = _invoke("extremal", "--example", "qubit-sx-sz", "--relation", "REV_COV", "--output", output, "--grid-check")
    assert result.exit_code == 0, result.stderr
    assert "best gap" in result.stdout
    document = orjson.loads(output.read_bytes())
    assert document["best_gap"] <= 1e-6
    assert document["crossed_bound"] is False
    assert document["grid"]["agrees"] is True
    assert len(document["best_state"]) == 2


def test_extremal_random_pair_json():
    result = _invoke("extremal", "--dim", "3", "--seed", "4", "--restarts", "2", "--relation", "rev-prod", "--json")
    assert result.exit_code == 0
    document = orjson.loads(result.stdout)
    assert document["relation"] == "REV_PROD"
    assert document["crossed_bound"] is False
    assert document["best_record"]["holds"] is True


def test_extremal_rejects_lower_bounds_and_ambiguous_sources(eigenstate_file):
    result = _invoke("extremal", "--example", "qubit-sx-sz", "--relation", "ROBERTSON")
    assert result.exit_code == 2
    assert "cannot be minimized" in result.stderr
    assert _invoke("extremal").exit_code == 2
    assert _invoke("extremal", "--example", "qubit-sx-sz", "--instance", eigenstate_file).exit_code == 2
    assert _invoke("extremal", "--dim", "3", "--grid-check").exit_code == 2


def test_demo_reduced_forms():
    result = _invoke("demo", "--json")
    assert result.exit_code == 0
    document = orjson.loads(result.stdout)
    assert document["ok"] is True
    rows = {(row["instance"], row["relation"]): row for row in document["rows"]}

    cov = rows[("qutrit uncorrelated", "REV_COV")]["record"]
    assert cov["lhs"] == pytest.approx(2.0) and cov["rhs"] == pytest.approx(2.0)
    assert rows[("qutrit uncorrelated", "REV_PROD")]["record"]["gap"] == pytest.approx(2.0)
    assert rows[("qutrit uncorrelated", "REV_DW")]["reduced_form"] == "0 <= (dA - dB)^2"

    eigen = "qubit (sx, sz, |0>) eigenstate"
    assert rows[(eigen, "REV_DW")]["record"]["defined"] is False
    assert rows[(eigen, "REV_COV")]["record"]["defined"] is True
    assert rows[(eigen, "REV_PROD")]["record"]["defined"] is True


def test_demo_table():
    result = _invoke("demo")
    assert result.exit_code == 0
    assert "lhs <= lhs" in result.stdout


def test_version():
    result = _invoke("--version")
    assert result.exit_code == 0
    assert result.stdout.strip() == "0.1.0"
