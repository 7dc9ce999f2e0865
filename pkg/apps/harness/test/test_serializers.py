import numpy as np
import orjson
import pytest

from apps.harness.serializers import dump_instance, instance_document, load_instance, read_instance_file
from core.exceptions import InstanceParseError, NonHermitianError, NormalizationError, ShapeError
from core.Relations import evaluate_instance
from core.Sampling import Provenance, haar_gue_instance, qutrit_uncorrelated


def _write(path, document):
    path.write_bytes(orjson.dumps(document))
    return path


def _qubit_document(**overrides):
    document = {
        "dim": 2,
        "A": [[[0, 0], [1, 0]], [[1, 0], [0, 0]]],
        "B": [[[1, 0], [0, 0]], [[0, 0], [-1, 0]]],
        "phi": [[1, 0], [0, 0]],
    }
    document.update(overrides)
    return document


def test_well_formed_qubit_file(tmp_path):
    spec = load_instance(_write(tmp_path / "qubit.json", _qubit_document()))
    assert spec.dim == 2
    assert spec.provenance is Provenance.EXPLICIT
    assert np.array_equal(spec.a.matrix, [[0, 1], [1, 0]])


def test_non_hermitian_file_names_the_defect(tmp_path):
    document = _qubit_document(A=[[[0, 0], [1, 0]], [[0, 0], [0, 0]]])
    with pytest.raises(NonHermitianError) as excinfo:
        load_instance(_write(tmp_path / "bad.json", document))
    assert excinfo.value.invariant == "hermiticity"


def test_unnormalized_state_needs_normalize_flag(tmp_path):
    with pytest.raises(NormalizationError):
        load_instance(_write(tmp_path / "raw.json", _qubit_document(phi=[[3, 0], [0, 4]])))
    spec = load_instance(_write(tmp_path / "norm.json", _qubit_document(phi=[[3, 0], [0, 4]], normalize=True)))
    assert np.allclose(spec.phi.vector, [0.6, 0.8j])


def test_shape_errors(tmp_path):
    with pytest.raises(ShapeError):
        load_instance(_write(tmp_path / "short.json", _qubit_document(phi=[[1, 0]])))
    with pytest.raises(ShapeError):
        load_instance(_write(tmp_path / "rows.json", _qubit_document(dim=3)))


def test_unreadable_files(tmp_path):
    with pytest.raises(InstanceParseError):
        read_instance_file(tmp_path / "missing.json")
    (tmp_path / "broken.json").write_text("{not json")
    with pytest.raises(InstanceParseError):
        read_instance_file(tmp_path / "broken.json")
    with pytest.raises(InstanceParseError):
        read_instance_file(_write(tmp_path / "extra.json", _qubit_document(colour="blue")))


def test_written_instance_evaluates_identically(tmp_path):
    spec = haar_gue_instance(4, 123)
    path = dump_instance(spec, tmp_path / "nested" / "instance.json")
    reloaded = load_instance(path)
    assert reloaded.provenance is Provenance.HAAR_GUE and reloaded.seed == 123
    assert np.array_equal(reloaded.a.matrix, spec.a.matrix)
    assert evaluate_instance(spec.a, spec.b, spec.phi) == evaluate_instance(reloaded.a, reloaded.b, reloaded.phi)


def test_document_embeds_records():
    spec = qutrit_uncorrelated()
    records = evaluate_instance(spec.a, spec.b, spec.phi)
    document = instance_document(spec, records)
    assert document["provenance"] == "EXPLICIT"
    assert document["phi"] == [[1.0, 0.0], [0.0, 0.0], [0.0, 0.0]]
    assert len(document["records"]) == len(records)
