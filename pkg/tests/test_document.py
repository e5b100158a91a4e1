"""JSON document parsing/emission and CSV field formats."""

import json
import math

import numpy as np
import pytest

from frameduals.document import (
    DocumentError,
    ProjectDocument,
    document_to_model,
    dump_dual_samples_csv,
    dump_field_csv,
    emit_document,
    load_field_csv,
    parse_document,
)
from frameduals.fixtures import curved_document, rectangle_document
from frameduals.frame import DualLoop
from frameduals.legendre import SampledField, diagram_of_stress


def doc_json(**overrides) -> str:
    base = {
        "structure": {
            "segments": [
                {"kind": "straight", "start": [0, 0, 0], "end": [1, 0, 0]},
                {"kind": "straight", "start": [1, 0, 0], "end": [0, 1, 0]},
                {"kind": "straight", "start": [0, 1, 0], "end": [0, 0, 0]},
            ]
        },
        "dual": {"p": 1.0, "vertices": [[0, 0, 0, 0], [1, 1, 0, 0], [0, 0, 0, 1]]},
    }
    base.update(overrides)
    return json.dumps(base)


class TestParse:
    def test_rectangle_fixture_shape(self):
        doc = parse_document(emit_document(rectangle_document()))
        assert len(doc.structure.segments) == 4
        assert len(doc.dual) == 3
        assert doc.dual.p == 1.0

    def test_empty_dual_accepted(self):
        doc = parse_document(doc_json(dual={"p": 2.0, "vertices": []}))
        assert len(doc.dual) == 0

    def test_open_loop_reports_gap(self):
        bad = doc_json(
            structure={
                "segments": [
                    {"kind": "straight", "start": [0, 0, 0], "end": [1, 0, 0]},
                    {"kind": "straight", "start": [1, 0, 0], "end": [3, 4, 0]},
                ]
            }
        )
        with pytest.raises(DocumentError, match="gap magnitude 5"):
            parse_document(bad)

    def test_nonpositive_pressure_rejected(self):
        with pytest.raises(DocumentError, match="dual.p"):
            parse_document(doc_json(dual={"p": -1.0, "vertices": []}))

    def test_schema_error_is_path_addressed(self):
        bad = doc_json(
            structure={"segments": [{"kind": "straight", "start": [0, 0, 0]}]}
        )
        with pytest.raises(DocumentError, match=r"structure\.segments\.0"):
            parse_document(bad)

    def test_unknown_keys_rejected(self):
        with pytest.raises(DocumentError, match="bogus: Extra inputs"):
            parse_document(doc_json(bogus=1))

    def test_not_json(self):
        with pytest.raises(DocumentError):
            parse_document("not json at all")

    def test_empty_structure_allowed(self):
        doc = parse_document(doc_json(structure={"segments": []}))
        assert doc.structure is None
        with pytest.raises(DocumentError, match="no structural loop"):
            doc.require_structure()

    def test_bad_arc_basis_reported_with_index(self):
        bad = doc_json(
            structure={
                "segments": [
                    {
                        "kind": "arc",
                        "center": [0, 0, 0],
                        "radius": 1.0,
                        "e1": [2, 0, 0],
                        "e2": [0, 1, 0],
                        "psi_start": 0.0,
                        "psi_end": 3.14159,
                    }
                ]
            }
        )
        with pytest.raises(DocumentError, match=r"structure\.segments\.0.*unit"):
            parse_document(bad)


class TestRoundTrip:
    @pytest.mark.parametrize("builder", [rectangle_document, curved_document])
    def test_emit_parse_identity(self, builder):
        doc = builder()
        text = emit_document(doc)
        again = parse_document(text)
        assert document_to_model(again) == document_to_model(doc)
        assert emit_document(again) == text

    def test_fields_round_trip(self):
        fld = SampledField(
            origin=(0.0, -1.0), spacing=(0.5, 0.25), values=np.arange(12.0).reshape(3, 4)
        )
        doc = ProjectDocument(structure=None, dual=DualLoop([], p=1.0), fields={"airy": fld})
        again = parse_document(emit_document(doc))
        assert set(again.fields) == {"airy"}
        back = again.fields["airy"]
        assert back.origin == fld.origin
        assert back.spacing == fld.spacing
        assert np.array_equal(back.values, fld.values)

    def test_float_fidelity(self):
        doc = rectangle_document(B=1.0 / 3.0, W=0.1, s=math.pi, t=1e-7, p=2.5e8)
        again = parse_document(emit_document(doc))
        assert again.dual.vertices == doc.dual.vertices


class TestFieldCsv:
    def test_1d_round_trip(self):
        xs = [-2.0 + 0.5 * i for i in range(9)]
        text = "x,f\n" + "\n".join(f"{x!r},{x * x!r}" for x in xs)
        fld = load_field_csv(text)
        assert fld.dim == 1
        assert fld.origin == (-2.0,)
        assert fld.spacing == (0.5,)
        again = load_field_csv(dump_field_csv(fld))
        assert np.array_equal(again.values, fld.values)

    def test_2d_shuffled_rows(self):
        rows = []
        for ix in range(3):
            for iy in range(4):
                x, y = 0.5 * ix, 1.0 + 0.25 * iy
                rows.append(f"{x},{y},{x + 10 * y}")
        rows.reverse()
        fld = load_field_csv("x,y,f\n" + "\n".join(rows))
        assert fld.values.shape == (3, 4)
        assert fld.values[1, 2] == pytest.approx(0.5 + 10 * 1.5)

    def test_missing_sample_rejected(self):
        text = "x,y,f\n0,0,1\n0,1,1\n1,0,1"
        with pytest.raises(DocumentError, match="incomplete"):
            load_field_csv(text)

    def test_irregular_grid_rejected(self):
        text = "x,f\n0,0\n1,1\n3,9"
        with pytest.raises(DocumentError, match="regular"):
            load_field_csv(text)

    def test_duplicate_sample_rejected(self):
        text = "x,f\n0,0\n1,1\n1,2\n2,4"
        with pytest.raises(DocumentError, match="duplicate"):
            load_field_csv(text)

    def test_header_only_rejected(self):
        with pytest.raises(DocumentError, match="header"):
            load_field_csv("x,f\n")

    def test_too_many_columns_rejected(self):
        with pytest.raises(DocumentError, match="columns"):
            load_field_csv("x,y,z,w,f\n0,0,0,0,0")


class TestDualSamplesCsv:
    def test_columns_match_dim(self):
        xs = 0.5 * np.arange(9)
        fld = SampledField(origin=(0.0,), spacing=(0.5,), values=xs**2)
        samples = diagram_of_stress(fld)
        text = dump_dual_samples_csv(samples, fld.dim)
        header, first = text.splitlines()[:2]
        assert header == "xi,phi,x"
        assert len(first.split(",")) == 3
        assert len(text.splitlines()) == len(samples) + 1
