import json

import pytest

import golden as G
from symptok import render
from symptok.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write_json(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(render.to_json(obj), encoding="utf-8")
    return str(path)


class TestEnumerate:
    def test_count_only(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--family", "st",
                           "--lambda", "1", "--n", "1", "--count-only")
        assert code == 0 and out.strip() == "2"

    def test_listing_round_trips(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--family", "uasm",
                           "--lambda", "2,1", "--n", "2")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 12
        for line in lines:
            render.from_json(line)  # every emitted object is re-readable

    def test_primed_family_count(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--family", "qt",
                           "--lambda", "1", "--n", "1", "--count-only")
        assert code == 0 and out.strip() == "4"

    def test_ordinary_family(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--family", "t",
                           "--lambda", "1", "--n", "2", "--count-only")
        assert code == 0 and out.strip() == "4"


class TestBijection:
    def test_all_four_forms_from_matrix(self, capsys, tmp_path):
        path = write_json(tmp_path, "a.json", G.A)
        code, out, _ = run(capsys, "bijection", "--from", "uasm",
                           "--input", path, "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert set(doc) == {"st", "uasm", "cpm", "gtp"}
        assert render.from_json_data(doc["st"]) == G.ST
        assert render.from_json_data(doc["gtp"]) == G.GT
        assert render.from_json_data(doc["cpm"]) == G.CPM

    def test_ascii_sections(self, capsys, tmp_path):
        path = write_json(tmp_path, "st.json", G.ST)
        code, out, _ = run(capsys, "bijection", "--from", "st",
                           "--input", path, "--format", "ascii")
        assert code == 0
        for name in ("-- st --", "-- uasm --", "-- cpm --", "-- gtp --"):
            assert name in out

    def test_wrong_family_rejected(self, capsys, tmp_path):
        path = write_json(tmp_path, "a.json", G.A)
        code, _, err = run(capsys, "bijection", "--from", "st", "--input", path)
        assert code == 2 and "not a st" in err

    def test_pattern_source(self, capsys, tmp_path):
        path = write_json(tmp_path, "gt.json", G.GT)
        code, out, _ = run(capsys, "bijection", "--from", "gtp",
                           "--input", path, "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert render.from_json_data(doc["uasm"]) == G.A


class TestWeight:
    def test_statistics_form_golden_value(self, capsys, tmp_path):
        path = write_json(tmp_path, "gt.json", G.GT)
        code, out, _ = run(capsys, "weight", "--scheme", "GT_QX",
                           "--input", path)
        assert code == 0
        assert out.strip() == "(1+q)^7 * q^7 * x2 * x4^-4"

    def test_shifted_weight_matches_golden_polynomial(self, capsys, tmp_path):
        path = write_json(tmp_path, "st.json", G.ST)
        code, out, _ = run(capsys, "weight", "--scheme", "ST_XY",
                           "--input", path)
        assert code == 0
        from symptok.algebra import LaurentPoly
        assert LaurentPoly.parse(out.strip()) == G.golden_weight()

    def test_compass_weight_agrees(self, capsys, tmp_path):
        path = write_json(tmp_path, "a.json", G.A)
        code, out, _ = run(capsys, "weight", "--scheme", "CPM_XY",
                           "--input", path)
        from symptok.algebra import LaurentPoly
        assert code == 0
        assert LaurentPoly.parse(out.strip()) == G.golden_weight()

    def test_annotated_grid(self, capsys, tmp_path):
        path = write_json(tmp_path, "st.json", G.ST)
        code, out, _ = run(capsys, "weight", "--scheme", "ST_XY",
                           "--input", path, "--annotate")
        assert code == 0
        assert "x1+y1" in out and "y2" in out

    def test_scheme_object_mismatch(self, capsys, tmp_path):
        path = write_json(tmp_path, "st.json", G.ST)
        code, _, err = run(capsys, "weight", "--scheme", "GT_QX",
                           "--input", path)
        assert code == 2 and "expects" in err

    def test_primed_and_plain_tableau_schemes(self, capsys, tmp_path):
        from symptok.algebra import LaurentPoly
        from symptok.tableaux import SymplecticTableau
        path = write_json(tmp_path, "qt.json", G.QT)
        code, out, _ = run(capsys, "weight", "--scheme", "QT_DEFORMED",
                           "--input", path)
        assert code == 0
        from symptok.weights import wgt_qt
        assert LaurentPoly.parse(out.strip()) == wgt_qt(G.QT, deformed=True)
        t = SymplecticTableau((1,), ((2,),))
        path = write_json(tmp_path, "t.json", t)
        code, out, _ = run(capsys, "weight", "--scheme", "T_DEFORMED",
                           "--input", path)
        assert code == 0 and LaurentPoly.parse(out.strip()).num_terms() == 1


class TestVerify:
    def test_base_case_exit_zero(self, capsys):
        code, out, _ = run(capsys, "verify", "--id", "THM_ST", "--mu", "",
                           "--n", "1", "--mode", "symbolic")
        assert code == 0
        doc = json.loads(out)
        assert doc["equal"] is True and doc["lambda"] == [1]

    def test_failing_variant_exit_one(self, capsys):
        code, out, _ = run(capsys, "verify", "--id", "COR_UASM_Q", "--mu", "1",
                           "--n", "2", "--cpm-q-scheme", "norm",
                           "--c0", "literal")
        assert code == 1
        assert json.loads(out)["equal"] is False

    def test_modular_mode(self, capsys):
        code, out, _ = run(capsys, "verify", "--id", "PROP_T", "--mu", "1",
                           "--n", "2", "--mode", "modular", "--trials", "5",
                           "--seed", "42")
        assert code == 0
        doc = json.loads(out)
        assert doc["mode"] == "MODULAR" and doc["params"]["seed"] == 42

    def test_scale_cap_is_usage_error(self, capsys):
        code, _, err = run(capsys, "verify", "--id", "THM_ST", "--mu", "4,3,3",
                           "--n", "5")
        assert code == 2 and "cap" in err

    def test_deterministic_output(self, capsys):
        args = ("verify", "--id", "COR_GT_QX", "--mu", "2", "--n", "2",
                "--mode", "modular", "--seed", "7", "--no-timing")
        code1, out1, _ = run(capsys, *args)
        code2, out2, _ = run(capsys, *args)
        assert code1 == code2 == 0 and out1 == out2


class TestSweep:
    def test_small_sweep(self, capsys):
        code, out, _ = run(capsys, "sweep", "--id", "COR_UASM", "--n", "1",
                           "--max-weight", "2", "--no-timing")
        assert code == 0
        docs = json.loads(out)
        assert [d["mu"] for d in docs] == [[], [1], [2]]
        assert all(d["equal"] for d in docs)

    def test_thread_count_does_not_change_output(self, capsys, monkeypatch):
        args = ("sweep", "--id", "THM_ST", "--n", "2", "--max-weight", "2",
                "--no-timing")
        monkeypatch.setenv("SYMPTOK_THREADS", "1")
        _, out1, _ = run(capsys, *args)
        monkeypatch.setenv("SYMPTOK_THREADS", "4")
        _, out4, _ = run(capsys, *args)
        assert out1 == out4


class TestRender:
    def test_json_round_trip(self, capsys, tmp_path):
        for obj in (G.ST, G.QT, G.A, G.GT, G.CPM):
            path = write_json(tmp_path, "obj.json", obj)
            code, out, _ = run(capsys, "render", "--input", path,
                               "--format", "json")
            assert code == 0
            assert render.from_json(out) == obj

    def test_ascii_tableau_markers(self, capsys, tmp_path):
        path = write_json(tmp_path, "qt.json", G.QT)
        code, out, _ = run(capsys, "render", "--input", path)
        assert code == 0
        assert "2'" in out and "4-'" in out  # primes and bars

    def test_bad_file_is_usage_error(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{\"nope\": 1}", encoding="utf-8")
        code, _, err = run(capsys, "render", "--input", str(bad))
        assert code == 2 and err

    def test_unknown_flag_exits_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["enumerate", "--family", "st", "--lambda", "1", "--n", "1",
                  "--bogus"])
        assert exc.value.code == 2
