from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

from nestcond.cli import main
from nestcond.conditions import restrict_condition, shape
from nestcond.fixtures import bc_context, fixture
from nestcond.io import load, loads, save

ROOT = Path(__file__).resolve().parents[1]
FIX = ROOT / "fixtures"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


class TestValidate:
    def test_shipped_fixtures(self, capsys):
        code, out, _ = run(capsys, "validate", *sorted(FIX.glob("*.json")))
        assert code == 0
        assert out.count(": ok ") == 5

    def test_bad_file(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"graphs": {"g": {"nodes": ["1"], "edges": [{"id": "e", "src": "1", "tgt": "x", "label": "b"}]}}}')
        code, _, err = run(capsys, "validate", bad)
        assert code == 2 and "dangling edge" in err

    def test_dangling_reference(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"morphisms": {"m": {"dom": "nope", "cod": "nope", "nodes": {}, "edges": {}}}}))
        code, _, err = run(capsys, "validate", bad)
        assert code == 2 and "dangling reference" in err


class TestSatisfy:
    def test_initial_fig1(self, capsys):
        code, out, _ = run(capsys, "satisfy", FIX / "fig1.json", "--mode", "initial",
                           "--graph", "G_A", "--condition", "ac_I", "--check")
        res = json.loads(out)
        assert code == 0 and res["verdict"] is True
        tree = res["solution"]
        assert tree["op"] == "witness" and tree["morphism"] == "p1"
        q1, q2 = tree["sub"]["children"]
        assert q1["morphism"] == "q1" and q2["morphism"] == "q2"
        assert q2["sub"]["children"][1] == {"op": "empty"}

    def test_general_counterexample(self, capsys):
        code_a, out_a, _ = run(capsys, "satisfy", FIX / "fig5.json", "--graph", "G_A", "--condition", "ac_PA", "--check")
        code_b, out_b, _ = run(capsys, "satisfy", FIX / "fig5.json", "--graph", "G_B", "--condition", "ac_PB", "--check")
        assert json.loads(out_a)["verdict"] is True and code_a == 0
        assert json.loads(out_b)["verdict"] is False and code_b == 1

    @pytest.mark.parametrize("mode", ["general", "initial", "match"])
    def test_true_condition(self, capsys, tmp_path, mode):
        from nestcond.category import TypedGraph, initial_morphism
        from nestcond.conditions import true

        ws = fixture("fig2")
        ws.conditions["t"] = true(TypedGraph.empty(bc_context().tg_a))
        ws.morphisms["i"] = initial_morphism(ws.typed_graphs["G_A"].graph)
        save(ws, tmp_path / "ws.json")
        code, out, _ = run(capsys, "satisfy", tmp_path / "ws.json", "--mode", mode, "--graph", "G_A",
                           "--condition", "t", "--match", "i", "--check")
        assert code == 0 and json.loads(out)["verdict"] is True

    def test_match_mode_needs_match(self, capsys):
        code, _, err = run(capsys, "satisfy", FIX / "fig1.json", "--mode", "match", "--graph", "G_A",
                           "--condition", "ac_P")
        assert code == 2 and "--match" in err

    def test_match_mode(self, capsys, tmp_path):
        code, out, _ = run(capsys, "satisfy", FIX / "fig1.json", "--mode", "match", "--graph", "G_A",
                           "--condition", "ac_P", "--match", "p1", "--out", tmp_path / "r.json")
        assert code == 0 and out == ""
        assert json.loads((tmp_path / "r.json").read_text())["verdict"] is True

    def test_unknown_name(self, capsys):
        code, _, err = run(capsys, "satisfy", FIX / "fig1.json", "--graph", "nope", "--condition", "ac_P")
        assert code == 2 and "dangling reference" in err


class TestRestrict:
    def test_graph_to_b_view(self, capsys):
        code, out, _ = run(capsys, "restrict", FIX / "fig2.json", "--what", "graph", "--item", "G_A", "--along", "tg_ba")
        assert code == 0
        g = loads(out).typed_graphs["result"]
        assert g == fixture("fig2").typed_graphs["G_B"]
        assert {e.label for e in g.graph.edges} == {"b"}

    def test_along_identity(self, capsys, tmp_path):
        from nestcond.graph import identity

        ws = fixture("fig3")
        ws.morphisms["id_A"] = identity(bc_context().tg_a)
        save(ws, tmp_path / "ws.json")
        code, out, _ = run(capsys, "restrict", tmp_path / "ws.json", "--what", "condition", "--item", "ac_PA",
                           "--along", "id_A")
        assert code == 0 and loads(out).conditions["result"] == ws.conditions["ac_PA"]

    def test_condition(self, capsys):
        code, out, _ = run(capsys, "restrict", FIX / "fig3.json", "--what", "condition", "--item", "ac_PA",
                           "--along", "tg_ca")
        assert code == 0 and loads(out).conditions["result"] == fixture("fig3").conditions["ac_PC"]

    def test_morphism(self, capsys):
        code, out, _ = run(capsys, "restrict", FIX / "fig4.json", "--what", "morphism", "--item", "q1_A",
                           "--src", "C1_A", "--tgt", "G_A", "--along", "tg_ba")
        assert code == 0
        q = loads(out).morphisms["result"]
        assert q.is_inclusion and {e.label for e in q.dom.edges} == {"b"}

    def test_morphism_needs_ends(self, capsys):
        code, _, _ = run(capsys, "restrict", FIX / "fig4.json", "--what", "morphism", "--item", "q1_A", "--along", "tg_ba")
        assert code == 2

    def test_solution_verifies(self, capsys):
        code, out, _ = run(capsys, "restrict", FIX / "fig4.json", "--what", "solution", "--item", "Q_A",
                           "--along", "tg_ba", "--check")
        assert code == 0
        cert = loads(out).solutions["result"]
        assert cert.verify()
        assert cert.condition == restrict_condition(fixture("fig4").conditions["ac_A"], bc_context().tg_ba)


class TestAmalgamateDecompose:
    def test_fig2_graphs(self, capsys):
        code, out, _ = run(capsys, "amalgamate", FIX / "fig2.json", "--what", "graph",
                           "--items", "G_B", "G_C", "G_D", "--context", "bc", "--check")
        assert code == 0 and loads(out).typed_graphs["result"] == fixture("fig2").typed_graphs["G_A"]

    def test_empty_graphs(self, capsys, tmp_path):
        from nestcond.category import TypedGraph

        ctx = bc_context()
        ws = fixture("fig2")
        for name, tg in (("E_B", ctx.tg_b), ("E_C", ctx.tg_c), ("E_D", ctx.tg_d)):
            ws.typed_graphs[name] = TypedGraph.empty(tg)
        save(ws, tmp_path / "ws.json")
        code, out, _ = run(capsys, "amalgamate", tmp_path / "ws.json", "--what", "graph",
                           "--items", "E_B", "E_C", "E_D", "--context", "bc", "--check")
        assert code == 0 and loads(out).typed_graphs["result"].graph.is_empty()

    def test_fig3_conditions(self, capsys):
        code, out, _ = run(capsys, "amalgamate", FIX / "fig3.json", "--what", "condition",
                           "--items", "ac_PB", "ac_PC", "ac_PD", "--context", "bc", "--check")
        assert code == 0 and loads(out).conditions["result"] == fixture("fig3").conditions["ac_PA"]

    def test_fig4_solutions(self, capsys, tmp_path):
        code, out, _ = run(capsys, "decompose", FIX / "fig4.json", "--what", "solution", "--item", "Q_A",
                           "--context", "bc", "--name", "Q", "--check")
        assert code == 0
        parts = loads(out)
        assert set(parts.solutions) == {"Q_b", "Q_c", "Q_d"}
        merged = load(FIX / "fig4.json").merge(parts)
        save(merged, tmp_path / "ws.json")
        code, out, _ = run(capsys, "amalgamate", tmp_path / "ws.json", "--what", "solution",
                           "--items", "Q_b", "Q_c", "Q_d", "--context", "bc", "--check")
        assert code == 0
        cert = loads(out).solutions["result"]
        assert cert.verify() and cert == fixture("fig4").solutions["Q_A"]

    def test_decompose_graph_and_condition(self, capsys):
        code, out, _ = run(capsys, "decompose", FIX / "fig2.json", "--what", "graph", "--item", "G_A",
                           "--context", "bc", "--check")
        assert code == 0 and loads(out).typed_graphs["result_d"] == fixture("fig2").typed_graphs["G_D"]
        code, out, _ = run(capsys, "decompose", FIX / "fig3.json", "--what", "condition", "--item", "ac_PA",
                           "--context", "bc", "--check")
        assert code == 0
        assert shape(loads(out).conditions["result_b"]) == shape(fixture("fig3").conditions["ac_PA"])

    def test_disagreeing_inputs(self, capsys):
        code, _, err = run(capsys, "amalgamate", FIX / "fig2.json", "--what", "graph",
                           "--items", "G_B", "G_C", "G_A", "--context", "bc")
        assert code == 2 and "error" in err


class TestLaws:
    def test_zero_cases(self, capsys):
        code, out, _ = run(capsys, "laws", "fact-3.5", "--cases", "0")
        assert code == 0 and json.loads(out)["cases"] == 0

    def test_small_campaign(self, capsys):
        code, out, _ = run(capsys, "laws", "fact-3.5", "thm-4.8", "--cases", "5", "--seed", "42")
        lines = [json.loads(x) for x in out.splitlines()]
        assert code == 0 and [x["law"] for x in lines] == ["fact-3.5", "thm-4.8"]
        assert all(x["failures"] == 0 for x in lines)

    def test_counterexample(self, capsys):
        code, out, _ = run(capsys, "laws", "counterexample-5.4")
        rep = json.loads(out)
        assert code == 0 and rep["cases"] == 1 and rep["notes"]

    def test_bad_bounds(self, capsys):
        assert run(capsys, "laws", "fact-3.5", "--max-nodes", "99")[0] == 2
        assert run(capsys, "laws", "fact-3.5", "--cases", "-1")[0] == 2
        assert run(capsys, "laws", "no-such-law")[0] == 2
        assert run(capsys, "laws", "--seed", str(2**64))[0] == 2

    def test_failures_written(self, capsys, tmp_path, monkeypatch):
        from nestcond import laws

        def broken(rng, b):
            return laws._fail("always", laws._ws(g=fixture("fig2").typed_graphs["G_A"]))

        monkeypatch.setitem(laws.LAWS, "fact-3.5", laws.Law("fact-3.5", "broken", broken))
        code, _, err = run(capsys, "laws", "fact-3.5", "--cases", "2", "--out", tmp_path)
        assert code == 1 and "always" in err
        files = sorted(tmp_path.glob("failure-*.json"))
        assert len(files) == 2
        ws = load(files[0])
        assert ws.meta["law"] == "fact-3.5" and ws.seed == 42

    def test_exhaustion_exit_code(self, capsys, monkeypatch):
        from nestcond import generators, laws

        def exhausted(rng, b):
            raise generators.GeneratorExhausted("no instance")

        monkeypatch.setitem(laws.LAWS, "fact-3.5", laws.Law("fact-3.5", "exhausted", exhausted))
        assert run(capsys, "laws", "fact-3.5", "--cases", "3")[0] == 3


class TestFixturesAndGenerate:
    def test_list(self, capsys):
        code, out, _ = run(capsys, "fixtures")
        assert code == 0 and out.count("\n") == 5 and "``" not in out

    def test_export(self, capsys, tmp_path):
        code, _, _ = run(capsys, "fixtures", "fig1", "fig5", "--out", tmp_path)
        assert code == 0
        assert (tmp_path / "fig1.json").read_text() == (FIX / "fig1.json").read_text()

    def test_print(self, capsys):
        code, out, _ = run(capsys, "fixtures", "fig2")
        assert code == 0 and out == (FIX / "fig2.json").read_text()

    def test_unknown(self, capsys):
        assert run(capsys, "fixtures", "fig9")[0] == 2

    def test_generate_deterministic(self, capsys):
        _, a, _ = run(capsys, "generate", "certificate", "--seed", "7")
        _, b, _ = run(capsys, "generate", "certificate", "--seed", "7")
        assert a == b and loads(a).solutions["cert"].verify()

    def test_generate_context(self, capsys):
        from nestcond.category import is_pushout_square

        code, out, _ = run(capsys, "generate", "amalgamation-context", "--seed", "11")
        assert code == 0 and is_pushout_square(loads(out).contexts["ctx"].square)

    def test_generate_initial_premises(self, capsys):
        from nestcond.conditions import is_positive

        code, out, _ = run(capsys, "generate", "thm-5.1-premises", "--seed", "3")
        ws = loads(out)
        assert code == 0
        c = ws.conditions["constraint"]
        assert is_positive(c) and c.root.graph.is_empty()
        assert c.type_graph == ws.contexts["ctx"].tg_a == ws.typed_graphs["host"].type_graph

    def test_generate_bad_bounds(self, capsys):
        assert run(capsys, "generate", "graph", "--depth", "99")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nestcond", "satisfy", str(FIX / "fig5.json"),
                           "--graph", "G_B", "--condition", "ac_PB", "--check"],
                          capture_output=True, text=True)
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["verdict"] is False


def test_usage_error():
    assert main(["satisfy"]) == 2
    assert main(["frobnicate"]) == 2
