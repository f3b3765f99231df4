"""Smoke tests for the python module and the CLI JSON surfaces."""

import json
import os
import subprocess

import pytest

ogk = pytest.importorskip("ogk")


def test_generate_and_structure():
    g = ogk.generate("K 4 4")
    assert g.vertex_count == 8
    assert g.edge_count == 16
    assert ogk.diameter(g) == 2
    assert ogk.max_degree(g) == 4
    parts = ogk.bipartition(g)
    assert parts["bipartite"]
    assert parts["u_side"] == [0, 1, 2, 3]


def test_odd_cycle_witness():
    parts = ogk.bipartition(ogk.generate("cycle 5"))
    assert not parts["bipartite"]
    assert len(parts["odd_cycle"]) % 2 == 1


def test_solve_and_verify():
    g = ogk.generate("K 2 2")
    res = ogk.solve_chi_og(g)
    assert res.chi == 5
    report = ogk.verify(g, res.witness)
    assert report.valid
    assert ogk.parity_split(g, res.witness)["consistent"]


def test_infinite_for_odd_cycles():
    res = ogk.solve_chi_og(ogk.generate("cycle 7"))
    assert res.infinite
    assert res.chi is None


def test_constructions_verify():
    for family, builder, k in [
        ("K 6 4", lambda: ogk.label_complete_bipartite(6, 4), 18),
        ("K 5 4 - K1 2", lambda: ogk.label_near_complete(5, 4, 2), 13),
        ("mobius 18", lambda: ogk.label_mobius(18), 10),
    ]:
        g = ogk.generate(family)
        lab = builder()
        assert lab.k == k
        assert ogk.verify(g, lab).valid


def test_bounds_and_known_exact():
    report = ogk.bound_report(ogk.generate("mobius 18"), family="mobius 18")
    assert report["best_upper"] == 10
    assert ogk.known_exact("K 4 2") == 9
    assert ogk.known_exact("cycle 6") is None


def test_enumerate_classification():
    d = ogk.enumerate_optimal_deduped(ogk.generate("K 2 2"), 5)
    assert d["pairs"] == [([1, 5], [2, 4])]
    assert d["labeling_count"] == 8


def test_invalid_parameters_raise_value_error():
    with pytest.raises(ValueError):
        ogk.generate("mobius 7")
    with pytest.raises(ValueError):
        ogk.label_complete_bipartite(2, 3)


def _cli():
    path = os.environ.get("OGK_CLI")
    if not path or not os.path.exists(path):
        pytest.skip("OGK_CLI not set")
    return path


def _schemas():
    path = os.environ.get("OGK_SCHEMAS")
    if not path or not os.path.isdir(path):
        pytest.skip("OGK_SCHEMAS not set")
    return path


def _validate(payload, schema_name):
    jsonschema = pytest.importorskip("jsonschema")
    with open(os.path.join(_schemas(), schema_name)) as fh:
        schema = json.load(fh)
    jsonschema.validate(payload, schema)


@pytest.mark.parametrize(
    "args,schema",
    [
        (["gen", "K 3 3"], "graph.schema.json"),
        (["solve", "K 3 2"], "solve.schema.json"),
        (["solve", "cycle 5"], "solve.schema.json"),
        (["bound", "K 4 2"], "bounds.schema.json"),
        (["chi", "cycle 7"], "coloring.schema.json"),
        (["exists", "path 3", "-k", "4"], "exists.schema.json"),
        (["enumerate", "K 2 2", "-k", "5", "--dedupe"], "enumerate_dedupe.schema.json"),
        (["construct", "K 5 4 - K1 2"], "construct.schema.json"),
        (["oracle", "path 3"], "oracle.schema.json"),
    ],
)
def test_cli_json_matches_schema(args, schema):
    out = subprocess.run([_cli(), *args], capture_output=True, text=True, check=True)
    _validate(json.loads(out.stdout), schema)


def test_cli_verify_schema(tmp_path):
    cli = _cli()
    edges = subprocess.run([cli, "gen", "K 2 2", "--format", "text"],
                           capture_output=True, text=True, check=True).stdout
    graph_file = tmp_path / "g.edges"
    graph_file.write_text(edges)
    lab_file = tmp_path / "lab.json"
    lab_file.write_text(json.dumps({"k": 5, "labels": [1, 5, 2, 4]}))
    out = subprocess.run([cli, "verify", str(graph_file), str(lab_file)],
                         capture_output=True, text=True, check=True)
    payload = json.loads(out.stdout)
    _validate(payload, "verification.schema.json")
    assert payload["valid"]
