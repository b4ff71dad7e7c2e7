import json

import pytest

import packing_coloring as pc


def test_petersen_refutation():
    p = pc.petersen_graph()
    assert p.vertex_count == 10 and p.edge_count == 15
    cert = pc.prove_uncolorable(p, pc.PackingSpec.parse("1,2,2,2,2,2"))
    assert cert.exhaustive and cert.uncolorable()
    spec7 = pc.PackingSpec.parse("1,2,2,2,2,2,2")
    coloring = pc.extend(p, spec7, [0] * 10)
    assert coloring is not None
    assert pc.verify(p, spec7, coloring).valid


def test_verify_reports_violations():
    c4 = pc.build_named_graph("cycle(4)")
    report = pc.verify(c4, pc.PackingSpec.parse("1,2"), [2, 1, 2, 1])
    assert not report.valid
    (v,) = report.violations
    assert (v.color, v.u, v.v, v.dist) == (2, 0, 2, 2)


def test_sharpness_gadget():
    report = pc.validate_sharpness_gadget(pc.sharpness_gadget(), 0)
    assert report.ok, report.failures
    doubled = pc.sharpness_doubled()
    assert pc.verify(
        doubled, pc.PackingSpec.parse("1,2,2,2,2,2"), report.doubled_coloring
    ).valid


def test_sample_config_parses():
    configs = pc.parse_config_file(pc.sample_config_text())
    assert len(configs) == 1
    cfg = configs[0]
    assert cfg.name == "C6C5C6_typeII_extra_edge"
    assert len(cfg.triples) == 9
    assert cfg.base.vertex_count == 40
    assert cfg.extra.edge_count == cfg.base.edge_count + 4


def test_check_reducible_roundtrip():
    base = pc.Graph(5, [(0, 1), (1, 2), (1, 3)])
    cfg = pc.Configuration()
    cfg.name = "easy"
    cfg.base = base
    cfg.extra = base
    cfg.triples = [pc.PendantTriple(1, 2, 3)]
    cfg.validate()
    result = pc.check_reducible(cfg, workers=2)
    assert result.reducible
    assert result.stats.precolorings_total == 2
    assert pc.format_result_lines(result) == "'easy' Reducible\n"
    payload = json.loads(pc.result_to_json(result, with_timing=False))
    assert payload["verdict"] == "reducible"


def test_pattern_table():
    assert len(pc.OUTER_PATTERNS) == 30
    assert pc.OUTER_PATTERNS[0] == [6, 1, 2]
    assert pc.OUTER_PATTERNS[-1] == [1, 5, 6]
    assert pc.FIRST_TRIPLE_COUNT == 2


def test_discharging():
    cube = pc.build_named_graph("cube")
    rot = pc.named_rotation("cube")
    assert sorted(pc.face_lengths(cube, rot)) == [4] * 6
    report = json.loads(pc.discharge_report(cube, rot))
    assert report["euler_total"] == "-48/4"
    assert report["euler_ok"] is True


def test_edge_list_roundtrip():
    g = pc.build_named_graph("dodecahedron")
    assert pc.parse_edge_list(pc.serialize_edge_list(g)) == g


def test_sdr():
    assert pc.sdr_assign([[1], [1]]) is None
    assignment = pc.sdr_assign([[1, 2], [2, 3], [3]])
    assert assignment is not None and len(set(assignment)) == 3


def test_bad_spec_raises():
    with pytest.raises(ValueError):
        pc.PackingSpec.parse("2,1")
