import json
import math
import random

import pytest

from bergecycles.cli import main as cli_main
from bergecycles.connectivity import is_two_connected
from bergecycles.constructions import two_hub_blocks
from bergecycles.errors import BadParams
from bergecycles.harness import (CampaignSpec, exhaustive_instances,
                                 emit_report, instance_hash,
                                 load_certificate, run_campaign,
                                 sample_instance, verify_codiameter,
                                 verify_proposition, verify_sharpness,
                                 verify_theorem)
from bergecycles.search import circumference


def test_campaign_spec_validation():
    CampaignSpec(claim="circumference", r=3, k=5, n=6)
    with pytest.raises(BadParams):
        CampaignSpec(claim="unknown", r=3, n=6)
    with pytest.raises(BadParams):
        CampaignSpec(claim="circumference", r=3, k=4, n=6)  # r > k-2
    with pytest.raises(BadParams):
        CampaignSpec(claim="small_cycle", r=3, n=3)
    with pytest.raises(BadParams):
        CampaignSpec(claim="codiameter", r=3, k=5, n=9)  # n < 2k
    with pytest.raises(BadParams):
        CampaignSpec(claim="circumference", r=3, k=5, n=6, mode="stream")


def test_exhaustive_enumeration_counts():
    # without degree filter or dedup: all subsets of the 4 triples on 4 verts
    raw = list(exhaustive_instances(4, 3, 0, dedup=False))
    assert len(raw) == 2 ** 4
    deduped = list(exhaustive_instances(4, 3, 0, dedup=True))
    # one representative per subset size 0..4 (all same-size subsets are
    # isomorphic here: complement is a vertex subset)
    assert len(deduped) == 5


def test_exhaustive_degree_filter():
    for h in exhaustive_instances(5, 3, 3, dedup=False):
        assert h.min_degree() >= 3


def test_sampling_is_deterministic():
    a = sample_instance(7, 3, 3, random.Random(99))
    b = sample_instance(7, 3, 3, random.Random(99))
    assert a.edges == b.edges
    c = sample_instance(7, 3, 3, random.Random(100))
    assert a.edges != c.edges or a.n != c.n


def test_sampling_respects_constraints():
    rng = random.Random(0)
    for seed in range(5):
        h = sample_instance(7, 3, 4, random.Random(seed))
        assert h.min_degree() >= 4
        assert is_two_connected(h)


def test_theorem_campaign_infeasible_degree():
    # k = n: required degree C(5,2)+1 = 11 > max degree C(5,2) = 10
    spec = CampaignSpec(claim="circumference", r=3, k=6, n=6)
    rep = verify_theorem(spec)
    assert rep.instances_checked == 0
    assert rep.notes and "vacuous" in rep.notes[0]


def test_proposition_campaign_small():
    spec = CampaignSpec(claim="small_cycle", r=3, n=5)
    rep = verify_proposition(spec)
    assert rep.ok
    assert rep.passes == rep.instances_checked
    assert rep.passes + len(rep.failures) + rep.skipped \
        == rep.instances_checked
    assert rep.heuristic_gaps  # gap histogram was recorded


def test_codiameter_campaign_sharpness_only():
    spec = CampaignSpec(claim="codiameter", r=3, k=5, n=10, mode="sample",
                        sample_count=2, seed=1)
    rep = verify_codiameter(spec)
    assert rep.ok and rep.instances_checked == 3  # 1 sharpness + 2 sampled


def test_sharpness_report():
    rep = verify_sharpness(5, 3)
    assert rep.ok and rep.instances_checked == 2
    with pytest.raises(BadParams):
        verify_sharpness(4, 3)


def test_run_campaign_dispatch():
    spec = CampaignSpec(claim="small_cycle", r=3, n=4)
    assert run_campaign(spec).claim == "small_cycle"


def test_report_roundtrip(tmp_path):
    rep = verify_sharpness(5, 3)
    out = tmp_path / "report.json"
    emit_report(rep, out)
    doc = json.loads(out.read_text())
    assert doc["claim"] == "sharpness"
    assert doc["passes"] == 2 and doc["failures"] == []


def test_failure_certificate_reproduces():
    # inject a fake failure and confirm the certificate round-trips to a
    # hypergraph with the same measured circumference
    h = two_hub_blocks(3, 2)
    measured = circumference(h)
    failure = {"hash": instance_hash(h), "measured": measured,
               "required": 99, "certificate": h.to_document()}
    again = load_certificate(failure)
    assert circumference(again) == measured
    assert instance_hash(again) == failure["hash"]


def test_budget_skips_never_fail():
    spec = CampaignSpec(claim="small_cycle", r=3, n=4, budget=1)
    rep = verify_proposition(spec)
    assert not rep.failures
    assert rep.skipped > 0 and rep.skip_reasons.get("budget", 0) > 0


# ---------------------------------------------------------------------------
# CLI

def test_cli_gen_and_analyze(tmp_path, capsys):
    path = tmp_path / "h.json"
    assert cli_main(["gen", "hubs", "--r", "3", "--s", "2",
                     "-o", str(path)]) == 0
    assert cli_main(["circumference", str(path)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["length"] == 4
    assert cli_main(["codiameter", str(path)]) == 0
    assert json.loads(capsys.readouterr().out)["codiameter"] == 2
    assert cli_main(["connectivity", str(path), "--k", "2"]) == 0
    assert json.loads(capsys.readouterr().out)["kind"] == "connected_k"
    assert cli_main(["grow", str(path)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["length"] == 4 and doc["exact"] is False


def test_cli_gen_bad_params(capsys):
    assert cli_main(["gen", "hubs", "--r", "2", "--s", "2"]) == 2


def test_cli_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{broken")
    assert cli_main(["circumference", str(bad)]) == 2
    assert cli_main(["circumference", str(tmp_path / "missing.json")]) == 2


def test_cli_verify_exit_codes(tmp_path, capsys):
    out = tmp_path / "rep.json"
    code = cli_main(["verify", "small_cycle", "--r", "3", "--n", "4",
                     "-o", str(out)])
    assert code == 0
    assert json.loads(out.read_text())["failures"] == []
    assert cli_main(["verify", "sharpness", "--r", "3", "--k", "5"]) == 0
    # missing required argument
    assert cli_main(["verify", "circumference", "--r", "3", "--k", "5"]) == 2


def test_cli_budget_exhausted(tmp_path, capsys):
    path = tmp_path / "h.json"
    assert cli_main(["gen", "complete", "--n", "6", "--r", "3",
                     "-o", str(path)]) == 0
    assert cli_main(["circumference", str(path), "--budget", "3"]) == 2
