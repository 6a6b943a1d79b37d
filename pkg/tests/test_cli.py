import io
import json
import pathlib

import pytest

from fano3.cli import main

SAMPLES = pathlib.Path(__file__).resolve().parent.parent / "docs" / "samples"

GOLDEN_COMMANDS = {
    "rr.json": ["rr", "--dim", "3", "--index", "1", "--genus", "12", "--t", "1", "--json"],
    "blowup.json": ["blowup", "--antik-cube", "22", "--curve", "1,0", "--json"],
    "scroll.json": ["scroll", "--weights", "2,2,1,1", "--intersect", "3M-4F,M-3F,M-F,M-F", "--json"],
    "wps.json": ["wps", "--weights", "1,1,1,2,3", "--degrees", "6", "--json"],
    "link.json": ["link", "--center", "line", "--genus-range", "7..13", "--show-excluded", "--json"],
    "rho2.json": ["rho2", "enumerate-primitive", "--json"],
    "catalog.json": ["catalog", "list", "--rho", "1", "--index", "2", "--json"],
}


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def test_rr_prints_section_count():
    code, text = run(["rr", "--dim", "3", "--index", "1", "--genus", "12", "--t", "1"])
    assert code == 0
    assert text.strip() == "14"


def test_rr_json_value():
    code, text = run(["rr", "--dim", "3", "--index", "2", "--degree", "5", "--t", "1", "--json"])
    assert code == 0
    payload = json.loads(text)
    assert payload["value"] == {"num": "7", "den": "1"}
    assert payload["h0_fundamental"] == 7


def test_link_single_genus_json():
    code, text = run(["link", "--center", "line", "--genus", "9", "--json"])
    assert code == 0
    payload = json.loads(text)
    assert len(payload) == 1
    cand = payload[0]
    assert cand["type"] == "B1"
    assert cand["fbar"] == [3, 4]
    assert cand["target"]["deg_z"] == 7
    assert cand["target"]["genus_z"] == 3


def test_catalog_verify_all_exit_zero():
    code, text = run(["catalog", "verify", "--all"])
    assert code == 0
    assert "0 failures" in text


def test_catalog_facts():
    code, text = run(["catalog", "facts", "v3", "--json"])
    assert code == 0
    payload = json.loads(text)
    assert {"subject": "v3", "predicate": "Irrational", "value": True} in payload


def test_usage_errors_exit_two():
    assert run(["nonsense"])[0] == 2
    assert run(["rr", "--dim", "3", "--index", "1"])[0] == 2  # neither degree nor genus
    assert run(["blowup", "--antik-cube", "22"])[0] == 2
    assert run(["scroll", "--weights", "1,1,1"])[0] == 2


def test_blowup_flag_on_small_cube():
    code, text = run(["blowup", "--antik-cube", "8", "--point"])
    assert code == 0
    assert "not big" in text


def test_json_round_trips_byte_identically():
    for argv in GOLDEN_COMMANDS.values():
        _, text = run(argv)
        reparsed = json.dumps(json.loads(text), sort_keys=True, separators=(",", ":")) + "\n"
        assert reparsed == text


def test_repeated_runs_are_byte_identical():
    for argv in GOLDEN_COMMANDS.values():
        assert run(argv) == run(argv)


def test_worker_count_invariance_of_link_json():
    base = ["link", "--center", "conic", "--genus-range", "7..20", "--show-excluded", "--json"]
    _, seq = run(base + ["--workers", "1"])
    _, par = run(base + ["--workers", "4"])
    assert seq == par


@pytest.mark.parametrize("name", sorted(GOLDEN_COMMANDS))
def test_golden_samples(name):
    code, text = run(GOLDEN_COMMANDS[name])
    assert code == 0
    assert text == (SAMPLES / name).read_text()
