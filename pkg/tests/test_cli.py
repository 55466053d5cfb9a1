import json

import pytest

from newton_strata import (
    PELSlopeDatum,
    SignatureDatum,
    build_poset,
    bueltel_wedhorn,
    condition_star,
    enumerate_siegel,
    hypersymmetric_verdict,
    is_B_symmetric,
    is_balanced,
    mu_ordinary,
    restrict,
    subfield_transfer,
    theorem_checklist,
)
from newton_strata.cli import execute
from newton_strata.hypersym import verdict_to_json

DATUM_FILES = ["example-3-5.json", "example-3-6.json", "remark-1.json", "remark-2.json"]


def run(*argv, stdin=b""):
    return execute(list(argv), stdin=stdin)


def result_of(out: bytes) -> dict:
    payload = json.loads(out.decode())
    assert set(payload) == {"command", "input_digest", "result"}
    return payload["result"]


def load_datum(corpus, name):
    return PELSlopeDatum.from_json(json.loads((corpus / name).read_text()))


# -- commands mirror the library ---------------------------------------------------


@pytest.mark.parametrize("name", DATUM_FILES)
def test_check_commands_mirror_library(corpus, name):
    path = str(corpus / name)
    datum = load_datum(corpus, name)

    code, out = run("check-balanced", "--input", path)
    assert code == 0 and result_of(out) == {"balanced": is_balanced(datum)}

    code, out = run("check-symmetric", "--input", path)
    assert code == 0 and result_of(out) == {"symmetric": is_B_symmetric(datum)}

    code, out = run("check-star", "--input", path)
    assert code == 0 and result_of(out) == {"condition_star": condition_star(datum)}

    code, out = run("verdict", "--input", path)
    assert code == 0
    assert result_of(out) == verdict_to_json(hypersymmetric_verdict(datum))

    code, out = run("restrict", "--input", path)
    assert code == 0 and result_of(out) == restrict(datum).to_json()

    code, out = run("hypotheses", "--input", path)
    report = theorem_checklist(datum)
    assert code == 0 and result_of(out) == {
        "hypersymmetric": report.hypersymmetric,
        "branch": report.branch.value,
        "satisfied": report.satisfied,
    }


def test_transfer_mirrors_library(corpus):
    for name in ["example-3-5.json", "remark-1.json", "remark-2.json"]:
        datum = load_datum(corpus, name)
        code, out = run("transfer", "--input", str(corpus / name))
        assert code == 0
        assert result_of(out) == {"transfer": subfield_transfer(datum).value}


def test_transfer_precondition_is_input_error(corpus):
    code, out = run("transfer", "--input", str(corpus / "example-3-6.json"))
    assert code == 2 and out.startswith(b"error:")


def test_check_balanced_with_brauer_flag(corpus):
    code, out = run(
        "check-balanced", "--brauer", "2", "--input", str(corpus / "remark-2.json")
    )
    assert code == 0
    assert result_of(out) == {"balanced": True, "zeta_b": False}


def test_muord_mirrors_library(corpus):
    raw = json.loads((corpus / "signature-3-5.json").read_text())
    sig = SignatureDatum.from_json(raw)
    polys = mu_ordinary(sig)
    code, out = run("muord", "--input", str(corpus / "signature-3-5.json"))
    assert code == 0
    assert result_of(out) == {
        "polygons": [
            {"name": o.name, "polygon": polys[o.name].to_json()} for o in sig.orbits
        ]
    }


def test_poset_mirrors_library():
    poset = build_poset(enumerate_siegel(2))
    code, out = run("poset", "--g", "2")
    assert code == 0
    assert result_of(out) == {
        "nodes": [n.to_json() for n in poset.nodes],
        "cover_edges": [list(e) for e in poset.cover_edges],
        "basic_index": poset.basic_index,
        "ordinary_index": poset.ordinary_index,
    }


def test_bw_mirrors_library():
    code, out = run("bw", "--n", "6", "--r", "2", "--scaling", "times_r")
    assert code == 0
    assert result_of(out) == {
        "polygon": bueltel_wedhorn(6, 2, "times_r").to_json()
    }


def test_weil_command(corpus):
    code, out = run("weil", "--input", str(corpus / "weil-onethird.json"))
    assert code == 0
    assert result_of(out)["a"] == 6


# -- stdin, formats, determinism -----------------------------------------------------


def test_stdin_input(corpus):
    raw = (corpus / "example-3-5.json").read_bytes()
    code, out = run("check-symmetric", stdin=raw)
    assert code == 0 and result_of(out) == {"symmetric": True}


def test_input_digest_tracks_bytes(corpus):
    raw = (corpus / "example-3-5.json").read_bytes()
    _, out1 = run("check-symmetric", stdin=raw)
    _, out2 = run("check-symmetric", "--input", str(corpus / "example-3-5.json"))
    assert json.loads(out1)["input_digest"] == json.loads(out2)["input_digest"]
    _, out3 = run("check-symmetric", stdin=raw.replace(b"3", b"2", 1))
    assert json.loads(out3)["input_digest"] != json.loads(out1)["input_digest"]


@pytest.mark.parametrize("fmt", ["json", "text"])
def test_byte_determinism(corpus, fmt):
    for name in DATUM_FILES:
        for command in ["check-balanced", "check-symmetric", "verdict", "restrict"]:
            argv = [command, "--format", fmt, "--input", str(corpus / name)]
            assert run(*argv) == run(*argv)


def test_text_format_uses_exponent_notation(corpus):
    code, out = run(
        "verdict", "--format", "text", "--input", str(corpus / "example-3-5.json")
    )
    assert code == 0
    assert out.decode() == (
        "level: hypersymmetric\n"
        "component 1:\n"
        "  v: (0)^1\n"
        "  vstar: (1)^1\n"
        "component 2:\n"
        "  v: (1/2)^3\n"
        "  vstar: (1/2)^3\n"
    )


def test_dot_output_matches_golden(corpus):
    code, out = run("poset", "--g", "2", "--dot")
    assert code == 0
    assert out == (corpus / "golden" / "poset-g2.dot").read_bytes()


# -- exit codes ------------------------------------------------------------------------


def test_malformed_fixtures_exit_2(corpus):
    fixtures = sorted((corpus / "malformed").glob("*.json"))
    assert len(fixtures) == 5
    for path in fixtures:
        code, out = run("verdict", "--input", str(path))
        assert code == 2, path.name
        assert out.startswith(b"error:") and out.endswith(b"\n")
        assert out.count(b"\n") == 1  # one-line diagnostic


def test_slope_diagnostic_names_place(corpus):
    code, out = run(
        "verdict", "--input", str(corpus / "malformed" / "slope-out-of-range.json")
    )
    assert code == 2 and b"u1" in out


def test_unknown_flags_and_commands_exit_2():
    assert run("verdict", "--frobnicate")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("poset")[0] == 2  # missing --g
    assert run("poset", "--g", "13")[0] == 2  # above the configured bound
    assert run("bw", "--n", "4", "--r", "3")[0] == 2  # r > n/2


def test_missing_input_file_exits_2(tmp_path):
    code, out = run("verdict", "--input", str(tmp_path / "absent.json"))
    assert code == 2


def test_internal_error_exits_1(monkeypatch, corpus):
    import newton_strata.cli as cli_mod

    def boom(_):
        raise RuntimeError("wired to fail")

    monkeypatch.setattr(cli_mod.hypersym, "hypersymmetric_verdict", boom)
    code, out = run("verdict", "--input", str(corpus / "example-3-5.json"))
    assert code == 1 and out.startswith(b"internal error:")


def test_verdict_truth_never_leaks_into_exit_code(corpus):
    # a None verdict still exits 0; the level is in the payload
    code, out = run("verdict", "--input", str(corpus / "example-3-6.json"))
    assert code == 0 and result_of(out)["level"] == "none"


def test_console_entry_point(corpus):
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "newton_strata", "poset", "--g", "2", "--dot"],
        capture_output=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == (corpus / "golden" / "poset-g2.dot").read_bytes()

    proc = subprocess.run(
        [sys.executable, "-m", "newton_strata", "check-symmetric"],
        input=(corpus / "example-3-5.json").read_bytes(),
        capture_output=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"] == {"symmetric": True}

    proc = subprocess.run(
        [sys.executable, "-m", "newton_strata", "verdict", "--input", "/nonexistent"],
        capture_output=True,
    )
    assert proc.returncode == 2 and proc.stderr.startswith(b"error:")
