import json
import subprocess
import sys

import pytest

import topolab as T
from topolab.cli import main


def run_cli(*argv, capsys=None):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# ------------------------------------------------------------------ generate

def test_generate_exact_bytes(capsys):
    code, out, err = run_cli("generate", "sierpinski", capsys=capsys)
    assert code == 0 and err == ""
    assert out == '{"n":2,"opens":[[],[0],[0,1]]}\n'


def test_generate_with_params_and_output_file(tmp_path, capsys):
    target = tmp_path / "k.json"
    code, out, _ = run_cli("generate", "khalimsky_interval", "4",
                           "-o", str(target), capsys=capsys)
    assert code == 0
    assert json.loads(target.read_text()) == \
        {"n": 4, "opens": [[], [1], [3], [0, 1], [1, 3],
                           [0, 1, 3], [1, 2, 3], [0, 1, 2, 3]]}


def test_generate_unknown_name(capsys):
    code, out, err = run_cli("generate", "moebius", capsys=capsys)
    assert code == 1 and "moebius" in err


def test_generate_bad_arity(capsys):
    code, _, err = run_cli("generate", "discrete", capsys=capsys)
    assert code == 1
    code, _, err = run_cli("generate", "discrete", "2", "3", capsys=capsys)
    assert code == 1


# ------------------------------------------------------------------ classify

def test_classify(tmp_path, capsys):
    sp = tmp_path / "s.json"
    sp.write_text(T.sierpinski().to_json())
    code, out, _ = run_cli("classify", "-s", str(sp), "-A", "0", capsys=capsys)
    assert code == 0
    rec = json.loads(out)
    assert tuple(rec) == T.CLASS_IDS
    assert rec["open"] and not rec["alpha_m_closed"]


def test_classify_empty_subset(tmp_path, capsys):
    sp = tmp_path / "s.json"
    sp.write_text(T.sierpinski().to_json())
    code, out, _ = run_cli("classify", "-s", str(sp), "-A", "", capsys=capsys)
    assert code == 0
    assert all(json.loads(out)[k] for k in ("clopen", "alpha_m_closed"))


def test_classify_bad_subset(tmp_path, capsys):
    sp = tmp_path / "s.json"
    sp.write_text(T.sierpinski().to_json())
    for bad in ("2", "x", "0,,1", "-1"):
        code, _, err = run_cli("classify", "-s", str(sp), "-A", bad, capsys=capsys)
        assert code == 1, bad
        assert err


def test_classify_missing_file(capsys):
    code, _, err = run_cli("classify", "-s", "/nonexistent.json", "-A", "0",
                           capsys=capsys)
    assert code == 1 and err


def test_classify_invalid_topology(tmp_path, capsys):
    sp = tmp_path / "bad.json"
    sp.write_text('{"n":2,"opens":[[],[0],[1]]}')
    code, _, err = run_cli("classify", "-s", str(sp), "-A", "0", capsys=capsys)
    assert code == 1 and "full set" in err


# ------------------------------------------------------------------ axioms

def test_axioms_report(tmp_path, capsys):
    sp = tmp_path / "s.json"
    sp.write_text(T.sierpinski().to_json())
    code, out, _ = run_cli("axioms", "-s", str(sp), capsys=capsys)
    assert code == 0
    rec = json.loads(out)
    assert (rec["T0"], rec["T1"], rec["T_half"], rec["T_alpha_m"],
            rec["singleton_dichotomy"]) == (True, False, True, True, False)
    assert rec["witnesses"]["singleton_dichotomy"] == [0]


# ------------------------------------------------------------------ check-map

def test_check_map(tmp_path, capsys):
    mp = tmp_path / "m.json"
    mp.write_text(T.SpaceMap(T.discrete(1), T.indiscrete(2), (0,)).to_json())
    code, out, _ = run_cli("check-map", "-m", str(mp), capsys=capsys)
    assert code == 0
    rec = json.loads(out)
    assert tuple(rec) == T.MAP_PROPERTY_IDS
    assert rec["alpha_m_closed_map"] and not rec["closed_map"]


def test_check_map_mismatched_assignment(tmp_path, capsys):
    mp = tmp_path / "m.json"
    mp.write_text('{"domain":{"n":1,"opens":[[],[0]]},'
                  '"codomain":{"n":2,"opens":[[],[0,1]]},"assignment":[2]}')
    code, _, err = run_cli("check-map", "-m", str(mp), capsys=capsys)
    assert code == 1 and err


# ------------------------------------------------------------------ enumerate

def test_enumerate_stream(capsys):
    code, out, _ = run_cli("enumerate", "-n", "2", capsys=capsys)
    assert code == 0
    lines = out.strip().split("\n")
    assert lines == ['{"n":2,"opens":[[],[0],[1],[0,1]]}',
                     '{"n":2,"opens":[[],[0],[0,1]]}',
                     '{"n":2,"opens":[[],[1],[0,1]]}',
                     '{"n":2,"opens":[[],[0,1]]}']
    for line in lines:
        T.space_from_json(line)


def test_enumerate_upto_homeo(capsys):
    code, out, _ = run_cli("enumerate", "-n", "3", "--upto-homeo", capsys=capsys)
    assert code == 0
    assert len(out.strip().split("\n")) == 9


def test_enumerate_too_large(capsys):
    code, _, err = run_cli("enumerate", "-n", "6", capsys=capsys)
    assert code == 2 and "capped" in err


# ------------------------------------------------------------------ verify

def test_verify_single_claim(tmp_path, capsys):
    out_json = tmp_path / "r.json"
    code, out, _ = run_cli("verify", "--claim", "T3_2_ab", "--max-points", "2",
                           "--json", str(out_json), capsys=capsys)
    assert code == 0
    assert "refuted" in out and "T3_2_ab" in out
    payload = json.loads(out_json.read_text())
    assert payload["reports"][0]["outcome"] == "refuted"
    assert payload["reports"][0]["witnesses"][0]["spaces"][0] == \
        {"n": 2, "opens": [[], [0], [0, 1]]}


def test_verify_scoreboard_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    code1, out1, _ = run_cli("verify", "--max-points", "2", "--json", str(a),
                             capsys=capsys)
    code2, out2, _ = run_cli("verify", "--max-points", "2", "--json", str(b),
                             capsys=capsys)
    assert code1 == code2 == 0
    assert a.read_bytes() == b.read_bytes()
    # human tables agree except wall-clock columns
    strip = lambda s: [l.rsplit(None, 1)[0] for l in s.splitlines() if l]
    assert strip(out1) == strip(out2)
    payload = json.loads(a.read_text())
    assert len(payload["reports"]) == 17
    assert [r["claim"] for r in payload["reports"]] == list(T.CLAIM_IDS)


def test_verify_parallel_matches_serial(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run_cli("verify", "--claim", "T3_9b", "--max-points", "3",
            "--json", str(a), capsys=capsys)
    run_cli("verify", "--claim", "T3_9b", "--max-points", "3", "--jobs", "2",
            "--json", str(b), capsys=capsys)
    assert a.read_bytes() == b.read_bytes()


def test_verify_witness_limit_flags(tmp_path, capsys):
    out_json = tmp_path / "r.json"
    run_cli("verify", "--claim", "T3_2_ab", "--max-points", "3",
            "--witness-limit", "2", "--json", str(out_json), capsys=capsys)
    assert len(json.loads(out_json.read_text())["reports"][0]["witnesses"]) == 2
    run_cli("verify", "--claim", "T3_2_ab", "--max-points", "3",
            "--all-witnesses", "--json", str(out_json), capsys=capsys)
    rep = json.loads(out_json.read_text())["reports"][0]
    assert len(rep["witnesses"]) == rep["failures"] == 11


def test_verify_note_line(capsys):
    code, out, _ = run_cli("verify", "--claim", "T3_2_ab", "--max-points", "2",
                           capsys=capsys)
    assert code == 0
    assert out.splitlines()[0].startswith("note:")
    assert "not a proof" in out


def test_verify_scope_too_large(capsys):
    code, _, err = run_cli("verify", "--max-points", "6", capsys=capsys)
    assert code == 2


def test_verify_unknown_claim(capsys):
    code, _, err = run_cli("verify", "--claim", "X", capsys=capsys)
    assert code == 1 and "invalid choice" in err


def test_unknown_subcommand(capsys):
    code, _, err = run_cli("frobnicate", capsys=capsys)
    assert code == 1 and err


def test_no_args_shows_usage(capsys):
    code, _, err = run_cli(capsys=capsys)
    assert code == 1 and "usage" in err.lower()


# ------------------------------------------------------------------ entry point

def test_console_script_and_module_entry():
    out = subprocess.run([sys.executable, "-m", "topolab", "generate",
                          "sierpinski"], capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout == '{"n":2,"opens":[[],[0],[0,1]]}\n'
    out = subprocess.run(["topolab", "enumerate", "-n", "1"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout == '{"n":1,"opens":[[],[0]]}\n'


def test_round_trip_generate_classify(tmp_path, capsys):
    # every generated record feeds back into the other subcommands
    sp = tmp_path / "x.json"
    for name, params in (("sierpinski", ()), ("discrete", ("3",)),
                         ("khalimsky_interval", ("5",)),
                         ("particular_point", ("3", "1"))):
        code, out, _ = run_cli("generate", name, *params, "-o", str(sp),
                               capsys=capsys)
        assert code == 0
        code, out, _ = run_cli("axioms", "-s", str(sp), capsys=capsys)
        assert code == 0
        json.loads(out)
