"""End-to-end tests of the command-line front end."""
import json

import pytest

from src.presentation.cli import run_command
from src.shared.constants import ExitCodes

E8_PAYLOAD = {"gram": [
    [2, -1, 0, 0, 0, 0, 0, 0],
    [-1, 2, -1, 0, 0, 0, 0, 0],
    [0, -1, 2, -1, 0, 0, 0, -1],
    [0, 0, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, 0],
    [0, 0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, 0, -1, 2, 0],
    [0, 0, -1, 0, 0, 0, 0, 2],
]}
K3_TO_ODD = ["--source", "K3", "--target", '{"b2_plus": 4, "b2_minus": 20, "parity": "odd"}']


@pytest.fixture
def e8_file(write_payload):
    return write_payload("e8.json", E8_PAYLOAD)


class TestClassify:
    def test_e8(self, e8_file, capsys):
        assert run_command(["classify", "--gram", e8_file]) == ExitCodes.OK
        assert capsys.readouterr().out.strip() == "rank 8, signature (8,0), parity even, unimodular"

    def test_not_unimodular(self, capsys):
        assert run_command(["classify", "--gram", "[[2]]"]) == ExitCodes.OK
        assert "not unimodular (det 2)" in capsys.readouterr().out

    def test_json_output(self, e8_file, capsys):
        assert run_command(["classify", "--gram", e8_file, "--json"]) == ExitCodes.OK
        response = json.loads(capsys.readouterr().out)
        assert response["success"]
        assert response["data"]["determinant"] == 1
        assert response["data"]["invariants"] == {"b2_plus": 8, "b2_minus": 0, "parity": "even"}

    def test_asymmetric_gram_is_an_input_error(self, capsys):
        assert run_command(["classify", "--gram", '{"gram": [[1, 2], [3, 1]]}']) == ExitCodes.INPUT_ERROR
        captured = capsys.readouterr()
        assert captured.out == ""
        assert captured.err.startswith("error:")


class TestDecide:
    def test_k3_degree_4_with_handle_assumption(self, capsys):
        argv = ["decide", *K3_TO_ODD, "--degree", "4", "--assume-no-1-3-handles"]
        assert run_command(argv) == ExitCodes.OK
        assert capsys.readouterr().out.strip() == "guaranteed-covering, branch set: nodal"

    def test_k3_degree_6_is_locally_flat(self, capsys):
        argv = ["decide", *K3_TO_ODD, "--degree", "6", "--assume-no-1-3-handles"]
        assert run_command(argv) == ExitCodes.OK
        assert "branch set: locally flat" in capsys.readouterr().out

    def test_without_handle_assumption(self, capsys):
        assert run_command(["decide", *K3_TO_ODD, "--degree", "4"]) == ExitCodes.OK
        assert "needs N without 1- and 3-handles" in capsys.readouterr().out

    def test_unknown_degree(self):
        assert run_command(["decide", *K3_TO_ODD, "--degree", "5"]) == ExitCodes.UNDECIDED

    def test_parity_obstruction(self, capsys):
        argv = ["decide", "--source", "CP2", "--target", "S2xS2", "--degree", "3"]
        assert run_command(argv) == ExitCodes.NEGATIVE
        assert "obstruction (parity)" in capsys.readouterr().out

    def test_full_report(self, capsys):
        assert run_command(["decide", *K3_TO_ODD]) == ExitCodes.OK
        out = capsys.readouterr().out
        assert out.startswith("embeddable: yes (table case 6)")
        assert "d=4:" in out

    def test_not_embeddable(self):
        assert run_command(["decide", "--source", "K3", "--target", "CP2"]) == ExitCodes.NEGATIVE

    def test_json_report(self, capsys):
        argv = ["decide", *K3_TO_ODD, "--assume-no-1-3-handles", "--json"]
        assert run_command(argv) == ExitCodes.OK
        data = json.loads(capsys.readouterr().out)["data"]
        assert data["case"] == 6
        assert data["degree_status"]["4"] == "guaranteed"
        assert data["degree_status"]["5"] == "unknown"
        assert data["least_covering_degree"] == 4

    def test_non_positive_degree(self):
        argv = ["decide", "--source", "CP2", "--target", "CP2", "--degree", "0"]
        assert run_command(argv) == ExitCodes.INPUT_ERROR

    def test_invalid_invariants(self):
        argv = ["decide", "--source", '{"b2_plus": 2, "b2_minus": 3, "parity": "even"}', "--target", "K3"]
        assert run_command(argv) == ExitCodes.INPUT_ERROR


class TestEmbedAndVerify:
    def test_embed_then_verify(self, tmp_path, capsys):
        out_file = tmp_path / "cert.json"
        argv = [
            "embed",
            "--source", '{"b2_plus": 1, "b2_minus": 1, "parity": "odd"}',
            "--target", "S2xS2",
            "--degree", "2",
            "-o", str(out_file),
        ]
        assert run_command(argv) == ExitCodes.OK
        assert "written to" in capsys.readouterr().out
        assert json.loads(out_file.read_text(encoding="utf-8"))["degree"] == 2

        assert run_command(["verify", str(out_file)]) == ExitCodes.OK
        assert capsys.readouterr().out.strip() == "OK"

    def test_verify_rejects_a_wrong_certificate(self, write_payload, capsys):
        path = write_payload("bad.json", {
            "degree": 3,
            "source_gram": [[1]],
            "target_gram": [[1, 0], [0, 1]],
            "matrix": [[1], [1]],
        })
        assert run_command(["verify", path]) == ExitCodes.NEGATIVE
        assert capsys.readouterr().out.strip() == "FAIL"

    def test_impossible_degree(self):
        argv = ["embed", "--source", "CP2", "--target", "CP2bar", "--degree", "1"]
        assert run_command(argv) == ExitCodes.NEGATIVE

    def test_unknown_degree(self):
        argv = ["embed", *K3_TO_ODD, "--degree", "5"]
        assert run_command(argv) == ExitCodes.UNDECIDED


class TestSearch:
    def test_roots_of_e8(self, e8_file, capsys):
        assert run_command(["search", "--gram", e8_file, "--norm", "2"]) == ExitCodes.OK
        assert capsys.readouterr().out.strip() == "240 vector(s) of norm 2"

    def test_no_odd_vectors_in_e8(self, e8_file):
        assert run_command(["search", "--gram", e8_file, "--norm", "1"]) == ExitCodes.NEGATIVE

    def test_frame(self, e8_file, capsys):
        assert run_command(["search", "--gram", e8_file, "--norm", "2", "--frame", "8", "--json"]) == ExitCodes.OK
        data = json.loads(capsys.readouterr().out)["data"]
        assert data["frame"] and data["count"] == 8

    def test_embedding_found(self, tmp_path):
        out_file = tmp_path / "found.json"
        argv = ["search", "--source", "[[1]]", "--target", "[[1, 0], [0, 1]]", "--degree", "2",
                "-o", str(out_file)]
        assert run_command(argv) == ExitCodes.OK
        assert run_command(["verify", str(out_file)]) == ExitCodes.OK

    def test_embedding_proven_impossible(self, e8_file):
        argv = ["search", "--source", "[[1]]", "--target", e8_file, "--degree", "1"]
        assert run_command(argv) == ExitCodes.NEGATIVE

    def test_indefinite_target_is_inconclusive(self, capsys):
        argv = ["search", "--source", "[[1]]", "--target", "[[0, 1], [1, 0]]", "--degree", "1",
                "--bound", "5"]
        assert run_command(argv) == ExitCodes.UNDECIDED
        assert capsys.readouterr().out.strip() == "bounded-none (coordinate bound 5)"

    def test_missing_arguments(self, capsys):
        assert run_command(["search", "--gram", "[[1]]"]) == ExitCodes.INPUT_ERROR
        assert "needs --norm" in capsys.readouterr().err


class TestLinksAndPresets:
    def test_from_link(self, capsys):
        assert run_command(["from-link", '{"framings": [0, 0], "linking": [[0, 1], [1, 0]]}']) == ExitCodes.OK
        assert "invariants: (1, 1, even)" in capsys.readouterr().out

    def test_from_asymmetric_link(self):
        link = '{"framings": [0, 0], "linking": [[0, 1], [2, 0]]}'
        assert run_command(["from-link", link]) == ExitCodes.INPUT_ERROR

    def test_preset(self, capsys):
        assert run_command(["preset", "K3#2CP2bar"]) == ExitCodes.OK
        assert capsys.readouterr().out.strip() == "K3#2CP2bar: (3, 21, odd)"

    def test_preset_listing(self, capsys):
        assert run_command(["preset"]) == ExitCodes.OK
        assert "K3" in capsys.readouterr().out.split()

    def test_unknown_preset(self):
        assert run_command(["preset", "T4"]) == ExitCodes.INPUT_ERROR

    def test_normal_form(self, capsys):
        assert run_command(["normal-form", "--form", "S2xS2", "--json"]) == ExitCodes.OK
        data = json.loads(capsys.readouterr().out)["data"]
        assert data["gram"] == [[0, 1], [1, 0]]


class TestParser:
    def test_missing_subcommand_exits_with_input_error(self):
        with pytest.raises(SystemExit) as excinfo:
            run_command([])
        assert excinfo.value.code == ExitCodes.INPUT_ERROR

    def test_bad_degree_type(self):
        with pytest.raises(SystemExit) as excinfo:
            run_command(["decide", "--source", "CP2", "--target", "CP2", "--degree", "two"])
        assert excinfo.value.code == ExitCodes.INPUT_ERROR
