"""Tests for the command-line client."""

import json

import pytest
from fastapi.testclient import TestClient

from seatmatch import cli, service


def run(args, capsys):
    code = cli.main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSolve:
    def test_feasible_text(self, capsys):
        code, out, _ = run(["solve", "--v", "18", "--list", "1^5,7^4"], capsys)
        assert code == cli.EXIT_FEASIBLE
        assert "status: feasible" in out
        assert "route: two-length:3/direct-odd" in out
        assert "K_18:" in out

    def test_feasible_json(self, capsys):
        code, out, _ = run(["--format", "json", "solve", "--v", "18",
                            "--list", "1^5,7^4"], capsys)
        assert code == cli.EXIT_FEASIBLE
        data = json.loads(out)
        assert data["verdict"]["status"] == "feasible"
        assert data["matching"]["v"] == 18

    def test_format_flag_after_subcommand(self, capsys):
        code, out, _ = run(["solve", "--v", "18", "--list", "1^5,7^4",
                            "--format", "json"], capsys)
        assert code == cli.EXIT_FEASIBLE
        assert json.loads(out)["verified"] is True

    def test_infeasible_exit_code(self, capsys):
        code, out, _ = run(["decide", "--v", "20", "--list", "4^3,6^7"], capsys)
        assert code == cli.EXIT_INFEASIBLE
        assert "infeasible" in out

    def test_unknown_exit_code(self, capsys):
        code, out, _ = run(["solve", "--v", "24", "--list", "3^4,5^4,7^4",
                            "--no-oracle"], capsys)
        assert code == cli.EXIT_UNKNOWN
        assert "unknown" in out

    def test_list_from_file(self, tmp_path, capsys):
        path = tmp_path / "list.txt"
        path.write_text("1^5,7^4\n")
        code, out, _ = run(["solve", "--v", "18", "--input", str(path)], capsys)
        assert code == cli.EXIT_FEASIBLE

    def test_usage_errors(self, capsys):
        assert run(["solve", "--v", "18"], capsys)[0] == cli.EXIT_USAGE
        assert run(["solve", "--list", "1^5,7^4"], capsys)[0] == cli.EXIT_USAGE
        assert run(["frobnicate"], capsys)[0] == cli.EXIT_USAGE
        code, _, err = run(["solve", "--v", "19", "--list", "1^5,7^4"], capsys)
        assert code == cli.EXIT_USAGE and "error" in err


class TestVerify:
    def test_ok_and_fail(self, tmp_path, capsys):
        path = tmp_path / "matching.json"
        path.write_text(json.dumps(
            {"v": 10, "edges": [[0, 1], [6, 8], [2, 5], [3, 7], [4, 9]]}))
        code, out, _ = run(["verify", "--input", str(path),
                            "--list", "1,2,3,4,5"], capsys)
        assert code == cli.EXIT_FEASIBLE and "ok" in out
        code, out, _ = run(["verify", "--input", str(path), "--list", "1^5"],
                           capsys)
        assert code == cli.EXIT_INFEASIBLE and "failed" in out

    def test_missing_file(self, capsys):
        code, _, err = run(["verify", "--input", "/nonexistent.json",
                            "--list", "1^5"], capsys)
        assert code == cli.EXIT_USAGE


class TestOracle:
    def test_search(self, capsys):
        code, out, _ = run(["oracle", "--v", "6", "--list", "1^2,3"], capsys)
        assert code == cli.EXIT_FEASIBLE and "K_6:" in out

    def test_count(self, capsys):
        code, out, _ = run(["oracle", "--v", "6", "--list", "1^2,3",
                            "--count"], capsys)
        assert code == cli.EXIT_FEASIBLE and "solutions: 3" in out

    def test_not_found(self, capsys):
        code, out, _ = run(["oracle", "--v", "6", "--list", "2^3"], capsys)
        assert code == cli.EXIT_INFEASIBLE and "no matching" in out


class TestConjectureAndSkolem:
    def test_conjecture(self, capsys):
        code, out, _ = run(["conjecture", "--p", "3"], capsys)
        assert code == cli.EXIT_FEASIBLE and "agreement" in out

    def test_skolem(self, capsys):
        code, out, _ = run(["skolem", "--n", "5"], capsys)
        assert code == cli.EXIT_FEASIBLE
        assert "sequence: 1 1 3 4 5 3 2 4 2 5" in out

    def test_skolem_bad_order(self, capsys):
        code, _, err = run(["skolem", "--n", "6"], capsys)
        assert code == cli.EXIT_USAGE and "error" in err


class TestServerTransport:
    @pytest.fixture
    def http_server(self, monkeypatch):
        client = TestClient(service.app)

        def fake_post(url, json=None, timeout=None):
            assert url.startswith("http://testserver")
            return client.post(url.replace("http://testserver", ""), json=json)

        monkeypatch.setattr(cli.httpx, "post", fake_post)

    def test_solve_over_http_matches_in_process(self, http_server, capsys):
        local = run(["--format", "json", "solve", "--v", "18",
                     "--list", "1^5,7^4"], capsys)
        remote = run(["--server", "http://testserver", "--format", "json",
                      "solve", "--v", "18", "--list", "1^5,7^4"], capsys)
        assert remote[0] == cli.EXIT_FEASIBLE
        assert json.loads(local[1]) == json.loads(remote[1])

    def test_http_error_is_usage_error(self, http_server, capsys):
        code, _, err = run(["--server", "http://testserver", "solve",
                            "--v", "9", "--list", "1^4"], capsys)
        assert code == cli.EXIT_USAGE and "422" in err
