import json
import subprocess
import sys

from dmincut import SolveReport
from dmincut.cli import main

from conftest import FIXTURES

FIG1 = str(FIXTURES / "fig1.net")
FIG1_PROB = str(FIXTURES / "fig1_prob.net")
FIG1_CUTS = str(FIXTURES / "fig1.cuts")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_solve_demand7_listing(capsys):
    code, out, _ = run(capsys, "solve", "--network", FIG1, "--demand", "7")
    assert code == 0
    vectors = [line for line in out.splitlines() if line.startswith("(")]
    assert "(0,2,3,1,3,3)" not in vectors
    assert vectors == [
        "(2,2,3,1,3,3)",
        "(4,1,3,1,3,3)",
        "(4,2,2,1,3,3)",
        "(4,2,3,1,2,3)",
        "(4,2,3,1,3,1)",
    ]
    assert "# demand=7 cut_count=4 arc_count=6" in out
    assert "# audit_ok=True" in out


def test_solve_demand8_contains_saturated_vector(capsys):
    code, out, _ = run(capsys, "solve", FIG1, "--demand", "8")
    assert code == 0
    assert "(4,2,3,1,3,3)" in out


def test_solve_infeasible_demand_exits_3(capsys):
    code, out, err = run(capsys, "solve", FIG1, "--demand", "9")
    assert code == 3
    assert not [line for line in out.splitlines() if line.startswith("(")]
    assert "exceeds the max flow 8" in err
    assert "# diagnostic:" in out


def test_solve_json_round_trips(capsys):
    code, out, _ = run(capsys, "solve", FIG1, "--demand", "7", "--json")
    assert code == 0
    report = SolveReport.from_dict(json.loads(out))
    assert report.demand == 7
    assert len(report.dmcs) == 5
    assert report.to_dict() == json.loads(out)


def test_solve_with_full_cut_file_matches_enumeration(capsys):
    code_a, out_a, _ = run(capsys, "solve", FIG1, "--demand", "7")
    code_b, out_b, _ = run(capsys, "solve", FIG1, "--demand", "7", "--cuts", FIG1_CUTS)
    assert code_a == code_b == 0
    assert out_a == out_b


def test_solve_with_partial_cut_file_empty_is_not_an_error(capsys, tmp_path):
    cuts = tmp_path / "partial.cuts"
    cuts.write_text("cut 1 1 2 3\n")
    code, out, err = run(capsys, "solve", FIG1, "--demand", "8", "--cuts", str(cuts))
    assert code == 0
    assert not [line for line in out.splitlines() if line.startswith("(")]
    assert err == ""


def test_solve_missing_file_exits_2(capsys):
    code, _, err = run(capsys, "solve", "--network", "no-such-file.net", "--demand", "3")
    assert code == 2
    assert "error:" in err


def test_solve_malformed_file_exits_2(capsys, tmp_path):
    bad = tmp_path / "bad.net"
    bad.write_text("nodes 2 source 1 sink 2\nedge 1 1 2 pear\n")
    code, _, err = run(capsys, "solve", str(bad), "--demand", "1")
    assert code == 2
    assert "line 2" in err


def test_solve_without_network_exits_2(capsys):
    code, _, err = run(capsys, "solve", "--demand", "1")
    assert code == 2


def test_check_flaw_reports_the_counterexample(capsys):
    code, out, _ = run(capsys, "check-flaw", FIG1, "--demand", "7")
    assert code == 0
    lines = out.splitlines()
    target = [line for line in lines if line.startswith("X=(0,2,3,1,3,3)")]
    assert len(target) == 1
    assert "corrected=reject" in target[0]
    assert "flawed=accept" in target[0]
    assert "W(X)=5" in target[0]
    assert "W=6" in target[0]
    assert lines[-1].startswith("disagreements: ")
    assert int(lines[-1].split()[-1]) >= 1


def test_check_flaw_single_arc_has_no_disagreements(capsys, tmp_path):
    net = tmp_path / "single.net"
    net.write_text("nodes 2 source 1 sink 2\nedge 1 1 2 4\n")
    for demand in range(0, 5):
        code, out, _ = run(capsys, "check-flaw", str(net), "--demand", str(demand))
        assert code == 0
        assert out.strip().splitlines()[-1] == "disagreements: 0"


def test_check_flaw_reports_count_even_when_zero(capsys):
    code, out, _ = run(capsys, "check-flaw", FIG1, "--demand", "1")
    assert code == 0
    assert out.splitlines()[-1].startswith("disagreements: ")


def test_check_flaw_infeasible_demand_exits_3(capsys):
    code, out, err = run(capsys, "check-flaw", FIG1, "--demand", "9")
    assert code == 3
    assert "disagreements:" in out
    assert "exceeds the max flow 8" in err


def test_mincuts_listing(capsys):
    for argv in (["mincuts", FIG1], ["mincuts", "--network", FIG1]):
        code, out, _ = run(capsys, *argv)
        assert code == 0
        assert out.splitlines() == [
            "cut 1 1 2 3",
            "cut 2 2 3 5",
            "cut 3 3 5 6",
            "cut 4 1 3 4 6",
        ]


def test_mincuts_disconnected_exits_2(capsys, tmp_path):
    net = tmp_path / "disc.net"
    net.write_text("nodes 3 source 1 sink 3\nedge 1 1 2 1\nedge 2 3 2 1\n")
    code, _, err = run(capsys, "mincuts", str(net))
    assert code == 2
    assert "unreachable" in err


def test_oracle_and_solve_listings_are_byte_identical(capsys):
    for demand in range(0, 9):
        code_s, out_s, _ = run(capsys, "solve", FIG1, "--demand", str(demand))
        code_o, out_o, _ = run(capsys, "oracle", FIG1, "--demand", str(demand))
        assert code_s == code_o == 0
        solve_listing = "".join(
            line + "\n" for line in out_s.splitlines() if not line.startswith("#")
        )
        assert solve_listing == out_o


def test_oracle_guard_exits_4(capsys, tmp_path):
    net = tmp_path / "huge.net"
    net.write_text(
        "nodes 2 source 1 sink 2\n" + "".join(f"edge {i} 1 2 9\n" for i in range(1, 11))
    )
    code, _, err = run(capsys, "oracle", str(net), "--demand", "3")
    assert code == 4
    assert "guard" in err


def test_reliability_methods_agree(capsys):
    for demand in ["1", "2", "7", "8", "9"]:
        _, out_d, _ = run(capsys, "reliability", FIG1_PROB, "--demand", demand, "--method", "dmcs")
        _, out_e, _ = run(capsys, "reliability", FIG1_PROB, "--demand", demand, "--method", "exhaustive")
        assert abs(float(out_d) - float(out_e)) <= 1e-12
        assert len(out_d.strip().split(".")[1]) == 12  # twelve decimal places


def test_reliability_strict_threshold(capsys):
    _, strict, _ = run(capsys, "reliability", FIG1_PROB, "--demand", "7", "--threshold", "strict")
    _, ge_next, _ = run(capsys, "reliability", FIG1_PROB, "--demand", "8", "--threshold", "ge")
    assert strict == ge_next


def test_reliability_demand_zero_is_certain(capsys):
    code, out, _ = run(capsys, "reliability", FIG1_PROB, "--demand", "0")
    assert code == 0
    assert out.strip() == "1.000000000000"


def test_reliability_without_pmfs_exits_2(capsys):
    code, _, err = run(capsys, "reliability", FIG1, "--demand", "3")
    assert code == 2
    assert "prob" in err


def test_reliability_dmcs_route_guard_exits_4(capsys):
    # Demand 4 needs the 3-MC set (32 vectors), past the union guard of 20.
    code, _, err = run(capsys, "reliability", FIG1_PROB, "--demand", "4", "--method", "dmcs")
    assert code == 4
    assert "guard" in err


def test_reliability_guard_exits_4(capsys, tmp_path):
    net = tmp_path / "huge.net"
    lines = ["nodes 2 source 1 sink 2\n"]
    lines += [f"edge {i} 1 2 9\n" for i in range(1, 11)]
    lines += [f"prob {i} " + " ".join(["0.1"] * 10) + "\n" for i in range(1, 11)]
    net.write_text("".join(lines))
    code, _, err = run(capsys, "reliability", str(net), "--demand", "3", "--method", "exhaustive")
    assert code == 4


def test_unknown_command_exits_2(capsys):
    assert main(["frobnicate"]) == 2


def test_negative_demand_exits_2(capsys):
    for command in ("solve", "check-flaw", "oracle"):
        code, _, err = run(capsys, command, FIG1, "--demand", "-1")
        assert code == 2
        assert "nonnegative" in err


def test_solve_json_byte_identical_across_processes():
    cmd = [sys.executable, "-m", "dmincut.cli", "solve", FIG1, "--demand", "7", "--json"]
    first = subprocess.run(cmd, capture_output=True, check=True)
    second = subprocess.run(cmd, capture_output=True, check=True)
    assert first.stdout == second.stdout
    assert first.stdout  # non-empty


def test_solve_text_byte_identical_across_processes():
    cmd = [sys.executable, "-m", "dmincut.cli", "solve", FIG1, "--demand", "3"]
    first = subprocess.run(cmd, capture_output=True, check=True)
    second = subprocess.run(cmd, capture_output=True, check=True)
    assert first.stdout == second.stdout
