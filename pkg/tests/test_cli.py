import json

import pytest

from config.settings import get_settings
from falsilab.main import main
from falsilab.services.class_file import ClassFileParser, random_class


def run(capsys, *argv):
    code = main([str(arg) for arg in argv])
    return code, capsys.readouterr().out.splitlines()


def test_vc_command(capsys, class_file_dir):
    """Test the VC dimension of the even-zero class file."""
    code, lines = run(capsys, "vc", "--class", class_file_dir / "evenzero6.hyp")
    assert code == 0
    assert lines == ["vc=3 witness={1,3,5}"]


def test_surprise_command(capsys, class_file_dir):
    """Test surprise renders as an exact rational plus six decimals."""
    code, lines = run(capsys, "surprise", "--class", class_file_dir / "allheads4.hyp", "--sample", "0,1,2,3", "--n", 3)
    assert code == 0
    assert lines[0] == "S=7/8 (0.875000)"
    assert "mu=1/8 (0.125000)" in lines
    assert "crucial=000" in lines


def test_sauer_command(capsys):
    """Test the Sauer-Shelah bound needs no class."""
    assert run(capsys, "sauer", "--m", 5, "--d", 2) == (0, ["bound=16"])


def test_popper_command(capsys, class_file_dir):
    """Test Popper dimension with and without an assignment."""
    path = class_file_dir / "evenzero6.hyp"
    assert run(capsys, "popper", "--class", path) == (0, ["popper=1 witness={0}"])
    code, lines = run(capsys, "popper", "--class", path, "--assign", "0=0,2=0,4=0")
    assert lines == ["popper=unwitnessed (no unshattered subset within ground set)"]


def test_family_command(capsys):
    """Test building a family from flags."""
    code, lines = run(capsys, "family", "--kind", "evenzero", "--ground", 6)
    assert code == 0
    assert lines == ["size=8", "expected_vc=3", "vc=3 witness={1,3,5}", "popper=1 witness={0}"]


def test_bound_and_horizon_commands(capsys, class_file_dir):
    """Test the uniform sample bound on the all-heads class."""
    path = class_file_dir / "allheads4.hyp"
    code, lines = run(capsys, "bound", "--class", path, "--epsilon", "1/10")
    assert lines[0] == "m=4"
    code, lines = run(capsys, "horizon", "--class", path, "--epsilon", "1/2")
    assert code == 0
    assert lines[0].startswith("horizon=")


def test_trace_csv(capsys, class_file_dir, tmp_path):
    """Test the CSV trace header and exact cells."""
    target = tmp_path / "trace.csv"
    code, _ = run(
        capsys, "trace", "--class", class_file_dir / "allheads4.hyp", "--n", 3, "--csv", target, "--exact"
    )
    assert code == 0
    assert target.read_text().splitlines() == [
        "n,mu,surprise,co_surprise,crucial",
        "0,1,0,0,false",
        "1,1/2,1/2,0,true",
        "2,1/4,3/4,0,true",
        "3,1/8,7/8,0,true",
    ]


def test_trace_csv_decimals(capsys, class_file_dir, tmp_path):
    """Test CSV cells default to six decimals."""
    target = tmp_path / "trace.csv"
    run(capsys, "surprise", "--class", class_file_dir / "allheads4.hyp", "--n", 2, "--csv", target)
    assert target.read_text().splitlines()[2] == "1,0.500000,0.500000,0.000000,true"


def test_report_is_deterministic(capsys, class_file_dir, tmp_path):
    """Test repeated runs produce identical reports apart from timing."""
    reports = []
    for name in ("first.json", "second.json"):
        run(capsys, "growth", "--class", class_file_dir / "explicit3.hyp", "--report", tmp_path / name)
        report = json.loads((tmp_path / name).read_text())
        report.pop("timing")
        reports.append(report)
    assert reports[0] == reports[1]
    assert reports[0]["results"]["tau(3)"] == "5 witness={0,1,2} sauer=7"


def test_stat_commands(capsys):
    """Test the likelihood and tails demos."""
    code, lines = run(capsys, "mle", "--flips", "HT", "--exclude", "1/2")
    assert "attained=false" in lines
    assert "argmax=none" in lines
    code, lines = run(capsys, "mle", "--flips", "HT", "--finite", "0,1")
    assert lines[:3] == ["supremum=0.000000", "attained=true", "argmax=0.000000,1.000000"]
    assert run(capsys, "tails", "--epsilon", "19/100", "--n", 1) == (0, ["threshold=0.810000"])


def test_selector_and_adversary(capsys, class_file_dir):
    """Test selector stages and adversarial samples."""
    path = class_file_dir / "evenzero6.hyp"
    code, lines = run(capsys, "selector", "--class", path, "--stages", 3)
    assert lines[:3] == [
        "stage1=witness={0} popper=1 assume=0",
        "stage2=witness={2} popper=1 assume=0",
        "stage3=witness={4} popper=1 assume=0",
    ]
    assert run(capsys, "adversary", "--class", path, "--m", 3) == (0, ["sample=1,3,5,0,2,4"])


def test_random_class_commands(capsys):
    """Test --seed and --ground stand in for a class file."""
    code, lines = run(capsys, "dump", "--seed", 3, "--ground", 4)
    assert code == 0
    assert ClassFileParser.parse("\n".join(lines)) == random_class(3, 4, 0.5)
    assert run(capsys, "check", "--seed", 1, "--ground", 5, "--count", 5) == (0, ["checked=5", "violations=0"])


def test_exit_codes(capsys, class_file_dir, tmp_path):
    """Test parse errors exit 2 and domain errors exit 1."""
    bad = tmp_path / "bad.hyp"
    bad.write_text("ground 3\nkind explicit\n01\n")
    assert run(capsys, "vc", "--class", bad)[0] == 2
    assert run(capsys, "vc")[0] == 2
    assert run(capsys, "surprise", "--class", class_file_dir / "allheads4.hyp")[0] == 2
    assert run(capsys, "adversary", "--class", class_file_dir / "evenzero6.hyp", "--m", 4)[0] == 1
    assert run(capsys, "ratio", "--class", class_file_dir / "allheads4.hyp", "--n", 5)[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["nonsense"])
    assert info.value.code == 2


def test_invalid_flag_values_exit_2(capsys, class_file_dir):
    """Test out-of-range samples and misshapen patterns are input errors, not domain errors."""
    path = class_file_dir / "allheads4.hyp"
    assert run(capsys, "surprise", "--class", path, "--sample", "1,1", "--n", 1)[0] == 2
    assert run(capsys, "surprise", "--class", path, "--sample", "9", "--n", 1)[0] == 2
    severe = ("severe", "--class", path, "--n", 2, "--epsilon", "1/2")
    assert run(capsys, *severe, "--observed", "111")[0] == 2
    assert run(capsys, "popper", "--class", path, "--assign", "7=1")[0] == 2


def test_severe_command(capsys, class_file_dir):
    """Test the severe verdict reports each conjunct."""
    code, lines = run(
        capsys, "severe", "--class", class_file_dir / "allheads4.hyp", "--n", 3, "--epsilon", "1/4", "--observed", "111"
    )
    assert code == 0
    assert lines[:4] == ["severe=pass", "compatible=true", "above_threshold=true", "dominates_complement=true"]


def test_cosurprise_rejects_pattern_with_given(capsys, class_file_dir):
    """Test --pattern and --given cannot be combined."""
    path = class_file_dir / "allheads4.hyp"
    code, lines = run(capsys, "cosurprise", "--class", path, "--n", 2, "--pattern", "11", "--given", path)
    assert code == 2
    assert lines == []
    full = class_file_dir / "full4.hyp"
    full.write_text("ground 4\nkind family full\n")
    assert run(capsys, "cosurprise", "--class", path, "--n", 2, "--given", full) == (0, ["S_co_given=0 (0.000000)"])


def test_report_echoes_command_line(capsys, class_file_dir, tmp_path):
    """Test the report records the command line without output paths."""
    path = class_file_dir / "explicit3.hyp"
    target = tmp_path / "run.json"
    run(capsys, "vc", "--class", path, "--report", target, "--csv", tmp_path / "unused.csv")
    report = json.loads(target.read_text())
    assert report["command"] == "vc"
    assert report["argv"] == ["vc", "--class", str(path)]


@pytest.fixture
def small_cap(monkeypatch):
    monkeypatch.setenv("FALSILAB_CAP", "8")
    get_settings.cache_clear()
    yield
    monkeypatch.delenv("FALSILAB_CAP")
    get_settings.cache_clear()


def test_cap_from_environment(capsys, tmp_path, small_cap):
    """Test FALSILAB_CAP limits materialization while analytic counts still work."""
    path = tmp_path / "full10.hyp"
    path.write_text("ground 10\nkind family full\n")
    assert run(capsys, "vc", "--class", path)[0] == 0
    assert run(capsys, "cosurprise", "--class", path, "--n", 3)[0] == 1
