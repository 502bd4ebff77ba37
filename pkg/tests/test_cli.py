"""Command line interface: subcommands, exit codes, diagnostics."""

import subprocess
import sys
from fractions import Fraction

import pytest

from berncert.cli import main
from berncert.documents import (
    parse_certificate_document,
    serialize_certificate_document,
)

WORKED = """\
variables: 2
coeffs:
1/8 0 1
0 -2 0
1 0 0
"""

SPHERE = """\
variables: 2
coeffs:
1 0 1
0 0 0
1 0 0
"""

NEGATIVE = """\
variables: 2
coeffs:
-1 0
0 1
"""

UNI = """\
variables: 1
coeffs:
0 1
"""


@pytest.fixture
def poly_file(tmp_path):
    def write(text, name="poly.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


class TestEval:
    def test_worked_example_point(self, poly_file, capsys):
        assert main(["eval", poly_file(WORKED), "--at", "1,0"]) == 0
        assert capsys.readouterr().out.strip() == "9/8"

    def test_constant(self, poly_file, capsys):
        assert main(["eval", poly_file("variables: 2\ncoeffs:\n1\n"), "--at", "1/3,2/3"]) == 0
        assert capsys.readouterr().out.strip() == "1"

    def test_univariate(self, poly_file, capsys):
        assert main(["eval", poly_file(UNI), "--at", "1/7"]) == 0
        assert capsys.readouterr().out.strip() == "1/7"

    def test_arity_mismatch(self, poly_file, capsys):
        assert main(["eval", poly_file(WORKED), "--at", "1/7"]) == 1
        assert "usage-error" in capsys.readouterr().err

    def test_malformed_point(self, poly_file):
        assert main(["eval", poly_file(WORKED), "--at", "0.5,0"]) == 1


class TestCertify:
    def test_raise_on_worked_example(self, poly_file, tmp_path, capsys):
        out = str(tmp_path / "cert.txt")
        code = main(["certify", poly_file(WORKED), out, "--method", "raise"])
        assert code == 0
        doc = parse_certificate_document((tmp_path / "cert.txt").read_text())
        assert doc.method == "raise"
        assert doc.q1 == doc.q2 <= 16
        assert main(["verify", poly_file(WORKED), out]) == 0
        assert capsys.readouterr().out.splitlines()[-1] == "ok"

    def test_nested_on_sphere(self, poly_file, tmp_path):
        out = str(tmp_path / "cert.txt")
        assert main(["certify", poly_file(SPHERE), out, "--method", "nested"]) == 0
        assert main(["verify", poly_file(SPHERE), out]) == 0

    def test_not_positive_gives_witness_and_exit_2(self, poly_file, tmp_path, capsys):
        out = str(tmp_path / "cert.txt")
        code = main(["certify", poly_file(NEGATIVE), out, "--method", "raise"])
        assert code == 2
        err = capsys.readouterr().err
        assert "not-positive" in err
        assert "witness=0,0" in err

    def test_univariate_input_rejected(self, poly_file, tmp_path):
        out = str(tmp_path / "cert.txt")
        assert main(["certify", poly_file(UNI), out, "--method", "raise"]) == 1

    def test_q_start_with_nested_rejected(self, poly_file, tmp_path):
        out = str(tmp_path / "cert.txt")
        code = main(
            ["certify", poly_file(SPHERE), out, "--method", "nested", "--q-start", "4,4"]
        )
        assert code == 1

    def test_inconclusive_exit_3(self, poly_file, tmp_path, capsys):
        touching = "variables: 2\ncoeffs:\n1/9\n-2/3\n1\n"  # (x1 - 1/3)^2
        out = str(tmp_path / "cert.txt")
        code = main(
            ["certify", poly_file(touching), out, "--method", "raise", "--max-iter", "3"]
        )
        assert code == 3
        assert "inconclusive" in capsys.readouterr().err

    def test_missing_file(self, tmp_path):
        assert main(["certify", str(tmp_path / "nope.txt"), "x", "--method", "raise"]) == 1


class TestVerifyCommand:
    def test_tampered_certificate(self, poly_file, tmp_path, capsys):
        out = tmp_path / "cert.txt"
        assert main(["certify", poly_file(SPHERE), str(out), "--method", "raise"]) == 0
        doc = parse_certificate_document(out.read_text())
        rows = [list(r) for r in doc.c]
        rows[0][0] = Fraction(0)
        tampered = type(doc)(
            method=doc.method, q1=doc.q1, q2=doc.q2, convention=doc.convention,
            c=tuple(tuple(r) for r in rows), report=doc.report,
            tool_version=doc.tool_version,
        )
        out.write_text(serialize_certificate_document(tampered))
        code = main(["verify", poly_file(SPHERE), str(out)])
        assert code == 2
        err = capsys.readouterr().err
        assert "invalid" in err and "nonpositive" in err

    def test_certificate_for_other_polynomial(self, poly_file, tmp_path):
        out = str(tmp_path / "cert.txt")
        assert main(["certify", poly_file(SPHERE), out, "--method", "raise"]) == 0
        assert main(["verify", poly_file(WORKED), out]) == 2


class TestEncloseMin:
    def test_sphere_at_two(self, poly_file, capsys):
        assert main(["enclose-min", poly_file(SPHERE), "--q1", "2", "--q2", "2"]) == 0
        assert capsys.readouterr().out.strip() == "1 3/2 2 2"

    def test_constant(self, poly_file, capsys):
        assert main(["enclose-min", poly_file("variables: 2\ncoeffs:\n1\n"),
                     "--q1", "4", "--q2", "4"]) == 0
        assert capsys.readouterr().out.strip() == "1 1 4 4"

    def test_target_width_doubles_to_256(self, poly_file, capsys):
        code = main(["enclose-min", poly_file(WORKED), "--target-width", "1/100"])
        assert code == 0
        tokens = capsys.readouterr().out.split()
        assert tokens[2] == "256" and tokens[3] == "256"
        lo, hi = Fraction(tokens[0]), Fraction(tokens[1])
        assert hi - lo == 2 * Fraction(255, 256 * 256)
        assert hi - lo <= Fraction(1, 100)

    def test_cap_exit_3(self, poly_file, capsys):
        code = main(["enclose-min", poly_file(WORKED),
                     "--target-width", "1/100000", "--max-iter", "2"])
        assert code == 3
        assert len(capsys.readouterr().out.split()) == 4

    def test_degree_below_floor(self, poly_file):
        assert main(["enclose-min", poly_file(WORKED), "--q1", "1", "--q2", "2"]) == 1

    def test_univariate_rejected(self, poly_file):
        assert main(["enclose-min", poly_file(UNI), "--q1", "2", "--q2", "2"]) == 1


class TestUsage:
    def test_unknown_command(self):
        assert main(["frobnicate"]) == 1

    def test_help_exits_zero(self):
        assert main(["--help"]) == 0


def test_module_entry_point(tmp_path):
    poly = tmp_path / "p.txt"
    poly.write_text(SPHERE)
    proc = subprocess.run(
        [sys.executable, "-m", "berncert", "eval", str(poly), "--at", "1/2,1/2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "3/2"
