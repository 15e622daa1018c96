"""Command surface and exit-code contract."""
import pytest

from girardlab.cli import main
from girardlab.render import export_dot, render_report
from girardlab.reports import law_fail, law_pass
from girardlab.catalog import chain, diamond_m3
from girardlab.structfile import parse


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestVerify:
    def test_good_file_exit_zero(self, capsys, structures_dir):
        code, out, _ = run(capsys, "verify", str(structures_dir / "lukasiewicz-3.struct"))
        assert code == 0
        assert "0 failures" in out

    @pytest.mark.parametrize(
        "name",
        ["boolean-2", "boolean-4", "boolean-8", "m3", "n5", "o6", "mo2", "mo3",
         "lukasiewicz-3", "lukasiewicz-4", "lukasiewicz-5", "godel-3"],
    )
    def test_every_golden_file_verifies_clean(self, capsys, structures_dir, name):
        code, out, _ = run(capsys, "verify", str(structures_dir / f"{name}.struct"))
        assert code == 0, out

    def test_machine_format(self, capsys, structures_dir):
        code, out, _ = run(
            capsys, "verify", str(structures_dir / "boolean-4.struct"), "--format", "machine"
        )
        assert code == 0
        for line in out.strip().splitlines():
            law, verdict, witness = line.split("\t")
            assert verdict == "PASS"

    def test_failing_inversion_exit_one(self, capsys, tmp_path):
        bad = tmp_path / "bad.struct"
        bad.write_text(
            "elements: [0, a, b, c, 1]\n"
            "covers: [[0,1], [0,2], [0,3], [1,4], [2,4], [3,4]]\n"
            "ortho: [0, 1, 2, 3, 4]\n"
        )
        code, out, _ = run(capsys, "verify", str(bad))
        assert code == 1
        assert "inversion" in out and "FAIL" in out

    def test_input_error_exit_two(self, capsys, tmp_path):
        code, _, err = run(capsys, "verify", str(tmp_path / "missing.struct"))
        assert code == 2 and "error" in err

    def test_parse_error_exit_two(self, capsys, tmp_path):
        bad = tmp_path / "bad.struct"
        bad.write_text("elements: [a]\nnonsense: 12\n")
        code, _, err = run(capsys, "verify", str(bad))
        assert code == 2 and "nonsense" in err


class TestResiduate:
    def test_prints_tables_and_flags(self, capsys, structures_dir):
        code, out, _ = run(capsys, "residuate", str(structures_dir / "godel-3.struct"))
        assert code == 0
        assert "right residuum" in out and "left residuum" in out
        assert "integral=True" in out

    def test_non_residuable_table_exit_one(self, capsys, tmp_path):
        bad = tmp_path / "join.struct"
        bad.write_text(
            "elements: [0, m, 1]\ncovers: [[0,1], [1,2]]\n"
            "mul: [\n  [0, 1, 2],\n  [1, 1, 2],\n  [2, 2, 2]\n]\n"
        )
        code, out, _ = run(capsys, "residuate", str(bad))
        assert code == 1 and "FAIL" in out


class TestGirard:
    def test_lukasiewicz_certificates(self, capsys, structures_dir):
        code, out, _ = run(capsys, "girard", str(structures_dir / "lukasiewicz-4.struct"))
        assert code == 0
        assert "cyclic dualizing element d=0" in out
        assert "girard-recognition-agreement" in out

    def test_godel_negative(self, capsys, structures_dir):
        code, out, _ = run(capsys, "girard", str(structures_dir / "godel-3.struct"))
        assert code == 0
        assert "no cyclic dualizing element" in out

    def test_candidate_inversion_flag(self, capsys, structures_dir):
        code, out, _ = run(
            capsys, "girard", str(structures_dir / "lukasiewicz-3.struct"),
            "--inversion", "2,1,0",
        )
        assert code == 0 and "exchange=True" in out


class TestBlocks:
    def test_mo2_two_lines(self, capsys, structures_dir):
        code, out, _ = run(capsys, "blocks", str(structures_dir / "mo2.struct"))
        assert code == 0
        assert out.splitlines() == ["0 a a' 1", "0 b b' 1"]

    def test_rejects_non_oml(self, capsys, structures_dir):
        code, _, err = run(capsys, "blocks", str(structures_dir / "o6.struct"))
        assert code == 2 and "orthomodular" in err


class TestEnumerate:
    def test_counts(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--max-n", "5")
        assert code == 0
        assert "n=4: 2" in out and "n=5: 5" in out

    def test_confirm(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--max-n", "5", "--confirm-thm2")
        assert code == 0
        assert "complemented-integral-iff-boolean" in out


class TestSearchResiduation:
    def test_integral_m3_empty(self, capsys, structures_dir):
        code, out, _ = run(
            capsys, "search-residuation", str(structures_dir / "m3.struct"),
            "--mode", "integral",
        )
        assert code == 0
        assert "found=0 exhausted=True" in out

    def test_integral_chain_emits_structure_files(self, capsys, tmp_path):
        f = tmp_path / "chain3.struct"
        f.write_text("elements: [0, m, 1]\ncovers: [[0,1], [1,2]]\n")
        code, out, _ = run(capsys, "search-residuation", str(f), "--mode", "integral")
        assert code == 0 and "found=2" in out
        blockstexts = [b for b in out.split("# solution") if "mul:" in b]
        assert len(blockstexts) == 2
        for b in blockstexts:
            sf = parse(b[b.index("elements"):])
            assert sf.mul is not None and sf.unit == 2

    def test_unital_needs_ortho(self, capsys, structures_dir):
        code, _, err = run(
            capsys, "search-residuation", str(structures_dir / "m3.struct"),
            "--mode", "unital", "--budget", "10",
        )
        assert code == 2

    def test_unital_mo2(self, capsys, structures_dir):
        code, out, _ = run(
            capsys, "search-residuation", str(structures_dir / "mo2.struct"),
            "--mode", "unital", "--budget", "20000",
        )
        assert code == 0
        assert "exhausted=False" in out and "unit-downset-boolean-block" in out


class TestRn:
    def test_small_run(self, capsys):
        code, out, _ = run(capsys, "rn", "--dim", "2", "--trials", "25", "--seed", "3")
        assert code == 0
        assert "ortho-is-linear-negation" in out and "0 failures" in out

    def test_machine_format_lines(self, capsys):
        code, out, _ = run(
            capsys, "rn", "--dim", "1", "--trials", "5", "--seed", "0", "--format", "machine"
        )
        assert code == 0
        assert len(out.strip().splitlines()) == 9

    def test_bad_dim(self, capsys):
        code, _, err = run(capsys, "rn", "--dim", "0", "--trials", "5", "--seed", "0")
        assert code == 2


class TestRnOp:
    def test_mul(self, capsys):
        code, out, _ = run(
            capsys, "rn-op", "--dim", "2", "--op", "mul", "--a", "1,-1", "--b", "1,-1"
        )
        assert code == 0 and out.startswith("dim: 1")

    def test_ortho(self, capsys):
        code, out, _ = run(capsys, "rn-op", "--dim", "3", "--op", "ortho", "--a", "1,1,1")
        assert code == 0 and out.startswith("dim: 2")

    def test_meet_requires_b(self, capsys):
        code, _, err = run(capsys, "rn-op", "--dim", "2", "--op", "meet", "--a", "1,0")
        assert code == 2


class TestGen:
    @pytest.mark.parametrize(
        "argv",
        [("gen", "lukasiewicz", "--size", "4"),
         ("gen", "godel", "--size", "3"),
         ("gen", "boolean", "--atoms", "2")],
        ids=["lukasiewicz", "godel", "boolean"],
    )
    def test_emits_parseable_structure(self, capsys, argv):
        code, out, _ = run(capsys, *argv)
        assert code == 0
        sf = parse(out)
        assert sf.mul is not None and sf.unit is not None


class TestExportDot:
    def test_m3(self, capsys, structures_dir):
        code, out, _ = run(capsys, "export-dot", str(structures_dir / "m3.struct"))
        assert code == 0
        assert out.count("->") == 6 and "rankdir=BT" in out

    def test_library_function_counts(self):
        assert export_dot(chain(2).poset).count("->") == 1
        assert export_dot(diamond_m3().poset).count("->") == 6


class TestRender:
    def test_empty_bundle(self):
        text = render_report([], "human")
        assert "no laws evaluated" in text

    def test_machine_escapes_witness(self):
        text = render_report([("m", [law_fail("law", (1, 2))])], "machine")
        assert text == "law\tFAIL\t[1, 2]\n"

    def test_human_marks(self):
        text = render_report([("m", [law_pass("good"), law_fail("bad", (0,))])], "human")
        assert "[  ok] good" in text and "[FAIL] bad" in text
