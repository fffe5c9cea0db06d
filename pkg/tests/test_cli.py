"""End-to-end runs of planedraw_cli.main."""

import pytest

from planedraw_cli import EXIT_CHECK_FAILED, EXIT_OK, EXIT_PRECONDITION, EXIT_USAGE, main

HULL6 = "1 2\n2 3\n3 4\n4 5\n5 6\n1 6\n"


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


@pytest.fixture
def convex_files(workdir):
    assert main(["gen", "convex", "6", "--out", "c6.rot"]) == EXIT_OK
    (workdir / "hull.edg").write_text(HULL6)
    return workdir


class TestGenerate:

    def test_convex_writes_rotations_and_points(self, capsys, convex_files):
        # capsys first, so the banner printed while generating is captured
        assert (convex_files / "c6.rot").read_text().startswith("6\n")
        assert len((convex_files / "c6.pts").read_text().splitlines()) == 6
        assert "PLANEDRAW" in capsys.readouterr().out

    def test_random_needs_seed(self, workdir):
        assert main(["gen", "random", "8"]) == EXIT_USAGE

    def test_tight_subgraph_is_maximal(self, workdir, capsys):
        assert main(["gen", "tight", "8", "--out", "t8.rot"]) == EXIT_OK
        assert (workdir / "t8.edg").exists()
        code = main(["check", "--what", "maximal", "--drawing", "t8.rot", "--edges", "t8.edg"])
        assert code == EXIT_OK
        assert "12 edges" in capsys.readouterr().out


class TestCheck:

    def test_valid(self, convex_files, capsys):
        assert main(["check", "--drawing", "c6.rot"]) == EXIT_OK
        assert "Valid rotation system" in capsys.readouterr().out

    def test_hull_not_maximal(self, convex_files, capsys):
        code = main(["check", "--what", "maximal", "--drawing", "c6.rot", "--edges", "hull.edg"])
        assert code == EXIT_CHECK_FAILED
        assert "(1,3) can be added" in capsys.readouterr().out

    def test_crossing_edges_not_plane(self, convex_files, capsys):
        (convex_files / "x.edg").write_text("1 4\n2 5\n")
        code = main(["check", "--what", "plane", "--drawing", "c6.rot", "--edges", "x.edg"])
        assert code == EXIT_CHECK_FAILED
        assert "Not plane" in capsys.readouterr().out

    def test_malformed_rotation_file(self, workdir, capsys):
        (workdir / "bad.rot").write_text("3\n1: 2 3\n2: 1 x\n3: 1 2\n")
        assert main(["check", "--drawing", "bad.rot"]) == EXIT_USAGE
        assert "line 3" in capsys.readouterr().err

    def test_missing_file(self, workdir):
        assert main(["check", "--drawing", "nothing.rot"]) == EXIT_USAGE

    def test_unknown_verb(self, workdir):
        assert main(["frobnicate"]) == EXIT_USAGE


class TestBuild:

    def test_dp_from_hull(self, convex_files, capsys):
        code = main(["maximize", "--dp", "--drawing", "c6.rot", "--edges", "hull.edg",
                     "--out", "best.edg"])
        assert code == EXIT_OK
        assert "9 edges" in capsys.readouterr().out
        assert len((convex_files / "best.edg").read_text().splitlines()) == 9

    def test_exact_over_limit(self, convex_files):
        code = main(["maximize", "--exact", "--limit-n", "4", "--drawing", "c6.rot",
                     "--out", "best.edg"])
        assert code == EXIT_PRECONDITION
        assert not (convex_files / "best.edg").exists()

    def test_greedy_augment(self, convex_files, capsys):
        code = main(["augment", "--drawing", "c6.rot", "--edges", "hull.edg"])
        assert code == EXIT_OK
        assert "9 edges" in capsys.readouterr().out

    def test_rays(self, convex_files, capsys):
        code = main(["rays", "--vertex", "1", "--fast", "--drawing", "c6.rot", "--edges", "hull.edg"])
        assert code == EXIT_OK
        assert "5 uncrossed rays" in capsys.readouterr().out


class TestReduceRender:

    def test_single_segment_gadget(self, workdir, capsys):
        (workdir / "one.seg").write_text("0 0 3 1\n")
        assert main(["reduce", "--segments", "one.seg", "--out", "gadget.rot"]) == EXIT_OK
        assert "target 6" in capsys.readouterr().out
        assert main(["maximize", "--exact", "--drawing", "gadget.rot"]) == EXIT_OK
        assert "6 edges" in capsys.readouterr().out

    def test_render_needs_points(self, convex_files):
        (convex_files / "c6.pts").unlink()
        code = main(["render", "--drawing", "c6.rot", "--out", "c6.svg"])
        assert code == EXIT_PRECONDITION

    def test_render(self, convex_files):
        code = main(["render", "--drawing", "c6.rot", "--points", "c6.pts",
                     "--edges", "hull.edg", "--out", "c6.svg"])
        assert code == EXIT_OK
        assert (convex_files / "c6.svg").read_text().count("<line ") == 15


def test_bench(workdir, capsys):
    assert main(["bench", "--sizes", "6,8", "--seed", "1", "--out", "times.csv"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "LOG-LOG SLOPES" in out
    assert (workdir / "times.csv").read_text().startswith("algorithm,n,repeat,seconds,result")
