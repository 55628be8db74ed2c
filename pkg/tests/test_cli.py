"""End-to-end command-line behaviour and the operation coverage table."""

import pytest

import dclat
from dclat import cli
from dclat.cli import COMMAND_OPERATIONS, main
from dclat.dcp import parse


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExitCodes:
    def test_check_distributive_passes(self, capsys, data_dir):
        code, out, _ = run(capsys, "check", str(data_dir / "fig1L.dcp"), "--prop", "distributive")
        assert code == 0 and "distributive" in out

    def test_check_modular_fails_with_witness(self, capsys, data_dir):
        code, out, _ = run(capsys, "check", str(data_dir / "n5.dcp"), "--prop", "modular")
        assert code == 1 and "witness" in out

    def test_parse_error_is_2(self, capsys, tmp_path):
        bad = tmp_path / "bad.dcp"
        bad.write_text("type vertex-poset\nvortex a\n")
        code, _, err = run(capsys, "parse", str(bad))
        assert code == 2 and "line 2" in err

    def test_validation_error_is_2(self, capsys, tmp_path):
        bad = tmp_path / "bad.dcp"
        bad.write_text("type vertex-poset\nvertex a color 1\nedge a b\n")
        code, _, err = run(capsys, "parse", str(bad))
        assert code == 2 and "undeclared" in err

    def test_usage_error_is_2(self, capsys):
        assert main(["check"]) == 2

    def test_missing_file_is_2(self, capsys, tmp_path):
        code, _, err = run(capsys, "parse", str(tmp_path / "absent.dcp"))
        assert code == 2


class TestCommands:
    def test_parse_emits_canonical(self, capsys, data_dir):
        code, out, _ = run(capsys, "parse", str(data_dir / "fig1P.dcp"))
        assert code == 0 and out.startswith("type vertex-poset")

    def test_check_all_props_on_fig(self, capsys, data_dir):
        for prop in ("ranked", "diamond", "balanced", "lattice", "modular", "distributive"):
            code, _, _ = run(capsys, "check", str(data_dir / "fig1L.dcp"), "--prop", prop)
            assert code == 0, prop
        code, _, _ = run(capsys, "check", str(data_dir / "fig1L.dcp"), "--prop", "boolean")
        assert code == 1

    def test_check_diamond_fails_on_mismatch(self, capsys, data_dir):
        code, out, _ = run(capsys, "check", str(data_dir / "b2_mismatched.dcp"), "--prop", "diamond")
        assert code == 1 and "diamond" in out

    def test_components_lists_four(self, capsys, data_dir):
        code, out, _ = run(capsys, "components", str(data_dir / "fig1L.dcp"), "--colors", "2")
        assert code == 0
        sizes = sorted(int(line.split("size ")[1].split(",")[0]) for line in out.splitlines())
        assert sizes == [2, 3, 4, 6]

    def test_birkhoff_roundtrip(self, capsys, data_dir, fig_poset):
        code, out, _ = run(capsys, "birkhoff", str(data_dir / "fig1P.dcp"), "--op", "J")
        assert code == 0
        lattice = parse(out)
        assert len(lattice) == 15
        code, out, _ = run(capsys, "birkhoff", str(data_dir / "fig1L.dcp"), "--op", "j")
        assert code == 0
        poset = parse(out)
        assert dclat.isomorphic(poset, fig_poset)

    def test_birkhoff_kind_mismatch(self, capsys, data_dir):
        code, _, err = run(capsys, "birkhoff", str(data_dir / "fig1L.dcp"), "--op", "J")
        assert code == 2

    def test_transform_dual_and_sum(self, capsys, data_dir):
        code, out, _ = run(capsys, "transform", str(data_dir / "fig1P.dcp"), "--op", "dual")
        assert code == 0 and parse(out) is not None
        code, out, _ = run(
            capsys, "transform", str(data_dir / "fig5P1.dcp"), "--op", f"sum:{data_dir / 'fig5P2.dcp'}"
        )
        assert code == 0 and len(parse(out)) == 6

    def test_transform_recolor_and_product(self, capsys, data_dir):
        code, out, _ = run(
            capsys, "transform", str(data_dir / "fig1L.dcp"), "--op", "recolor:1=3,2=4"
        )
        assert code == 0 and parse(out).colors_used == {3, 4}
        code, out, _ = run(
            capsys, "transform", str(data_dir / "m3.dcp"), "--op", f"product:{data_dir / 'm3.dcp'}"
        )
        assert code == 0 and len(parse(out)) == 25

    def test_dist(self, capsys, data_dir):
        code, out, _ = run(
            capsys, "dist", str(data_dir / "fig1L.dcp"),
            "--from", "empty", "--to", "v1.v2.v3.v4.v5.v6",
        )
        assert code == 0 and "distance 6" in out

    def test_gen_deterministic(self, capsys):
        _, out1, _ = run(capsys, "gen", "--kind", "random", "-n", "6", "-p", "0.3", "--seed", "42")
        _, out2, _ = run(capsys, "gen", "--kind", "random", "-n", "6", "-p", "0.3", "--seed", "42")
        assert out1 == out2

    def test_gen_boolean(self, capsys):
        code, out, _ = run(capsys, "gen", "--kind", "boolean", "-n", "3")
        assert code == 0 and len(parse(out)) == 8

    def test_render_dot(self, capsys, data_dir):
        code, out, _ = run(capsys, "render", str(data_dir / "fig1P.dcp"), "--format", "dot")
        assert code == 0 and out.startswith("digraph")

    def test_stdin_input(self, capsys, monkeypatch, data_dir):
        import io

        text = (data_dir / "m3.dcp").read_text()
        monkeypatch.setattr("sys.stdin", io.StringIO(text))
        code, out, _ = run(capsys, "check", "-", "--prop", "modular")
        assert code == 0


class TestVerifyCommand:
    @pytest.mark.parametrize(
        "theorem,source",
        [
            ("ft", "fig1P.dcp"),
            ("ft", "fig1L.dcp"),
            ("cor7", "fig1L.dcp"),
            ("prop1", "fig1L.dcp"),
            ("prop3", "fig1L.dcp"),
            ("prop12", "fig1L.dcp"),
            ("prop13", "fig1L.dcp"),
            ("subord", "fig1P.dcp"),
            ("thm11", "fig1P.dcp"),
            ("prop10", "m3.dcp"),
        ],
    )
    def test_verify_passes(self, capsys, data_dir, theorem, source):
        code, out, _ = run(capsys, "verify", str(data_dir / source), "--theorem", theorem)
        assert code == 0, out

    def test_verify_cor8_with_pair(self, capsys, data_dir):
        code, out, _ = run(
            capsys, "verify", str(data_dir / "fig5P1.dcp"), "--theorem", "cor8",
            "--with", str(data_dir / "fig5P2.dcp"), "--sigma", "1=5,2=6",
        )
        assert code == 0, out

    def test_verify_cor7_negative(self, capsys, data_dir):
        code, out, _ = run(capsys, "verify", str(data_dir / "b2_mismatched.dcp"), "--theorem", "cor7")
        assert code == 1

    def test_verify_thm11_with_weakening(self, capsys, data_dir):
        code, out, _ = run(
            capsys, "verify", str(data_dir / "fig1P.dcp"), "--theorem", "thm11",
            "--with", str(data_dir / "fig5Q.dcp"),
        )
        assert code == 0, out


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ["parse", "{d}/fig1L.dcp"],
            ["components", "{d}/fig1L.dcp", "--colors", "2"],
            ["subordinates", "{d}/fig1P.dcp", "--colors", "1,2"],
            ["birkhoff", "{d}/fig1P.dcp", "--op", "M"],
            ["transform", "{d}/fig1L.dcp", "--op", "dual"],
            ["render", "{d}/fig1L.dcp", "--format", "dot"],
            ["verify", "{d}/fig1P.dcp", "--theorem", "subord"],
            ["dist", "{d}/fig1L.dcp", "--from", "v5", "--to", "v2.v5.v6"],
        ],
    )
    def test_byte_identical_reruns(self, capsys, data_dir, argv):
        argv = [a.format(d=data_dir) for a in argv]
        code1 = main(argv)
        out1 = capsys.readouterr().out
        code2 = main(argv)
        out2 = capsys.readouterr().out
        assert code1 == code2 == 0
        assert out1 == out2


class TestCoverageTable:
    def test_every_operation_listed_exactly_once(self):
        listed = [op for ops in COMMAND_OPERATIONS.values() for op in ops]
        assert len(listed) == len(set(listed))
        public_ops = {
            f"{mod}.{name}"
            for mod, names in {
                "dcp": ["parse", "emit", "render_dot"],
                "generators": ["generate", "random_poset"],
                "structures": ["dual", "recolor", "disjoint_sum", "cartesian_product"],
                "isomorphism": ["find_isomorphism", "isomorphic"],
                "paths": [
                    "compute_rank", "check_diamond_colored", "check_topographically_balanced",
                    "distance", "distance_modular", "rank_via_path", "ascent_descent_counts",
                    "mountainize", "valleyize", "verify_path_colors",
                ],
                "lattice": ["as_lattice", "is_modular", "is_distributive", "is_boolean"],
                "birkhoff": [
                    "build_J", "build_M", "extract_j", "extract_m",
                    "verify_fundamental", "verify_fundamental_poset",
                    "is_birkhoff_representable", "verify_transform_identities",
                    "cover_color_profile", "principal_ideal",
                    "descendant_interval_boolean", "ancestor_interval_boolean",
                ],
                "substructure": [
                    "check_sublattice", "verify_full_length_agreement", "weak_subposet",
                    "sublattice_from_weak_subposet", "weak_subposet_from_sublattice",
                    "verify_product_closure", "j_components", "verify_component_structure",
                    "subordinate_of", "enumerate_subordinates", "subordinates_by_definition",
                    "verify_subordinate_correspondence",
                ],
            }.items()
            for name in names
        }
        assert public_ops <= set(listed)

    def test_commands_all_registered(self):
        parser = cli._build_parser()
        registered = set(COMMAND_OPERATIONS)
        actions = parser._subparsers._group_actions[0].choices
        assert registered == set(actions)
