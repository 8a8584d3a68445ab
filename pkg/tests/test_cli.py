from pathlib import Path

import pytest
from click.testing import CliRunner

from dtopw.cli import main
from dtopw.gallery import gallery_names, verify_gallery_claims
from dtopw.topology import parse_space

GOLDEN = Path(__file__).parent / "golden" / "gallery_claims.txt"
GOLDEN_DEPTHS = {
    "nat_top_upper": 8,
    "nat_top_bot_upper": 8,
    "example_P_scott": 10,
    "johnstone_scott": 8,
    "nat_cofinite": 8,
}


@pytest.fixture()
def sierpinski_file(tmp_path):
    p = tmp_path / "sierpinski.space"
    p.write_text("elements: 0 1\nopen: 1\n")
    return str(p)


@pytest.fixture()
def runner():
    return CliRunner()


def test_check_passes_and_exit_zero(runner, sierpinski_file):
    res = runner.invoke(main, ["check", sierpinski_file, "c-space"])
    assert res.exit_code == 0
    assert "c-space -> True" in res.output


@pytest.mark.parametrize(
    "prop",
    [
        "directed-space",
        "b-space",
        "locally-hypercompact",
        "hypercompactly-based",
        "core-compact",
        "completely-distributive-opens",
        "hypercontinuous-opens",
    ],
)
def test_check_all_properties_on_sierpinski(runner, sierpinski_file, prop):
    res = runner.invoke(main, ["check", sierpinski_file, prop])
    assert res.exit_code == 0


def test_check_unknown_property_exits_two(runner, sierpinski_file):
    res = runner.invoke(main, ["check", sierpinski_file, "unknown-prop"])
    assert res.exit_code == 2


def test_check_parse_error_exits_two(runner, tmp_path):
    p = tmp_path / "broken.space"
    p.write_text("open: a\n")
    res = runner.invoke(main, ["check", str(p), "c-space"])
    assert res.exit_code == 2


def test_suite_runs_and_reports(runner):
    res = runner.invoke(main, ["suite", "thm-3.12", "--max-size", "3"])
    assert res.exit_code == 0
    assert "suite thm-3.12: PASS" in res.output


def test_suite_json_format(runner, tmp_path):
    out = tmp_path / "report.json"
    res = runner.invoke(
        main, ["suite", "prop-6.1", "--max-size", "2", "--format", "json", "--out", str(out)]
    )
    assert res.exit_code == 0
    import json

    data = json.loads(out.read_text())
    assert data["suite"] == "prop-6.1" and data["passed"] is True


def test_suite_unknown_id_exits_two(runner):
    res = runner.invoke(main, ["suite", "thm-9.9"])
    assert res.exit_code == 2


def test_suite_oversize_exits_two(runner):
    res = runner.invoke(main, ["suite", "thm-3.12", "--max-size", "6"])
    assert res.exit_code == 2


def test_export_specialization(runner, sierpinski_file):
    res = runner.invoke(main, ["export", sierpinski_file, "specialization"])
    assert res.exit_code == 0
    assert res.output.startswith("digraph specialization {")
    assert '"0" -> "1";' in res.output
    again = runner.invoke(main, ["export", sierpinski_file, "specialization"])
    assert again.output == res.output


def test_export_openlattice(runner, tmp_path):
    p = tmp_path / "diamond.space"
    p.write_text(
        "elements: bot x y top\n"
        "open: top\nopen: x top\nopen: y top\nopen: x y top\n"
    )
    res = runner.invoke(main, ["export", str(p), "openlattice"])
    assert res.exit_code == 0
    assert res.output.count("->") == 8  # Hasse edges of the 6-element open lattice


def test_gallery_list(runner):
    res = runner.invoke(main, ["gallery", "list"])
    assert res.exit_code == 0
    assert res.output.split() == list(gallery_names())


def test_gallery_verify(runner):
    res = runner.invoke(main, ["gallery", "verify", "nat_cofinite", "--depth", "6"])
    assert res.exit_code == 0
    assert "-> PASS" in res.output


def test_gallery_verify_unknown(runner):
    res = runner.invoke(main, ["gallery", "verify", "nope"])
    assert res.exit_code == 2


def test_construct_product_round_trip(runner, sierpinski_file, tmp_path):
    out = tmp_path / "prod.space"
    res = runner.invoke(
        main,
        ["construct", "product", "--lhs", sierpinski_file, "--rhs", sierpinski_file,
         "--out", str(out)],
    )
    assert res.exit_code == 0
    X = parse_space(out.read_text())
    assert len(X.carrier) == 4 and len(X.opens) == 6


def test_construct_ideals(runner, sierpinski_file, tmp_path):
    out = tmp_path / "ideals.space"
    res = runner.invoke(main, ["construct", "ideals", "--lhs", sierpinski_file, "--out", str(out)])
    assert res.exit_code == 0
    X = parse_space(out.read_text())
    assert len(X.carrier) == 2


def test_gallery_claims_match_golden_file():
    lines = []
    for name in gallery_names():
        rep = verify_gallery_claims(name, depth=GOLDEN_DEPTHS[name])
        lines.extend(rep.lines())
    assert "\n".join(lines) + "\n" == GOLDEN.read_text()
