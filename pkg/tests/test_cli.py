import shutil
import subprocess
import sys
from pathlib import Path

import pytest

from projlink import campaigns
from projlink.catalog import Catalog
from projlink.cli import main
from projlink.graph import complete_bipartite, complete_graph, disjoint_union, petersen_graph, write_el

DATA = Path(__file__).resolve().parents[1] / "data"
DRAWINGS = DATA / "drawings"


def run(capsys, *argv):
    code = main(["--catalog", str(DATA), *argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def rows(out):
    lines = [ln for ln in out.splitlines() if not ln.startswith("#")]
    return [ln.split("\t") for ln in lines[1:]]


@pytest.fixture
def k6_file(tmp_path):
    p = tmp_path / "k6.el"
    write_el(complete_graph(6), p)
    return p


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert "projlink 0.1.0" in capsys.readouterr().out


def test_seedless_is_rejected(capsys, k6_file):
    with pytest.raises(SystemExit) as exc:
        main(["--seedless", "check", str(k6_file), "planar"])
    assert exc.value.code == 2


def test_check_minor_prints_certificate(capsys, k6_file):
    code, out, err = run(capsys, "check", str(k6_file), "minor", "K5")
    assert code == 0 and err.startswith("PASS check")
    (row,) = rows(out)
    assert row[1] == "minor K5" and row[2] == "present"
    assert len(row[3].split("|")) == 5


def test_check_petersen_not_planar(capsys, tmp_path):
    p = tmp_path / "p10.el"
    write_el(petersen_graph(), p)
    code, out, _ = run(capsys, "check", str(p), "planar")
    assert code == 0 and rows(out)[0][2] == "false"


def test_check_k6_projective_planar_embeds_digest(capsys, k6_file):
    code, out, _ = run(capsys, "check", str(k6_file), "projective-planar")
    assert code == 0 and rows(out)[0][2] == "true"
    assert f"# catalog\tsha256:{Catalog.open(DATA).digest()}" in out


def test_check_nonprojective_names_obstruction(capsys, tmp_path):
    p = tmp_path / "two_k5.el"
    write_el(disjoint_union(complete_graph(5), complete_graph(5)), p)
    code, out, _ = run(capsys, "check", str(p), "projective-planar")
    assert code == 0
    row = rows(out)[0]
    assert row[2] == "false" and "obstruction pp" in row[1]


def test_errors_exit_two(capsys, tmp_path, k6_file):
    assert run(capsys, "check", str(tmp_path / "missing.el"), "planar")[0] == 2
    bad = tmp_path / "bad.el"
    bad.write_text("3 1\n0 7\n")
    code, _, err = run(capsys, "check", str(bad), "planar")
    assert code == 2 and err.startswith("ERROR")
    assert run(capsys, "check", str(k6_file), "minor")[0] == 2
    assert run(capsys, "check", str(k6_file), "minor", "NOPE")[0] == 2
    assert main(["--catalog", str(tmp_path / "nowhere"), "verify", "c11"]) == 2


def test_budget_exhaustion_is_an_error(capsys, tmp_path):
    p = tmp_path / "p10.el"
    write_el(petersen_graph(), p)
    code, _, err = run(capsys, "check", str(p), "minor", "K5", "--budget", "1")
    assert code == 2 and "MinorSearchExhausted" in err


# -- link conditions on the catalog drawings ---------------------------------------------


def link_row(capsys, name):
    code, out, _ = run(capsys, "link-conditions", str(DRAWINGS / f"{name}.emb"))
    assert code == 0
    (row,) = rows(out)
    return dict(zip(("drawing", "00", "01", "11", "case", "witness"), row))


def test_link_conditions_outerplanar_all_true(capsys):
    r = link_row(capsys, "c6_outerplanar")
    assert (r["00"], r["01"], r["11"]) == ("true", "true", "true")


def test_link_conditions_separating_one_sided_cycle(capsys):
    r = link_row(capsys, "separating_1hom")
    assert r["00"] == "true" and r["01"] == "false" and r["witness"].startswith("01:")


def test_link_conditions_neither_case(capsys):
    r = link_row(capsys, "neither_k6")
    assert r["11"] == "false" and r["case"] == "Neither"


def test_link_conditions_case_drawings(capsys):
    assert link_row(capsys, "case1_star")["case"].startswith("Star")
    assert link_row(capsys, "case2_triangle")["case"].startswith("Triangle")
    assert link_row(capsys, "separating_4cycle")["00"] == "false"


def test_embed_enumerate(capsys, tmp_path):
    p = tmp_path / "k4.el"
    write_el(complete_graph(4), p)
    code, out, _ = run(capsys, "embed", "enumerate", str(p))
    assert code == 0 and {r[1] for r in rows(out)} == {"1", "2"}
    code, out, _ = run(capsys, "embed", "enumerate", str(p), "--max", "1")
    assert len(rows(out)) == 1
    q = tmp_path / "k33.el"
    write_el(complete_bipartite(3, 3), q)
    code, out, _ = run(capsys, "embed", "enumerate", str(q))
    assert {r[1] for r in rows(out)} == {"1"}


# -- campaigns ------------------------------------------------------------------------------


def test_verify_c11_and_deltay_pass(capsys):
    code, out, err = run(capsys, "verify", "c11")
    assert code == 0 and "# verdict\tPASS" in out and err.startswith("PASS")
    code, out, _ = run(capsys, "verify", "deltay-table")
    assert code == 0 and len(rows(out)) == 7


def test_contradicting_catalog_fails_with_exit_one(capsys, tmp_path):
    root = tmp_path / "cat"
    shutil.copytree(DATA, root)
    # a projective-planar stand-in for C11 contradicts the expected "before" verdict
    write_el(complete_bipartite(3, 3), root / "c11.el")
    manifest = root / "manifest.tsv"
    lines = manifest.read_text().splitlines()
    lines = [("\t".join(["C11", "c11.el", "6", "9"] + ln.split("\t")[4:]) if ln.startswith("C11\t") else ln)
             for ln in lines]
    manifest.write_text("\n".join(lines) + "\n")
    code = main(["--catalog", str(root), "verify", "c11"])
    out = capsys.readouterr()
    assert code == 1 and "# verdict\tFAIL" in out.out and out.err.startswith("FAIL")


def test_archdeacon_skips_without_outer_catalog(capsys, tmp_path):
    root = tmp_path / "cat"
    shutil.copytree(DATA, root)
    shutil.rmtree(root / "outer_projective_obstructions")
    code = main(["--catalog", str(root), "verify", "archdeacon"])
    out = capsys.readouterr().out
    assert code == 0 and "# verdict\tSKIP" in out


def test_reports_are_byte_identical(capsys):
    first = run(capsys, "verify", "petersen-closure")
    second = run(capsys, "verify", "petersen-closure")
    assert first == second and first[0] == 0


def test_search_is_independent_of_worker_count(monkeypatch):
    cands = campaigns.sixteen_candidates()[:10]
    monkeypatch.setattr(campaigns, "sixteen_candidates", lambda: cands)
    cat = Catalog.open(DATA)
    serial = campaigns.cmd_search_16(cat, workers=1).render()
    pooled = campaigns.cmd_search_16(cat, workers=2).render()
    assert serial == pooled
    assert len(serial.splitlines()) == 10 + 5


def test_console_script_exit_status(tmp_path):
    p = tmp_path / "k6.el"
    write_el(complete_graph(6), p)
    res = subprocess.run([sys.executable, "-m", "projlink.cli", "--catalog", str(DATA), "check", str(p), "planar"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stderr.startswith("PASS")
