import dataclasses
import json
import re
from fractions import Fraction

import pytest

from g2nu import catalog, docio
from g2nu.cli import main
from g2nu.config import Configuration
from g2nu.errors import InputError

F = Fraction


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# --- catalog -----------------------------------------------------------------


def test_catalog_verifies():
    results = catalog.verify_all()
    assert [r.id for r in results] == ["ex_3_6", "ex_3_7", "ex_3_8", "ex_3_10", "ex_3_11", "rect_b74", "rect_b86"]
    assert all(r.ok for r in results), [r.problems for r in results]
    assert catalog.verify_all([]) == []


def test_tampered_entry_fails():
    e = catalog.get("ex_3_6")
    bad_cfg = Configuration(e.id, 1, 1, [[2, 1], [1, 4]], F(1, 4), 2, 1)
    res = catalog.verify_entry(dataclasses.replace(e, configuration=bad_cfg))
    assert not res.ok and any("angle mismatch" in p for p in res.problems)
    res = catalog.verify_entry(dataclasses.replace(e, expected_nu_bar=-42))
    assert not res.ok and any("nu_bar mismatch" in p for p in res.problems)


def test_catalog_unknown_id():
    with pytest.raises(InputError):
        catalog.get("ex_9_9")


def test_entries_carry_manifold_data():
    pairs = {(e.manifold.b3, e.manifold.div_p1) for e in catalog.entries()}
    assert {(134, 48), (97, 4), (91, 8), (86, 4), (109, 4)} <= pairs
    assert all(e.citation and not re.search(r"\d+\.\d+", e.citation) for e in catalog.entries())


def test_berger_identity():
    assert catalog.berger_identity() == 1


# --- documents ---------------------------------------------------------------


@pytest.mark.parametrize("entry", catalog.entries(), ids=lambda e: e.id)
def test_document_round_trip(entry):
    text = docio.dumps(entry.document())
    back = docio.loads(text)
    assert back.configuration == entry.configuration
    assert back.manifold.b3 == entry.manifold.b3
    assert docio.dumps(back) == text
    assert list(json.loads(text)) == [k for k in docio.KEY_ORDER if k in json.loads(text)]


@pytest.mark.parametrize(
    "doc,needle",
    [
        ("[]", "JSON object"),
        ('{"name": "x"}', "missing"),
        ('{"name": "x", "bogus": 1}', "unknown keys"),
        ("{\n  \"name\": ,\n}", "line 2"),
    ],
)
def test_document_errors(doc, needle):
    with pytest.raises(InputError, match=needle):
        docio.loads(doc)


def test_document_halves_as_strings():
    d = docio.to_dict(catalog.get("ex_3_6").document())
    d.update(k_plus=3, nu_bar_plus="1/3", nu_bar_minus=2)
    doc = docio.from_dict(d)
    assert doc.configuration.nu_bar_plus == F(1, 3)
    assert docio.to_dict(doc)["nu_bar_plus"] == "1/3"


# --- command line ------------------------------------------------------------


@pytest.fixture
def doc_path(tmp_path):
    def write(entry_id, **changes):
        d = docio.to_dict(catalog.get(entry_id).document())
        d.update(changes)
        p = tmp_path / f"{entry_id}.json"
        p.write_text(json.dumps(d))
        return str(p)

    return write


def test_cli_catalog(capsys):
    code, out, _ = run(capsys, "catalog", "verify")
    assert code == 0 and "7/7 pass" in out
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0 and out.count("\n") == 7
    code, out, _ = run(capsys, "catalog", "show", "ex_3_6")
    assert code == 0 and json.loads(out)["gram"] == [[2, 2], [2, 4]]
    code, _, err = run(capsys, "catalog", "show", "bogus")
    assert code == 2 and "unknown catalog id" in err


def test_cli_show_then_nu_round_trip(capsys, tmp_path):
    for e in catalog.entries():
        _, out, _ = run(capsys, "catalog", "show", e.id)
        p = tmp_path / "doc.json"
        p.write_text(out)
        code, out, _ = run(capsys, "--format", "json", "nu", str(p))
        payload = json.loads(out)
        assert code == 0
        assert payload["nu_bar"] == f"{e.expected_nu_bar}/1"
        assert payload["nu_mod_48"] == e.expected_nu_mod_48


def test_cli_nu_json_is_stable(capsys, doc_path):
    path = doc_path("ex_3_10")
    _, first, _ = run(capsys, "nu", path, "--format", "json")
    _, second, _ = run(capsys, "--format", "json", "nu", path)
    assert first == second
    payload = json.loads(first)
    assert list(payload) == [
        "name", "rho_over_pi", "m_rho", "term_halves", "term_gluing", "term_maslov",
        "nu_bar", "nu_mod_48", "b1", "integral", "divisible_by_3", "within_bound", "conditional_on_halves",
    ]
    for key in ("rho_over_pi", "term_halves", "term_gluing", "nu_bar"):
        assert re.fullmatch(r"-?\d+/[1-9]\d*", payload[key])
    assert payload["rho_over_pi"] == "2/3" and payload["nu_bar"] == "-51/1"


def test_cli_angles(capsys, doc_path):
    code, out, _ = run(capsys, "angles", doc_path("ex_3_7"))
    assert code == 0
    assert out.strip() == "alpha+ = {pi/2, -pi/2, 0}; alpha- = {pi/2, -pi/2, 0 x17}"
    code, out2, _ = run(capsys, "--no-exact", "angles", doc_path("ex_3_7"))
    assert code == 0 and out2 == out


def test_cli_exit_codes(capsys, doc_path, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{ not json")
    code, _, err = run(capsys, "nu", str(bad))
    assert code == 2 and "line 1" in err
    code, _, _ = run(capsys, "nu", str(tmp_path / "missing.json"))
    assert code == 2
    code, _, err = run(capsys, "nu", doc_path("ex_3_6", theta={"num": 1, "den": 6}))
    assert code == 4 and "requires" in err
    code, _, _ = run(capsys, "nu", doc_path("ex_3_6", gram=[[2, 2], [2, 2]]))
    assert code == 3
    code, _, _ = run(capsys, "nu", doc_path("ex_3_6", gram=[[3, 2], [2, 4]]))
    assert code == 3


def test_cli_classify(capsys, doc_path):
    code, out, _ = run(capsys, "classify", doc_path("ex_3_7"), doc_path("rect_b74"))
    assert code == 0 and "diffeomorphic_distinct_structures" in out
    code, out, _ = run(capsys, "--format", "json", "classify", doc_path("ex_3_11"), doc_path("rect_b86"))
    payload = json.loads(out)
    assert payload["level"] == "diffeomorphic_same_structure_distinct_moduli_components"
    assert len(payload["reasoning"]) >= 3


def test_cli_match_torus(capsys):
    code, out, _ = run(
        capsys, "match-torus", "--k-plus", "2", "--zeta-plus", "1", "--xi-plus", "1",
        "--k-minus", "1", "--zeta-minus", "1/sqrt(2)", "--xi-minus", "1/sqrt(2)",
    )
    assert code == 0 and "theta = pi/4" in out.splitlines()
    code, out, _ = run(
        capsys, "match-torus", "--k-plus", "2", "--zeta-plus", "1", "--xi-plus", "sqrt(3)",
        "--k-minus", "2", "--zeta-minus", "sqrt(3)", "--xi-minus", "1",
    )
    assert "theta = pi/6" in out.splitlines()
    code, out, _ = run(
        capsys, "match-torus", "--k-plus", "1", "--zeta-plus", "1", "--xi-plus", "1",
        "--k-minus", "1", "--zeta-minus", "1", "--xi-minus", "2",
    )
    assert code == 0 and out.strip() == "no matching isometry"
    code, _, _ = run(
        capsys, "match-torus", "--k-plus", "1", "--zeta-plus", "sqrt(5)", "--xi-plus", "1",
        "--k-minus", "1", "--zeta-minus", "1", "--xi-minus", "1",
    )
    assert code == 2
