import json

import pytest

from deltaring import (
    CapacityError,
    classify,
    constructions as con,
    harness,
    zn,
)
from deltaring.harness import (
    CHECK_IDS,
    CHECKS,
    FAIL,
    NOT_APPLICABLE,
    PASS,
    VACUOUS,
    build_corpus,
    check_dorroh,
    check_h_ring_equivalence,
    load_manifest,
    reverify_not_dqp_witness,
    run_check,
    run_suite,
)
from deltaring.ringspec import RingSpecError

VERDICTS = {PASS, FAIL, NOT_APPLICABLE, VACUOUS}


def test_registry_is_complete_and_ordered():
    assert CHECK_IDS[0] == "C00"
    assert len(CHECK_IDS) == 32
    assert list(CHECK_IDS) == sorted(CHECK_IDS)
    for check_id, check in CHECKS.items():
        assert check.statement, check_id


def test_every_check_returns_a_known_verdict(z4, t2z2):
    for ring in (z4, t2z2):
        for check_id in CHECK_IDS:
            result = run_check(check_id, ring)
            assert result.verdict in VERDICTS, (check_id, ring.spell())
            assert result.ring == ring.spell()
            d = result.to_dict()
            assert d["check"] == check_id
            assert "millis" not in d
            assert "millis" in result.to_dict(timing=True)


def test_unknown_check_id_is_rejected(z4, corpus):
    with pytest.raises(KeyError, match="C99"):
        run_check("C99", z4)
    with pytest.raises(KeyError, match="C99"):
        run_suite(corpus[:1], ("C99",))


def test_full_suite_over_packaged_corpus(corpus):
    report = run_suite(corpus)
    assert len(report.corpus) == 26
    assert len(report.results) == 26 * 32
    summary = report.summary()
    assert summary["fail"] == 0
    # regression pin for the packaged corpus
    assert summary == {"pass": 503, "fail": 0, "na": 313, "vacuous": 16}
    assert report.failures() == []


def test_vacuous_rows_carry_their_evidence(corpus):
    report = run_suite(corpus, ("C22",))
    vacuous = [r for r in report.results if r.verdict == VACUOUS]
    expected_rings = {
        "Z2", "Z4", "Z8", "Z16",
        "T(2, Z2)", "T(2, Z4)", "T(3, Z2)",
        "prod(Z2, Z2)", "prod(Z2, Z4)",
        "corner(T(2, Z2), 4)", "corner(M(2, Z2), 8)",
        "H(1, 1, Z2)", "H(1, 1, Z4)",
        "dorroh(Z2, self)", "dorroh(Z4, ideal(2))",
        "quot(Z4, 2)",
    }
    assert {r.ring for r in vacuous} == expected_rings
    for r in vacuous:
        assert "is not a unit" in r.note
        assert "2 in delta(R): True" in r.note


def test_axiom_failure_gates_all_other_checks(z4, tmp_path):
    bad = harness.mutate_mul_entry(z4, 2, 3, 1)
    entry = harness.CorpusEntry("mutant", bad)
    report = run_suite([entry])
    gate = report.results[0]
    assert gate.check == "C00" and gate.verdict == FAIL
    assert gate.witness is not None
    assert set(gate.witness) == {"elements", "names", "detail"}
    assert "violated" in gate.note
    rest = report.results[1:]
    assert len(rest) == 31
    assert all(r.verdict == NOT_APPLICABLE for r in rest)
    assert all(r.note == "ring axioms failed; see C00" for r in rest)


def test_gate_row_survives_check_filtering(z4):
    bad = harness.mutate_mul_entry(z4, 2, 3, 1)
    report = run_suite([harness.CorpusEntry("mutant", bad)], ("C07",))
    assert [r.check for r in report.results] == ["C00", "C07"]
    assert report.results[0].verdict == FAIL
    assert report.results[1].verdict == NOT_APPLICABLE
    # on a sound ring the gate row is omitted unless selected
    report = run_suite([harness.CorpusEntry("Z4", z4)], ("C07",))
    assert [r.check for r in report.results] == ["C07"]


def test_suite_output_is_deterministic_and_parallelism_independent(corpus):
    first = run_suite(corpus).to_dict()
    second = run_suite(corpus).to_dict()
    serial = run_suite(corpus, jobs=1).to_dict()
    assert json.dumps(first, sort_keys=True) == json.dumps(second, sort_keys=True)
    assert json.dumps(first, sort_keys=True) == json.dumps(serial, sort_keys=True)
    assert "millis" not in json.dumps(first)
    timed = run_suite(corpus).to_dict(timing=True)
    assert "total_millis" in timed["summary"]
    assert all("millis" in row for row in timed["results"])


def test_markdown_rendering(corpus):
    report = run_suite(corpus, ("C01", "C22"))
    text = report.to_markdown()
    assert text.startswith("# Verification suite")
    assert "| check | statement |" in text
    assert "## Vacuous" in text
    assert "C22" in text


def test_manifest_loading(tmp_path):
    manifest = tmp_path / "rings.txt"
    manifest.write_text("# comment\n\nZ4\n  T(2, Z2)  \n# tail\nZ6\n")
    assert load_manifest(manifest) == [(3, "Z4"), (4, "T(2, Z2)"), (6, "Z6")]


def test_corpus_build_errors_carry_line_numbers(tmp_path):
    manifest = tmp_path / "rings.txt"
    manifest.write_text("Z4\nZ\n")
    with pytest.raises(RingSpecError, match="rings.txt line 2"):
        build_corpus(manifest)

    manifest.write_text("Z4\n\n# big\nM(2, Z16)\n")
    with pytest.raises(CapacityError, match="rings.txt line 4"):
        build_corpus(manifest)


def test_packaged_corpus_is_the_default(corpus):
    default = build_corpus()
    assert [e.spec_text for e in default] == [e.spec_text for e in corpus]
    assert len(default) >= 20
    assert max(e.ring.size for e in default) <= 4096


def test_extension_and_subring_entry_points(z2, z4):
    result = check_dorroh(z2, con.self_action(z2))
    assert result.check == "C29" and result.verdict == PASS
    result = check_dorroh(z4, con.ideal_action(z4, [2]))
    assert result.check == "C29" and result.verdict == PASS
    result = check_h_ring_equivalence(z4, 1, 1)
    assert result.check == "C30" and result.verdict == PASS
    result = check_h_ring_equivalence(zn(3), 1, 1)
    assert result.check == "C30" and result.verdict in (PASS, NOT_APPLICABLE)


def test_witness_reverification_is_independent(z4, m2z2):
    ok, first_failure = classify.is_delta_quasipolar(m2z2)
    assert not ok
    assert reverify_not_dqp_witness(m2z2, first_failure)
    # elements that do have a spectral idempotent are not witnesses
    assert not reverify_not_dqp_witness(z4, 2)
    assert not reverify_not_dqp_witness(m2z2, 0)
