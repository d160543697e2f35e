from seqlab import verification as vf


def test_report_sorted_and_complete():
    recs = vf.run_checks()
    ids = [r["check"] for r in recs]
    assert ids == sorted(ids)
    assert len(ids) == len(set(ids))
    assert {r["module"] for r in recs} == set(vf.MODULES)


def test_no_new_mismatches_and_every_misprint_used():
    recs = {r["check"]: r for r in vf.run_checks()}
    known = vf.load_known_misprints()
    assert [c for c, r in recs.items() if r["status"] == "mismatch-new"] == []
    for check, entry in known.items():
        assert recs[check]["status"] == "mismatch-known-misprint", check
        assert recs[check]["expected"] == entry["printed"]


def test_known_misprint_needs_exact_derived_value():
    chk = vf.Check("arith-functions.Z.4", "arith-functions", "Z table n=4", 3, lambda: 8)
    assert vf.classify(chk, 8, vf.load_known_misprints()) == "mismatch-new"
    assert vf.classify(chk, 7, vf.load_known_misprints()) == "mismatch-known-misprint"


def test_scope_filter():
    recs = vf.run_checks("sieves")
    assert recs and all(r["module"] == "sieves" for r in recs)
