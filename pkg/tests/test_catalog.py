import json
import math

import pytest

from fpint import catalog as cat
from fpint.errors import UnknownItem


def test_item_counts():
    assert len(cat.C_ITEMS) == 32
    assert len(cat.D_CATALOG) == 25
    assert len(cat.ALL_ITEMS) == 57
    assert len(cat.list_items()) == 57


def test_linked_items_cross_consistency():
    # every C -> D link agrees with the D side's used-in annotations
    for cid, item in cat.C_ITEMS.items():
        for did in item.linked_fp_items:
            assert cid in cat.D_CATALOG[did].linked_fp_items, (cid, did)
    for did, item in cat.D_CATALOG.items():
        for cid in item.linked_fp_items:
            assert did in cat.C_ITEMS[cid].linked_fp_items, (did, cid)


def test_known_link_pairs():
    assert cat.D_CATALOG["D.1"].linked_fp_items == ("C.10", "C.11")
    assert cat.D_CATALOG["D.3"].linked_fp_items == ("C.5", "C.7", "C.8", "C.9")
    assert set(cat.C_ITEMS["C.31"].linked_fp_items) == {"D.13", "D.14", "D.15"}


def test_list_filters():
    airy_c = cat.list_items(function="airy", kind="hilbert")
    assert [r["id"] for r in airy_c] == ["C.25", "C.26", "C.27", "C.28", "C.29", "C.30"]
    sym = {r["id"] for r in cat.list_items(kernel="sym_omega")}
    assert {"C.10", "C.20"} <= sym


def test_unknown_item():
    with pytest.raises(UnknownItem):
        cat.get_item("C.99")


def test_eval_closed_form_d1():
    got = cat.eval_closed_form("D.1", {"a": 1.0, "m": 1, "nu": 0.5})
    assert abs(got + 2.0 * math.sqrt(math.pi)) < 1e-12


def test_eval_closed_form_c19_contraction():
    # at s=1, mu=1, nu=1/2 the Gauss factor collapses to 1/(1+omega):
    # the whole value reduces to 0.8 pi at omega = 1/4 (frozen PV agrees)
    got = cat.eval_closed_form("C.19", {"s": 1.0, "mu": 1.0, "nu": 0.5}, omega=0.25)
    assert abs(got - 0.8 * math.pi) < 1e-10


def test_eval_closed_form_c5_prefactor_zero():
    got = cat.eval_closed_form("C.5", {"a": 1.0}, omega=0.0)
    assert got == 0.0


def test_verify_item_d5_samples():
    samples = [{"a": 1.0, "k": 0}, {"a": 2.0, "k": 1}, {"a": 0.5, "k": 1}]
    rep = cat.verify_item("D.5", samples=samples)
    assert rep.passed, [(s.params, s.max_pairwise_rel, s.error) for s in rep.samples]


def test_verify_item_c10_samples():
    samples = [{"a": 1.0, "nu": 0.25, "omega": 0.3},
               {"a": 2.0, "nu": 0.5, "omega": 0.1},
               {"a": 1.0, "nu": 0.75, "omega": 0.6}]
    rep = cat.verify_item("C.10", samples=samples)
    assert rep.passed


def test_verify_item_domain_violation_recorded():
    # omega outside (0, pi/a) must be recorded, not raised
    bad = {"a": 2.0, "omega": math.pi / 2.0 + 0.5}
    rep = cat.verify_item("C.31", samples=[bad])
    assert not rep.passed
    assert rep.samples[0].error


def test_report_serialization_roundtrip():
    rep = cat.verify_item("D.13")
    text = cat.reports_to_json([rep])
    parsed = json.loads(text)
    assert parsed["reports"][0]["item"] == "D.13"
    assert parsed["reports"][0]["passed"] is True
    sample = parsed["reports"][0]["samples"][0]
    # bit-identical float round-trip through JSON
    assert sample["closed_form"]["re"] == rep.samples[0].closed.real

    csv_text = cat.reports_to_csv([rep])
    lines = csv_text.strip().splitlines()
    assert len(lines) == 1 + len(rep.samples)
    assert lines[0].startswith("item,params,")


def test_sampling_is_deterministic():
    item = cat.get_item("C.10")
    assert item.sampler(7) == item.sampler(7)
    assert item.sampler(7) != item.sampler(8)


def test_plasma_identity_spot():
    beta, wj, fj = 0.5, 1.0, 1.0
    gj = math.sqrt(2.0 * (1.0 - beta))
    w = 0.3 * cat.plasma_rho0(beta, wj)
    lhs = cat.plasma_pv_series(beta, wj, fj, gj, w)
    rhs = -math.pi * cat.plasma_re_part(beta, wj, fj, gj, w)
    assert abs(lhs - rhs) <= 1e-10 * abs(rhs)
