import pytest

from conftest import build
from finring.classify import (ClassReport, FLAG_ORDER, _check_lattice, classify,
                              canonical_kind, fingerprint, is_2uq_strong_form,
                              is_clean, is_exchange, is_semiregular, is_local,
                              is_reduced, is_semipotent, is_semitripotent,
                              is_tripotent, is_2primal, regular_family, two_uq,
                              unit_property)
from finring.core import RingError, nilpotents, jacobson_radical, \
    quasi_nilpotents, units


def test_unit_property_z12_is_2uq():
    ok, witness = unit_property(build("Z(12)"), "2UQ")
    assert ok and witness is None


def test_unit_property_z5_witness():
    ok, witness = unit_property(build("Z(5)"), "2UQ")
    assert not ok and witness == 2


def test_unit_property_witness_is_smallest_and_replays():
    R = build("M(2, Z(2))")
    ok, witness = unit_property(R, "2-UQ")
    assert not ok
    qn = quasi_nilpotents(R).mask
    failing = [u for u in units(R).indices
               if not qn[R.sub_i(R.mul_i(u, u), R.one)]]
    assert witness == min(failing)
    assert witness in units(R)
    assert not qn[R.sub_i(R.mul_i(witness, witness), R.one)]


def test_unit_property_kinds_on_z4():
    R = build("Z(4)")
    for kind in ("UU", "UJ", "UQ", "2UU", "2UJ", "2UQ"):
        ok, _ = unit_property(R, kind)
        assert ok, kind


def test_unit_property_rejects_unknown_kind():
    with pytest.raises(ValueError):
        unit_property(build("Z(4)"), "XX")
    assert canonical_kind("2UQ") == "2-UQ"


def test_strong_form_agrees_on_samples():
    for text in ("Z(12)", "GF(2, 2)", "GF(3, 1)", "M(2, Z(2))", "T(2, Z(3))"):
        R = build(text)
        assert is_2uq_strong_form(R) == two_uq(R), text


def test_clean_family():
    assert is_clean(build("Z(4)"))
    assert is_clean(build("GF(2, 1)"))
    for text in ("Z(12)", "GF(2, 3)", "M(2, Z(3))", "T(2, Z(2))",
                 "GroupRing(Z(2), C(3))"):
        R = build(text)
        assert is_clean(R) and is_exchange(R) and is_semiregular(R), text
        assert is_semipotent(R), text


def test_regular_family_values():
    flags = regular_family(build("Prod(Z(2), Z(3))"))
    assert all(flags.values())
    z4 = regular_family(build("Z(4)"))
    assert not z4["regular"] and z4["pi-regular"]
    m2 = regular_family(build("M(2, Z(2))"))
    assert m2["regular"] and not m2["strongly-regular"]
    assert m2["unit-regular"]


def test_tripotence_values():
    assert is_tripotent(build("Z(6)"))
    assert not is_tripotent(build("Z(12)"))
    assert is_semitripotent(build("Z(12)"))
    assert not is_reduced(build("T(2, Z(2))"))


def test_local_and_semisimple():
    assert is_local(build("Z(4)"))
    assert not is_local(build("Z(6)"))
    assert classify(build("M(2, Z(2))")).flags["semisimple"]
    assert is_2primal(build("T(2, Z(2))"))
    assert nilpotents(build("T(2, Z(2))")).indices == jacobson_radical(build("T(2, Z(2))")).indices


def test_classify_z12_report():
    rep = classify(build("Z(12)"))
    assert rep.order == 12
    assert rep.cardinalities == {"U": 4, "Id": 4, "Nil": 2, "C": 12,
                                 "QN": 2, "J": 2, "Nil*": 2}
    for k in ("2-UQ", "2-UJ", "2-UU", "clean", "semi-tripotent"):
        assert rep.flags[k], k
    assert not rep.flags["tripotent"]
    assert rep.witnesses["tripotent"] == [2]


def test_classify_f3_unit_kinds():
    # u = 2 has u - 1 = 1 outside Nil = J = QN = {0}, so all unsquared kinds
    # fail together; u^2 = 1 makes every squared kind hold
    rep = classify(build("GF(3, 1)"))
    for kind in ("UU", "UJ", "UQ"):
        assert not rep.flags[kind]
        assert rep.witnesses[kind] == [2]
    for kind in ("2-UU", "2-UJ", "2-UQ"):
        assert rep.flags[kind]


def test_classify_zero_ring_is_vacuously_everything():
    rep = classify(build("Z(1)"))
    assert all(rep.flags.values())
    assert rep.cardinalities["U"] == 1


def test_classify_flag_order_is_stable():
    rep = classify(build("Z(6)"))
    assert tuple(rep.flags) == FLAG_ORDER
    assert tuple(rep.to_dict()["flags"]) == FLAG_ORDER


def test_witnesses_replay_their_flag():
    rep = classify(build("GF(2, 2)"))
    R = build("GF(2, 2)")
    for kind in ("UU", "UJ", "UQ", "2-UU", "2-UJ", "2-UQ"):
        assert not rep.flags[kind]
        (w,) = rep.witnesses[kind]
        assert w in units(R)


def test_lattice_checker_fires_on_inconsistency():
    flags = {k: False for k in FLAG_ORDER}
    flags["UJ"] = True          # UJ without 2-UJ is impossible
    with pytest.raises(RingError):
        _check_lattice("synthetic", flags)


def test_fingerprint_separates_and_identifies():
    assert fingerprint(build("Z(12)")) == fingerprint(build("Prod(Z(4), Z(3))"))
    assert fingerprint(build("Z(12)")) != fingerprint(build("Z(16)"))
    assert fingerprint(build("TrivExt(Z(2))")) == fingerprint(build("PolyMod(Z(2), 2)"))


def test_report_serialization_shape():
    doc = classify(build("Z(6)")).to_dict()
    assert set(doc) == {"label", "order", "cardinalities", "flags", "witnesses"}
    assert doc["label"] == "Z(6)"
    assert all(isinstance(v, bool) for v in doc["flags"].values())
    assert all(isinstance(v, int) for v in doc["cardinalities"].values())
