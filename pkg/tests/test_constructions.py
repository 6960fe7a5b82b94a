import numpy as np
import pytest

from conftest import build, gcd_units
from finring import core
from finring.classify import fingerprint
from finring.constructions import (AbelianGroup, BimodulePairing, abelian_of,
                                   augmentation_ideal, augmentation_map,
                                   builtin_group, cyclic_group, direct_product,
                                   element_order, finite_field,
                                   formal_triangular, group_exponent,
                                   group_product, group_ring, is_p_group,
                                   matrix_ring, morita_ring, trivial_extension,
                                   truncated_poly, upper_triangular,
                                   validate_group, zero_module, zmod)
from finring.core import (CapExceeded, RingError, jacobson_radical,
                          quasi_nilpotents, quotient, units, validate)


def test_zmod_basics():
    R = zmod(12)
    assert R.order == 12
    assert set(units(R).indices) == gcd_units(12) == {1, 5, 7, 11}
    assert zmod(1).order == 1 and zmod(1).zero == zmod(1).one
    F2 = zmod(2)
    assert len(units(F2)) == 1


def test_zmod_rejects_bad_modulus():
    with pytest.raises(RingError):
        zmod(0)
    with pytest.raises(CapExceeded):
        zmod(100, max_order=50)


def test_finite_field_small():
    F2 = finite_field(2, 1)
    assert F2.order == 2 and np.array_equal(F2.mul, zmod(2).mul)
    F4 = finite_field(2, 2)
    assert F4.order == 4
    assert len(units(F4)) == 3
    assert quasi_nilpotents(F4).indices == (0,)
    assert F4.info["modulus"] == [1, 1, 1]  # x^2 + x + 1


def test_finite_field_modulus_is_smallest():
    F9 = finite_field(3, 2)
    assert F9.info["modulus"] == [1, 0, 1]  # x^2 + 1
    assert len(units(F9)) == 8


def test_finite_field_all_nonzero_invertible():
    for p, k in ((2, 3), (2, 4), (5, 2), (3, 3)):
        F = finite_field(p, k)
        assert len(units(F)) == F.order - 1


def test_finite_field_rejects_composite_characteristic():
    with pytest.raises(RingError):
        finite_field(4, 1)
    with pytest.raises(RingError):
        finite_field(6, 2)


def test_direct_product_matches_crt():
    P = direct_product([zmod(4), zmod(3)])
    assert P.order == 12
    assert len(units(P)) == 4
    assert fingerprint(P) == fingerprint(zmod(12))


def test_direct_product_single_factor_keeps_tables():
    R = zmod(6)
    P = direct_product([R])
    assert np.array_equal(P.add, R.add) and np.array_equal(P.mul, R.mul)


def test_direct_product_of_two_fields_is_tripotent():
    P = direct_product([zmod(2), zmod(3)])
    idx = np.arange(6)
    assert (P.mul[P.mul[idx, idx], idx] == idx).all()


def test_matrix_ring_unit_counts():
    M = matrix_ring(2, zmod(2))
    assert M.order == 16 and len(units(M)) == 6
    M3 = matrix_ring(2, zmod(3))
    assert M3.order == 81 and len(units(M3)) == 48


def test_matrix_ring_size_one_keeps_tables():
    R = zmod(5)
    M = matrix_ring(1, R)
    assert np.array_equal(M.mul, R.mul) and np.array_equal(M.add, R.add)


def test_upper_triangular_structure():
    T = upper_triangular(2, zmod(2))
    assert T.order == 8
    assert len(jacobson_radical(T)) == 2
    T3 = upper_triangular(2, zmod(3))
    assert T3.order == 27 and len(units(T3)) == 12
    R = zmod(4)
    assert np.array_equal(upper_triangular(1, R).mul, R.mul)


def test_trivial_extension_units_pattern():
    R = zmod(3)
    T = trivial_extension(R)
    assert T.order == 9 and len(units(T)) == 6
    # units are exactly the pairs whose first component is a unit
    mask = units(T).mask.reshape(3, 3)
    assert (mask == units(R).mask[:, None]).all()


def test_trivial_extension_equals_truncated_poly_tables():
    for text in ("Z(2)", "Z(3)", "GF(2, 2)"):
        R = build(text)
        T, P = trivial_extension(R), truncated_poly(R, 2)
        assert np.array_equal(T.add, P.add)
        assert np.array_equal(T.mul, P.mul)
        assert T.zero == P.zero and T.one == P.one


def test_truncated_poly_degree_one_keeps_tables():
    R = zmod(6)
    assert np.array_equal(truncated_poly(R, 1).mul, R.mul)


def test_truncated_poly_nilpotent_generator():
    P = truncated_poly(zmod(3), 3)
    assert P.order == 27
    x = 3  # digits (0, 1, 0): the class of x
    assert P.element_name(x) == "x"
    assert P.pow_i(x, 2) != P.zero
    assert P.pow_i(x, 3) == P.zero


def test_every_builder_output_validates():
    samples = [zmod(9), finite_field(2, 3), direct_product([zmod(2), zmod(9)]),
               matrix_ring(2, zmod(2)), upper_triangular(3, zmod(2)),
               trivial_extension(zmod(5)), truncated_poly(zmod(2), 4),
               group_ring(zmod(3), cyclic_group(3))]
    for R in samples:
        assert validate(R).ok, R.label


# --- groups ----------------------------------------------------------------

def test_cyclic_group():
    G = cyclic_group(4)
    validate_group(G)
    assert group_exponent(G) == 4
    assert element_order(G, 1) == 4 and element_order(G, 2) == 2
    assert cyclic_group(1).order == 1


def test_builtin_groups():
    S3 = builtin_group("S3")
    assert S3.order == 6
    assert (S3.cayley != S3.cayley.T).any()          # non-abelian
    assert not any(is_p_group(S3, p) for p in (2, 3, 5))
    D4 = builtin_group("D4")
    assert D4.order == 8 and is_p_group(D4, 2)
    assert (D4.cayley != D4.cayley.T).any()
    Q8 = builtin_group("Q8")
    assert is_p_group(Q8, 2)
    assert group_exponent(Q8) == 4
    # i * j = k but j * i = -k
    assert Q8.op(2, 4) == 6 and Q8.op(4, 2) == 7
    K = builtin_group("Klein")
    assert K.order == 4 and group_exponent(K) == 2
    with pytest.raises(RingError):
        builtin_group("A5")


def test_group_product_klein():
    G = group_product([cyclic_group(2), cyclic_group(2)])
    assert G.order == 4 and group_exponent(G) == 2
    assert np.array_equal(G.cayley, builtin_group("Klein").cayley)


def test_trivial_group_is_p_group_for_all_p():
    G = cyclic_group(1)
    assert is_p_group(G, 2) and is_p_group(G, 3) and is_p_group(G, 7)


# --- group rings -------------------------------------------------------------

def test_group_ring_z2c2():
    RG = group_ring(zmod(2), cyclic_group(2))
    assert RG.order == 4
    delta = augmentation_ideal(RG)
    assert len(delta) == 2
    assert set(delta.indices) <= set(jacobson_radical(RG).indices)


def test_group_ring_z3c2_splits():
    RG = group_ring(zmod(3), cyclic_group(2))
    assert fingerprint(RG) == fingerprint(direct_product([zmod(3), zmod(3)]))


def test_group_ring_over_trivial_group_keeps_tables():
    R = zmod(6)
    RG = group_ring(R, cyclic_group(1))
    assert np.array_equal(RG.mul, R.mul) and np.array_equal(RG.add, R.add)


def test_augmentation_is_surjective_ring_homomorphism():
    for base_text, gname in (("Z(2)", "C(4)"), ("Z(3)", "C(3)"), ("Z(4)", "C(2)")):
        base = build(base_text)
        RG = build(f"GroupRing({base_text}, {gname})")
        eps = augmentation_map(RG)
        assert set(int(v) for v in eps) == set(range(base.order))
        n = RG.order
        pairs_a = np.repeat(np.arange(n), n)
        pairs_b = np.tile(np.arange(n), n)
        assert (eps[RG.add[pairs_a, pairs_b]]
                == base.add[eps[pairs_a], eps[pairs_b]]).all()
        assert (eps[RG.mul[pairs_a, pairs_b]]
                == base.mul[eps[pairs_a], eps[pairs_b]]).all()


def test_group_ring_mod_delta_has_base_fingerprint():
    base = zmod(2)
    RG = group_ring(base, cyclic_group(4))
    Q = quotient(RG, augmentation_ideal(RG))
    assert fingerprint(Q) == fingerprint(base)


def test_augmentation_accessors_reject_other_rings():
    with pytest.raises(RingError):
        augmentation_map(zmod(6))


# --- Morita context rings ----------------------------------------------------

def _full_context(R):
    mod = abelian_of(R)
    return BimodulePairing(R, R, mod, mod, am=R.mul, mb=R.mul, bn=R.mul,
                           na=R.mul, phi=R.mul, psi=R.mul)


def _scaled_context(R, c):
    v = np.arange(R.order, dtype=np.int64)
    pair = (v[:, None] * v[None, :] * c) % R.order
    mod = abelian_of(R)
    return BimodulePairing(R, R, mod, mod, am=R.mul, mb=R.mul, bn=R.mul,
                           na=R.mul, phi=pair, psi=pair)


def test_full_context_over_z2_is_the_2x2_matrix_ring():
    ring = morita_ring(_full_context(zmod(2)))
    M = matrix_ring(2, zmod(2))
    assert np.array_equal(ring.mul, M.mul)
    assert np.array_equal(ring.add, M.add)
    assert ring.one == M.one
    assert not ring.info["trace_nilpotent"]


def test_degenerate_context_is_the_triangular_ring():
    for m in (2, 3):
        R = zmod(m)
        tri = formal_triangular(R, R, abelian_of(R), R.mul, R.mul)
        T = upper_triangular(2, R)
        assert np.array_equal(tri.mul, T.mul)
        assert np.array_equal(tri.add, T.add)
        assert tri.info["trace_nilpotent"] and tri.info["trace_central"]


def test_trivial_context_matches_trivial_extension_of_the_product():
    R = zmod(2)
    mod = abelian_of(R)
    zero_pair = np.zeros((2, 2), dtype=np.int32)
    ring = morita_ring(BimodulePairing(R, R, mod, mod, am=R.mul, mb=R.mul,
                                       bn=R.mul, na=R.mul,
                                       phi=zero_pair, psi=zero_pair))
    # manual trivial extension of A x B by the twisted module M + N
    P = direct_product([R, R])
    n = 16
    add = np.zeros((n, n), dtype=np.int64)
    mul = np.zeros((n, n), dtype=np.int64)
    for r in range(4):
        for x in range(4):
            for s in range(4):
                for y in range(4):
                    i, j = r * 4 + x, s * 4 + y
                    add[i, j] = int(P.add[r, s]) * 4 + ((x // 2 + y // 2) % 2) * 2 \
                        + (x % 2 + y % 2) % 2
                    a, b = r // 2, r % 2
                    m1, n1 = x // 2, x % 2
                    a2, b2 = s // 2, s % 2
                    m2, n2 = y // 2, y % 2
                    mod_part = ((a * m2 + m1 * b2) % 2) * 2 + (b * n2 + n1 * a2) % 2
                    mul[i, j] = int(P.mul[r, s]) * 4 + mod_part
    neg = np.array([add[i].tolist().index(0) for i in range(n)])
    manual = core.FiniteRing(n, add, neg, mul, 0, int(P.one) * 4, label="manual")
    assert validate(manual).ok
    assert fingerprint(ring) == fingerprint(manual)


def test_scaled_context_trace_flags_and_validation():
    ring = morita_ring(_scaled_context(zmod(4), 2))
    assert ring.info["trace_nilpotent"] and ring.info["trace_central"]
    bad = _full_context(zmod(2))
    broken = BimodulePairing(bad.A, bad.B, bad.M, bad.N, am=bad.am, mb=bad.mb,
                             bn=bad.bn, na=bad.na, phi=bad.phi,
                             psi=np.zeros((2, 2), dtype=np.int32))
    with pytest.raises(RingError):
        morita_ring(broken)


def test_cap_violations():
    with pytest.raises(CapExceeded):
        matrix_ring(3, zmod(7))          # 7^9 elements
    with pytest.raises(CapExceeded):
        group_ring(zmod(2), builtin_group("Q8"), max_order=100)
    with pytest.raises(CapExceeded):
        truncated_poly(zmod(10), 5)      # 100000 elements


def test_element_names():
    assert build("M(2, Z(2))").element_name(9) == "[[1, 0], [0, 1]]"
    assert build("TrivExt(Z(3))").element_name(5) == "(1, 2)"
    F4 = build("GF(2, 2)")
    assert [F4.element_name(i) for i in range(4)] == ["0", "1", "x", "x + 1"]
    RG = build("GroupRing(Z(2), C(2))")
    assert RG.element_name(3) == "1*e + 1*g"
    P = build("PolyMod(Z(3), 2)")
    assert P.element_name(5) == "1 + 2*x"
