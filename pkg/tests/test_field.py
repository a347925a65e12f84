import random

import pytest

from cdu.field import (
    FieldElement,
    FieldSpec,
    default_modulus,
    make_field,
    poly_mod,
    smallest_poly_factor,
)


# Independent reference arithmetic, written against coefficient lists rather
# than the packed-int shift loop the package uses, so the two can disagree.

def _bits(p):
    return [(p >> j) & 1 for j in range(p.bit_length())]


def oracle_mul(a, b, modulus):
    prod = [0] * (a.bit_length() + b.bit_length())
    for i, ca in enumerate(_bits(a)):
        for j, cb in enumerate(_bits(b)):
            prod[i + j] ^= ca & cb
    mod = _bits(modulus)
    dm = len(mod) - 1
    for top in range(len(prod) - 1, dm - 1, -1):
        if prod[top]:
            for j in range(dm + 1):
                prod[top - dm + j] ^= mod[j]
    return sum(c << j for j, c in enumerate(prod[:dm]))


def oracle_inv(x, modulus, m):
    for y in range(1, 1 << m):
        if oracle_mul(x, y, modulus) == 1:
            return y
    raise AssertionError("no inverse for %d" % x)


def oracle_irreducible(p):
    deg = p.bit_length() - 1
    for d in range(2, 1 << deg):
        if d.bit_length() - 1 < 1 or d.bit_length() - 1 > deg // 2:
            continue
        r = p
        while r.bit_length() >= d.bit_length():
            r ^= d << (r.bit_length() - d.bit_length())
        if r == 0:
            return False
    return True


DEFAULT_MODULI = {1: 0x2, 2: 0x7, 3: 0xB, 4: 0x13, 5: 0x25, 6: 0x43,
                  7: 0x83, 8: 0x11B, 10: 0x409, 12: 0x1009}


def test_default_moduli_frozen():
    for m, enc in DEFAULT_MODULI.items():
        assert default_modulus(m) == enc
        assert make_field(m).modulus == enc


def test_default_moduli_match_oracle():
    for m in range(1, 11):
        enc = default_modulus(m)
        assert oracle_irreducible(enc)
        for lower in range(1 << m, enc):
            assert not oracle_irreducible(lower), hex(lower)


def test_reducible_modulus_rejected_with_factor():
    with pytest.raises(ValueError, match="0x7"):
        make_field(4, 0b10101)  # (X^2+X+1)^2
    with pytest.raises(ValueError, match="reducible"):
        make_field(2, 0b110)
    with pytest.raises(ValueError, match="degree"):
        make_field(4, 0b111)
    with pytest.raises(ValueError):
        make_field(0)
    with pytest.raises(ValueError):
        make_field(25)


def test_f4_worked_values():
    f = make_field(2)
    assert f.modulus == 0b111
    assert f.mul(2, 2) == 3
    assert f.mul(2, 3) == 1
    assert f.inv(2) == 3
    assert f.frobenius(2, 1) == 3
    assert f.rel_trace(2, 1) == 1
    assert f.generator.value == 2
    assert f.pow(2, 3) == 1


def test_f16_worked_values():
    f = make_field(4)
    assert f.modulus == 0b10011
    assert f.mul(2, 8) == 3
    assert f.inv(2) == 9
    assert f.mul(2, 9) == 1
    assert f.pow(2, 15) == 1
    assert f.pow(0, 0) == 1
    assert f.pow(0, 7) == 0
    assert not f.is_in_subfield(2, 2)
    assert f.rel_trace(1, 2) == 0
    assert f.subfield_values(2) == [0, 1, 6, 7]
    assert f.subfield_values(1) == [0, 1]
    assert f.subfield_values(4) == list(range(16))
    assert f.generator.value == 2


def test_f2_degenerate():
    f = make_field(1)
    assert f.modulus == 0b10
    assert f.order == 2
    assert f.generator.value == 1
    assert f.mul(1, 1) == 1
    assert f.inv(1) == 1
    assert f.frobenius(1, 5) == 1
    assert f.rel_trace(1, 1) == 1


def test_mul_against_oracle_random():
    rng = random.Random(11)
    for m in (2, 3, 4, 6, 8, 11):
        f = make_field(m)
        for _ in range(200):
            a = rng.randrange(f.order)
            b = rng.randrange(f.order)
            assert f.mul(a, b) == oracle_mul(a, b, f.modulus)


def test_inverse_against_oracle():
    f = make_field(4)
    for x in range(1, 16):
        assert f.inv(x) == oracle_inv(x, f.modulus, 4)
        assert f.mul(x, f.inv(x)) == 1
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


def test_untabled_field_agrees_with_tabled():
    # degree 17 drops the log tables; spot-check against the oracle
    f = make_field(17)
    assert not f.has_tables
    rng = random.Random(5)
    for _ in range(25):
        a = rng.randrange(f.order)
        b = rng.randrange(f.order)
        assert f.mul(a, b) == oracle_mul(a, b, f.modulus)
    x = rng.randrange(1, f.order)
    assert f.mul(x, f.inv(x)) == 1
    assert f.frobenius(x, 17) == x


def test_pow_matches_repeated_mul():
    f = make_field(6)
    rng = random.Random(7)
    for _ in range(50):
        x = rng.randrange(f.order)
        k = rng.randrange(0, 200)
        acc = 1
        for _ in range(k):
            acc = f.mul(acc, x)
        assert f.pow(x, k) == acc
    with pytest.raises(ValueError):
        f.pow(3, -1)


def test_frobenius_is_automorphism():
    f = make_field(6)
    rng = random.Random(3)
    for s in (1, 2, 3, 6):
        for _ in range(100):
            x = rng.randrange(f.order)
            y = rng.randrange(f.order)
            assert f.frobenius(x ^ y, s) == f.frobenius(x, s) ^ f.frobenius(y, s)
            assert (f.frobenius(f.mul(x, y), s)
                    == f.mul(f.frobenius(x, s), f.frobenius(y, s)))
            assert f.frobenius(x, f.m) == x


def test_rel_trace_lands_in_subfield_and_is_onto():
    for m, s in ((4, 1), (4, 2), (6, 2), (6, 3), (8, 4)):
        f = make_field(m)
        image = {f.rel_trace(x, s) for x in range(f.order)}
        sub = set(f.subfield_values(s))
        assert image == sub


def test_rel_trace_from_degree():
    f = make_field(8)
    # trace F_16 -> F_4 taken inside F_256: y + y^4 on the 16-element subfield
    for y in f.subfield_values(4):
        expect = y ^ f.frobenius(y, 2)
        assert f.rel_trace(y, 2, from_degree=4) == expect
    with pytest.raises(ValueError):
        f.rel_trace(f.generator.value, 2, from_degree=4)  # not in F_16
    with pytest.raises(ValueError):
        f.rel_trace(1, 3, from_degree=4)  # 3 does not divide 4
    with pytest.raises(ValueError):
        f.rel_trace(1, 3)  # 3 does not divide 8


def test_subfield_membership_counts():
    f = make_field(12)
    for s in (1, 2, 3, 4, 6, 12):
        vals = f.subfield_values(s)
        assert len(vals) == 1 << s
        assert vals == sorted(vals)
        assert all(f.is_in_subfield(v, s) for v in vals)
    with pytest.raises(ValueError):
        f.subfield_values(5)
    with pytest.raises(ValueError):
        f.is_in_subfield(1, 7)


def test_element_wrapper_ops():
    f = make_field(4)
    x = f.element(2)
    y = f.element(8)
    assert (x + y).value == 10
    assert (x * y).value == 3
    assert (x ** 15).value == 1
    assert x.inverse().value == 9
    assert (y / x).value == f.mul(8, 9)
    assert x.frobenius(2) == f.element(f.frobenius(2, 2))
    assert x.rel_trace(1).value == f.rel_trace(2, 1)
    assert int(y) == 8 and bool(y) and not bool(f.element(0))
    with pytest.raises(ValueError):
        f.element(16)
    with pytest.raises(ValueError):
        f.element(-1)


def test_element_field_mismatch_rejected():
    a = make_field(4).element(3)
    b = make_field(2).element(3)
    with pytest.raises(ValueError, match="different fields"):
        a + b
    with pytest.raises(ValueError, match="different fields"):
        a * b
    assert a != b
    # same construction parameters compare equal and interoperate
    c = make_field(4).element(5)
    assert (a + c).value == 6


def test_parse_element_formats():
    f = make_field(4)
    assert f.parse_element("0").value == 0
    assert f.parse_element("13").value == 13
    assert f.parse_element("0xd").value == 13
    assert f.parse_element("g").value == 2
    assert f.parse_element("g^0").value == 1
    assert f.parse_element("g^5").value == 6
    assert f.parse_element(" G^10 ").value == 7
    for bad in ("16", "-1", "g^-2", "x+1", "0x10"):
        with pytest.raises(ValueError):
            f.parse_element(bad)


def test_bulk_maps_match_scalar_ops():
    f = make_field(6)
    import numpy as np
    xs = np.arange(f.order)
    for k in (0, 1, 2, 7, 63, 64, 200):
        pm = f.pow_map(k)
        assert [int(v) for v in pm] == [f.pow(x, k) for x in range(f.order)]
    for s in (1, 2, 3):
        fm = f.frob_map(s)
        assert [int(v) for v in fm] == [f.frobenius(x, s) for x in range(f.order)]
        tm = f.trace_map(s)
        assert [int(v) for v in tm] == [f.rel_trace(x, s) for x in range(f.order)]
    for c in (0, 1, 5, 63):
        mv = f.mul_vec(c, xs)
        assert [int(v) for v in mv] == [f.mul(c, x) for x in range(f.order)]


def test_poly_helpers():
    assert poly_mod(0b10011, 0b111) != 0
    assert poly_mod(0b10101, 0b111) == 0
    assert smallest_poly_factor(0b10011) == 0
    assert smallest_poly_factor(0b10101) == 0b111
