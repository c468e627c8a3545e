import json

import numpy as np
import pytest

from deltaring import (
    CapacityError,
    ConstructionError,
    MalformedTableError,
    analysis,
    constructions as con,
    zn,
)

import oracles


# -- modular and table rings ------------------------------------------------------


def test_zn_rejects_degenerate_sizes():
    with pytest.raises(ConstructionError):
        zn(1)
    with pytest.raises(ConstructionError):
        zn(0)
    with pytest.raises(ConstructionError):
        zn(-3)


def _z3_dict():
    return {
        "size": 3,
        "add": [[(x + y) % 3 for y in range(3)] for x in range(3)],
        "mul": [[(x * y) % 3 for y in range(3)] for x in range(3)],
        "zero": 0,
        "one": 1,
    }


def test_table_ring_from_dict_and_file(tmp_path):
    ring = con.table_ring(_z3_dict(), label="z3")
    assert ring.size == 3
    assert ring.mul(2, 2) == 1
    assert ring.spell() == "table:z3"

    path = tmp_path / "z3.json"
    path.write_text(json.dumps(_z3_dict()))
    ring2 = con.table_ring(path)
    assert np.array_equal(ring2.mul_table, ring.mul_table)
    assert ring2.spell() == "table:z3.json"


def test_table_ring_structural_errors(tmp_path):
    data = _z3_dict()
    del data["one"]
    with pytest.raises(MalformedTableError, match="missing keys"):
        con.table_ring(data)

    data = _z3_dict()
    data["add"] = [[0, 1], [1, 0]]
    with pytest.raises(MalformedTableError, match="3x3"):
        con.table_ring(data)

    data = _z3_dict()
    data["mul"][1][1] = 9
    with pytest.raises(MalformedTableError, match="outside"):
        con.table_ring(data)

    data = _z3_dict()
    data["size"] = "three"
    with pytest.raises(MalformedTableError, match="positive integer"):
        con.table_ring(data)

    bad_json = tmp_path / "bad.json"
    bad_json.write_text("{not json")
    with pytest.raises(MalformedTableError, match="not valid JSON"):
        con.table_ring(bad_json)

    with pytest.raises(MalformedTableError, match="cannot read"):
        con.table_ring(tmp_path / "missing.json")


def test_packaged_field_of_four_is_a_field(f4):
    assert f4.size == 4
    assert oracles.units_of(f4) == {1, 2, 3}
    assert f4.add(1, 1) == 0  # characteristic 2
    assert f4.mul(2, 3) == 1  # the two generators are mutually inverse


# -- products ----------------------------------------------------------------------


def test_product_encodes_componentwise():
    left, right = zn(2), zn(3)
    ring = con.product(left, right)
    assert ring.size == 6
    assert ring.spell() == "prod(Z2, Z3)"
    for r in range(2):
        for s in range(3):
            x = con.product_encode(ring, r, s)
            assert con.product_components(ring, x) == (r, s)
    assert con.product_components(ring, ring.one) == (1, 1)
    assert con.product_components(ring, ring.zero) == (0, 0)
    for x in ring.elements():
        for y in ring.elements():
            xr, xs = con.product_components(ring, x)
            yr, ys = con.product_components(ring, y)
            assert con.product_components(ring, ring.add(x, y)) == (
                left.add(xr, yr),
                right.add(xs, ys),
            )
            assert con.product_components(ring, ring.mul(x, y)) == (
                left.mul(xr, yr),
                right.mul(xs, ys),
            )


# -- matrix-shaped rings -----------------------------------------------------------


def test_full_matrix_ring_multiplies_like_matrices(m2z2):
    assert m2z2.size == 16
    base = zn(2)
    identity = con.matrix_encode(m2z2, [[1, 0], [0, 1]])
    assert m2z2.one == identity == 9
    assert con.matrix_unit_index(m2z2, 0, 0) == 8
    for x in m2z2.elements():
        grid = con.matrix_entries(m2z2, x)
        assert con.matrix_encode(m2z2, grid) == x
        for y in m2z2.elements():
            expected = oracles.matmul_of(base, grid, con.matrix_entries(m2z2, y))
            assert con.matrix_entries(m2z2, m2z2.mul(x, y)) == expected


def test_triangular_ring_multiplies_like_matrices(t2z2):
    assert t2z2.size == 8
    base = zn(2)
    for x in t2z2.elements():
        grid = con.matrix_entries(t2z2, x)
        assert grid[1][0] == 0  # strictly lower entries forced to zero
        assert con.matrix_encode(t2z2, grid) == x
        for y in t2z2.elements():
            expected = oracles.matmul_of(base, grid, con.matrix_entries(t2z2, y))
            assert con.matrix_entries(t2z2, t2z2.mul(x, y)) == expected
            added = oracles.matadd_of(base, grid, con.matrix_entries(t2z2, y))
            assert con.matrix_entries(t2z2, t2z2.add(x, y)) == added


def test_triangular_encode_rejects_lower_entries(t2z2):
    with pytest.raises(ConstructionError, match="must be the base zero"):
        con.matrix_encode(t2z2, [[1, 0], [1, 1]])


def test_three_by_three_triangular_against_oracle(corpus_rings):
    ring = corpus_rings["T(3, Z2)"]
    base = zn(2)
    assert ring.size == 64
    for x in range(0, ring.size, 7):
        for y in range(0, ring.size, 5):
            expected = oracles.matmul_of(
                base, con.matrix_entries(ring, x), con.matrix_entries(ring, y)
            )
            assert con.matrix_entries(ring, ring.mul(x, y)) == expected


def test_one_by_one_matrix_ring_is_the_base():
    base = zn(6)
    ring = con.matrix_ring(1, base)
    assert ring.size == 6
    assert np.array_equal(ring.add_table, base.add_table)
    assert np.array_equal(ring.mul_table, base.mul_table)


def test_matrix_ring_respects_capacity():
    with pytest.raises(CapacityError):
        con.matrix_ring(2, zn(16))  # 16^4 elements


# -- the constrained 3 x 3 subring -------------------------------------------------


def test_h_ring_embeds_in_three_by_three_matrices(corpus_rings):
    ring = corpus_rings["H(1, 1, Z4)"]
    base = zn(4)
    assert ring.size == 64
    for x in ring.elements():
        a, c, d, e, f = con.h_components(ring, x)
        assert con.h_encode(ring, c, e, f) == x
        # defining constraints: a - d = s*c and d - f = t*e with s = t = 1
        assert base.sub(a, d) == base.mul(1, c)
        assert base.sub(d, f) == base.mul(1, e)
    for x in range(0, ring.size, 5):
        for y in range(0, ring.size, 7):
            expected = oracles.matmul_of(
                base, con.h_matrix(ring, x), con.h_matrix(ring, y)
            )
            assert con.h_matrix(ring, ring.mul(x, y)) == expected
            added = oracles.matadd_of(base, con.h_matrix(ring, x), con.h_matrix(ring, y))
            assert con.h_matrix(ring, ring.add(x, y)) == added


def test_h_ring_requires_central_units(t2z2):
    with pytest.raises(ConstructionError, match="unit"):
        con.h_ring(0, 1, zn(4))
    with pytest.raises(ConstructionError, match="unit"):
        con.h_ring(2, 1, zn(4))
    # 7 is a unit of the triangular ring but not central
    with pytest.raises(ConstructionError, match="central"):
        con.h_ring(7, 5, t2z2)


def test_h_ring_identity_is_the_identity_matrix(corpus_rings):
    ring = corpus_rings["H(1, 1, Z2)"]
    assert con.h_matrix(ring, ring.one) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert con.h_matrix(ring, ring.zero) == ((0, 0, 0), (0, 0, 0), (0, 0, 0))


# -- corners -----------------------------------------------------------------------


def test_corner_at_matrix_unit_is_a_copy_of_the_base(t2z2, m2z2):
    for parent in (t2z2, m2z2):
        e = con.matrix_unit_index(parent, 0, 0)
        ring = con.corner(parent, e)
        assert ring.size == 2
        assert con.is_isomorphic_to_z2(ring)
        prov = ring.provenance
        assert list(prov.members) == [parent.zero, e]
        assert ring.one == 1  # compressed index of e


def test_corner_at_one_is_the_whole_ring(z4):
    ring = con.corner(z4, z4.one)
    assert ring.size == 4
    assert np.array_equal(ring.mul_table, z4.mul_table)


def test_corner_rejects_non_idempotents_and_zero(z4, t2z2):
    with pytest.raises(ConstructionError, match="not idempotent"):
        con.corner(z4, 2)
    with pytest.raises(ConstructionError, match="zero"):
        con.corner(t2z2, t2z2.zero)


# -- ideals and quotients ----------------------------------------------------------


def test_ideal_generated_saturates(z4, t2z2, m2z2):
    assert set(con.ideal_generated(z4, [2]).indices()) == {0, 2}
    # the strictly-upper matrix unit generates the radical of the triangular ring
    assert set(con.ideal_generated(t2z2, [2]).indices()) == {0, 2}
    # the full matrix ring is simple: any nonzero element generates everything
    assert len(con.ideal_generated(m2z2, [2])) == 16
    assert set(con.ideal_generated(z4, []).indices()) == {0}
    for subset in (con.ideal_generated(t2z2, [2]), con.ideal_generated(z4, [2])):
        assert oracles.is_ideal_of(subset.ring, set(subset.indices()))


def test_quotient_is_a_ring_homomorphism_image(z4):
    ideal = con.ideal_generated(z4, [2])
    ring = con.quotient(z4, ideal)
    assert ring.size == 2
    assert con.is_isomorphic_to_z2(ring)
    for x in z4.elements():
        for y in z4.elements():
            px, py = con.quotient_project(ring, x), con.quotient_project(ring, y)
            assert con.quotient_project(ring, z4.add(x, y)) == ring.add(px, py)
            assert con.quotient_project(ring, z4.mul(x, y)) == ring.mul(px, py)


def test_quotient_by_radical_of_triangular_ring(t2z2):
    ring = con.quotient(t2z2, analysis.jacobson_radical(t2z2))
    assert ring.size == 4
    # T_2(Z_2) / J is Z_2 x Z_2: every element is idempotent
    assert all(ring.mul(x, x) == x for x in ring.elements())


def test_quotient_rejects_non_ideals(z4):
    from deltaring import ElementSet

    with pytest.raises(ConstructionError):
        con.quotient(z4, ElementSet.from_indices(z4, [0, 3]))
    with pytest.raises(ConstructionError):
        con.quotient(z4, ElementSet.from_indices(z4, [0, 1, 2, 3]))


def test_quotient_by_generators_spells_its_generators(z4):
    ring = con.quotient_by_generators(z4, [2])
    assert ring.spell() == "quot(Z4, 2)"
    assert ring.size == 2


# -- extensions by a bimodule-ring -------------------------------------------------


def test_self_extension_multiplication_formula(z2):
    ring = con.dorroh(z2, con.self_action(z2), v_spell="self")
    assert ring.size == 4
    assert ring.one == 2  # the pair (1, 0)
    assert ring.spell() == "dorroh(Z2, self)"
    for x in ring.elements():
        r, v = con.dorroh_components(ring, x)
        for y in ring.elements():
            s, w = con.dorroh_components(ring, y)
            expect_mul = (
                z2.mul(r, s),
                z2.add(z2.add(z2.mul(r, w), z2.mul(v, s)), z2.mul(v, w)),
            )
            assert con.dorroh_components(ring, ring.mul(x, y)) == expect_mul
            expect_add = (z2.add(r, s), z2.add(v, w))
            assert con.dorroh_components(ring, ring.add(x, y)) == expect_add


def test_ideal_extension_multiplication_formula(z4):
    action = con.ideal_action(z4, [2])
    v = action.v
    assert v.size == 2  # the ideal {0, 2}
    ring = con.dorroh(z4, action, v_spell="ideal(2)")
    assert ring.size == 8
    members = [0, 2]  # parent elements of V in compressed order
    for x in ring.elements():
        r, vi = con.dorroh_components(ring, x)
        for y in ring.elements():
            s, wi = con.dorroh_components(ring, y)
            prod = z4.add(
                z4.add(z4.mul(r, members[wi]), z4.mul(members[vi], s)),
                z4.mul(members[vi], members[wi]),
            )
            got_r, got_v = con.dorroh_components(ring, ring.mul(x, y))
            assert got_r == z4.mul(r, s)
            assert members[got_v] == prod


def test_zero_extension_is_a_copy_of_the_base(z4):
    ring = con.dorroh(z4, con.zero_action(z4), v_spell="zero")
    assert ring.size == 4
    assert np.array_equal(ring.add_table, z4.add_table)
    assert np.array_equal(ring.mul_table, z4.mul_table)


def test_broken_action_is_rejected(z4):
    action = con.ideal_action(z4, [2])
    left = action.left.copy()
    left[1, 1] = 0  # 1 . 2 should stay 2; break module unitality
    bad = con.BimoduleRingAction(v=action.v, left=left, right=action.right)
    errors = con.validate_bimodule_action(z4, bad)
    assert errors
    with pytest.raises(ConstructionError, match="invalid bimodule action"):
        con.dorroh(z4, bad)


def test_nonunital_component_is_structurally_validated(z4):
    with pytest.raises(MalformedTableError, match="out of range"):
        con.NonUnitalRing(2, [[0, 1], [1, 0]], [[0, 0], [0, 5]], 0)
    with pytest.raises(MalformedTableError, match="2x2"):
        con.NonUnitalRing(2, [[0, 1]], [[0, 0], [0, 0]], 0)


def test_two_element_ring_recognition(z2, z4):
    assert con.is_isomorphic_to_z2(z2)
    assert not con.is_isomorphic_to_z2(z4)
