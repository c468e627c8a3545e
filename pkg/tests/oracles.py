"""Reference computations used to pin expected values in the tests.

Everything here is written with plain Python loops, sets, and tuples,
deliberately independent of the vectorized implementations under test.
The only shared input is the ring's add/mul tables themselves (read one
entry at a time through the scalar accessors).
"""

from __future__ import annotations


def inverse_of(ring, x):
    """Two-sided inverse of x found by scanning, or None."""
    for y in range(ring.size):
        if ring.mul(x, y) == ring.one and ring.mul(y, x) == ring.one:
            return y
    return None


def units_of(ring):
    return {x for x in range(ring.size) if inverse_of(ring, x) is not None}


def idempotents_of(ring):
    return {x for x in range(ring.size) if ring.mul(x, x) == x}


def nilpotents_of(ring):
    out = set()
    for x in range(ring.size):
        power = x
        for _ in range(ring.size):
            if power == ring.zero:
                out.add(x)
                break
            power = ring.mul(power, x)
    return out


def center_of(ring):
    return {
        x
        for x in range(ring.size)
        if all(ring.mul(x, y) == ring.mul(y, x) for y in range(ring.size))
    }


def delta_sum_form(ring, units=None):
    """{x : x + u is a unit for every unit u}."""
    units = units_of(ring) if units is None else units
    return {
        x for x in range(ring.size) if all(ring.add(x, u) in units for u in units)
    }


def delta_one_minus_form(ring, units=None):
    """{x : 1 - xu is a unit for every unit u}."""
    units = units_of(ring) if units is None else units
    return {
        x
        for x in range(ring.size)
        if all(ring.sub(ring.one, ring.mul(x, u)) in units for u in units)
    }


def delta_right_form(ring, units=None):
    """{x : xu + 1 is a unit for every unit u}."""
    units = units_of(ring) if units is None else units
    return {
        x
        for x in range(ring.size)
        if all(ring.add(ring.mul(x, u), ring.one) in units for u in units)
    }


def delta_left_form(ring, units=None):
    """{x : ux + 1 is a unit for every unit u}."""
    units = units_of(ring) if units is None else units
    return {
        x
        for x in range(ring.size)
        if all(ring.add(ring.mul(u, x), ring.one) in units for u in units)
    }


def delta_of(ring):
    """All four characterizations, asserted to agree."""
    units = units_of(ring)
    forms = [
        delta_sum_form(ring, units),
        delta_one_minus_form(ring, units),
        delta_right_form(ring, units),
        delta_left_form(ring, units),
    ]
    assert forms[0] == forms[1] == forms[2] == forms[3]
    return forms[0]


def jacobson_of(ring):
    """{x : 1 - rx is a unit for every r}, cross-checked left/right."""
    units = units_of(ring)
    left = {
        x
        for x in range(ring.size)
        if all(ring.sub(ring.one, ring.mul(r, x)) in units for r in range(ring.size))
    }
    right = {
        x
        for x in range(ring.size)
        if all(ring.sub(ring.one, ring.mul(x, r)) in units for r in range(ring.size))
    }
    assert left == right
    return left


def qnil_of(ring):
    """{a : 1 + ax is a unit for every x commuting with a}."""
    units = units_of(ring)
    out = set()
    for a in range(ring.size):
        ok = True
        for x in range(ring.size):
            if ring.mul(a, x) != ring.mul(x, a):
                continue
            if ring.add(ring.one, ring.mul(a, x)) not in units:
                ok = False
                break
        if ok:
            out.add(a)
    return out


def comm_of(ring, a):
    return {x for x in range(ring.size) if ring.mul(a, x) == ring.mul(x, a)}


def comm2_of(ring, a):
    inner = comm_of(ring, a)
    return {
        x
        for x in range(ring.size)
        if all(ring.mul(x, y) == ring.mul(y, x) for y in inner)
    }


def ann_left_of(ring, a):
    return {x for x in range(ring.size) if ring.mul(x, a) == ring.zero}


def ann_right_of(ring, a):
    return {x for x in range(ring.size) if ring.mul(a, x) == ring.zero}


def spectral_of(ring, a, flavor="delta"):
    """Idempotents p in the double commutant of a with a + p in the target set."""
    units = units_of(ring)
    if flavor == "delta":
        target = delta_sum_form(ring, units)
    elif flavor == "jacobson":
        target = jacobson_of(ring)
    elif flavor in ("unit", "quasipolar"):
        target = units
    else:
        raise ValueError(flavor)
    quasi = qnil_of(ring) if flavor == "quasipolar" else None
    out = set()
    for p in idempotents_of(ring):
        if p not in comm2_of(ring, a):
            continue
        if ring.add(a, p) not in target:
            continue
        if quasi is not None and ring.mul(a, p) not in quasi:
            continue
        out.add(p)
    return out


def first_non_quasipolar(ring, flavor="delta"):
    """(verdict, lowest element with empty spectral set or None)."""
    for a in range(ring.size):
        if not spectral_of(ring, a, flavor):
            return False, a
    return True, None


def clean_decomps_of(ring, a, target, commuting=False):
    """All (e, w) with e idempotent, w = a - e in target, optionally ew == we."""
    out = []
    for e in sorted(idempotents_of(ring)):
        w = ring.sub(a, e)
        if w not in target:
            continue
        if commuting and ring.mul(e, w) != ring.mul(w, e):
            continue
        out.append((e, w))
    return out


def is_ideal_of(ring, subset):
    """Two-sided ideal test: additive subgroup absorbing products."""
    if ring.zero not in subset:
        return False
    for x in subset:
        if ring.neg(x) not in subset:
            return False
        for y in subset:
            if ring.add(x, y) not in subset:
                return False
        for r in range(ring.size):
            if ring.mul(r, x) not in subset or ring.mul(x, r) not in subset:
                return False
    return True


def matmul_of(base, a_grid, b_grid):
    """Plain k x k matrix product over the base ring, grids of base indices."""
    k = len(a_grid)
    out = []
    for i in range(k):
        row = []
        for j in range(k):
            acc = base.zero
            for l in range(k):
                acc = base.add(acc, base.mul(a_grid[i][l], b_grid[l][j]))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def matadd_of(base, a_grid, b_grid):
    k = len(a_grid)
    return tuple(
        tuple(base.add(a_grid[i][j], b_grid[i][j]) for j in range(k)) for i in range(k)
    )
