# cython: language_level=3
# cython: boundscheck=False, wraparound=False
"""Compiled capped polynomial-product kernel.

Monomial 6-tuples are packed into 60-bit integers (10 bits per variable, fixed
order x, y, u, v, t, s) so the inner loop compares and adds machine words, and
coefficients are accumulated as raw numerator/denominator integer pairs with a
single gcd normalization per addition instead of full Fraction arithmetic.

Falls back to the pure-Python kernel when any input exponent is 512 or larger
(the packed addition could then overflow a 10-bit field).  Output is identical
to ``qhahn._accel._polymul_py.poly_mul_capped``.
"""

import array
from fractions import Fraction
from math import gcd

from qhahn._accel import _polymul_py


cdef bint _pack_into(dict src, long long[::1] keys, list nums, list dens):
    """Pack one operand; returns False when an exponent would overflow."""
    cdef Py_ssize_t idx = 0
    cdef long e0, e1, e2, e3, e4, e5
    for mono, coeff in src.items():
        e0 = mono[0]
        e1 = mono[1]
        e2 = mono[2]
        e3 = mono[3]
        e4 = mono[4]
        e5 = mono[5]
        if e0 >= 512 or e1 >= 512 or e2 >= 512 or e3 >= 512 or e4 >= 512 or e5 >= 512:
            return False
        keys[idx] = ((<long long> e0) << 50 | (<long long> e1) << 40 |
                     (<long long> e2) << 30 | (<long long> e3) << 20 |
                     (<long long> e4) << 10 | (<long long> e5))
        nums[idx] = coeff.numerator
        dens[idx] = coeff.denominator
        idx += 1
    return True


def poly_mul_capped(dict a, dict b, long cap_t=-1, long cap_s=-1):
    cdef Py_ssize_t na = len(a), nb = len(b)
    if na == 0 or nb == 0:
        return {}
    if na > nb:
        a, b = b, a
        na, nb = nb, na

    akeys_arr = array.array("q", bytes(8 * na))
    bkeys_arr = array.array("q", bytes(8 * nb))
    cdef long long[::1] akeys = akeys_arr
    cdef long long[::1] bkeys = bkeys_arr
    cdef list anum = [None] * na, aden = [None] * na
    cdef list bnum = [None] * nb, bden = [None] * nb
    if not _pack_into(a, akeys, anum, aden) or not _pack_into(b, bkeys, bnum, bden):
        return _polymul_py.poly_mul_capped(a, b, cap_t, cap_s)

    cdef dict acc = {}
    cdef Py_ssize_t i, j
    cdef long long ka, kk
    cdef object ca_n, ca_d, n, d, nn, dd, g, prev
    cdef list entry
    for i in range(na):
        ka = akeys[i]
        ca_n = anum[i]
        ca_d = aden[i]
        for j in range(nb):
            kk = ka + bkeys[j]
            if cap_t >= 0 and ((kk >> 10) & 0x3FF) > cap_t:
                continue
            if cap_s >= 0 and (kk & 0x3FF) > cap_s:
                continue
            n = ca_n * bnum[j]
            d = ca_d * bden[j]
            prev = acc.get(kk)
            if prev is None:
                acc[kk] = [n, d]
            else:
                entry = <list> prev
                nn = entry[0] * d + n * entry[1]
                if nn == 0:
                    del acc[kk]
                else:
                    dd = entry[1] * d
                    g = gcd(nn, dd)
                    if g != 1:
                        nn = nn // g
                        dd = dd // g
                    entry[0] = nn
                    entry[1] = dd

    cdef dict out = {}
    cdef long long key
    for kobj, entry_obj in acc.items():
        key = kobj
        entry = <list> entry_obj
        out[((key >> 50) & 0x3FF, (key >> 40) & 0x3FF, (key >> 30) & 0x3FF,
             (key >> 20) & 0x3FF, (key >> 10) & 0x3FF, key & 0x3FF)] = Fraction(
            entry[0], entry[1])
    return out
