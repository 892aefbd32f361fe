"""Pure-Python capped polynomial-product kernel.

Reference implementation of the kernel contract: multiply two term maps
(exponent 6-tuple in the fixed order x, y, u, v, t, s -> Fraction) and drop
every product monomial whose t or s exponent exceeds the corresponding cap.
A negative cap means "uncapped" in that variable.  The compiled kernel in
``_polymul_c`` must return identical dictionaries.
"""

from __future__ import annotations


def poly_mul_capped(a: dict, b: dict, cap_t: int = -1, cap_s: int = -1) -> dict:
    if len(a) > len(b):
        a, b = b, a
    out: dict = {}
    get = out.get
    for ma, ca in a.items():
        ax, ay, au, av, at_, as_ = ma
        for mb, cb in b.items():
            et = at_ + mb[4]
            if 0 <= cap_t < et:
                continue
            es = as_ + mb[5]
            if 0 <= cap_s < es:
                continue
            key = (ax + mb[0], ay + mb[1], au + mb[2], av + mb[3], et, es)
            cur = get(key)
            if cur is None:
                out[key] = ca * cb
            else:
                cur = cur + ca * cb
                if cur:
                    out[key] = cur
                else:
                    del out[key]
    return out
