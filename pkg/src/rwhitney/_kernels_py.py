"""Pure-Python polynomial kernels (fallback for the compiled ``_kernels``).

Polynomials here are dicts mapping a packed exponent key to an integer
numerator.  Packed keys make the monomial product an integer addition.
"""


def mul_terms(a, b):
    """Convolution of two integer-coefficient sparse polynomials, zeros dropped."""
    if len(a) < len(b):
        a, b = b, a
    acc = {}
    get = acc.get
    bitems = list(b.items())
    for ka, na in a.items():
        for kb, nb in bitems:
            k = ka + kb
            acc[k] = get(k, 0) + na * nb
    return {k: v for k, v in acc.items() if v}


def add_terms(a, fa, b, fb):
    """fa*a + fb*b for integer factors, zeros dropped."""
    if fa == 1:
        out = dict(a)
    else:
        out = {k: v * fa for k, v in a.items()}
    get = out.get
    for k, v in b.items():
        out[k] = get(k, 0) + v * fb
    return {k: v for k, v in out.items() if v}
