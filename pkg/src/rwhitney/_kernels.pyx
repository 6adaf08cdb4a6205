# cython: language_level=3, boundscheck=False, wraparound=False
# distutils: language = c++
"""Compiled polynomial kernels; same contracts as ``_kernels_py``.

When every numerator fits a machine word the work is done on C++ containers
with overflow checks.  Any overflow falls back to arbitrary-precision
integers, so results never depend on the path taken.
"""

from libc.stdint cimport uint64_t
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector
from cython.operator cimport dereference as deref, preincrement as inc

cdef extern from *:
    """
    static inline int rw_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int rw_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    bint rw_mul_ovf(long long a, long long b, long long *r) nogil
    bint rw_add_ovf(long long a, long long b, long long *r) nogil

cdef object _LIMIT = 1 << 62


cdef bint _unpack_words(dict d, vector[uint64_t]& keys, vector[long long]& vals):
    """Copy ``d`` into C vectors; False if some value does not fit a word."""
    cdef object k, v
    keys.reserve(len(d))
    vals.reserve(len(d))
    for k, v in d.items():
        if not (-_LIMIT < v < _LIMIT):
            return False
        keys.push_back(<uint64_t>k)
        vals.push_back(<long long>v)
    return True


cdef dict _mul_word(vector[uint64_t]& ak, vector[long long]& an,
                    vector[uint64_t]& bk, vector[long long]& bn):
    cdef size_t na = ak.size(), nb = bk.size(), i, j
    cdef unordered_map[uint64_t, long long] acc
    cdef long long prod, total
    cdef uint64_t key
    cdef bint overflow = False
    with nogil:
        acc.reserve(na * nb if na * nb < (1 << 20) else (1 << 20))
        for i in range(na):
            for j in range(nb):
                if rw_mul_ovf(an[i], bn[j], &prod):
                    overflow = True
                    break
                key = ak[i] + bk[j]
                total = acc[key]
                if rw_add_ovf(total, prod, &total):
                    overflow = True
                    break
                acc[key] = total
            if overflow:
                break
    if overflow:
        return None
    cdef dict out = {}
    cdef unordered_map[uint64_t, long long].iterator it = acc.begin()
    while it != acc.end():
        if deref(it).second != 0:
            out[deref(it).first] = deref(it).second
        inc(it)
    return out


cdef dict _mul_object(dict a, dict b):
    cdef dict acc = {}
    cdef list bitems = list(b.items())
    cdef object ka, na, kb, nb, k, v
    for ka, na in a.items():
        for kb, nb in bitems:
            k = ka + kb
            v = acc.get(k)
            if v is None:
                acc[k] = na * nb
            else:
                acc[k] = v + na * nb
    return {k: v for k, v in acc.items() if v}


def mul_terms(dict a, dict b):
    if len(a) < len(b):
        a, b = b, a
    cdef vector[uint64_t] ak, bk
    cdef vector[long long] an, bn
    cdef dict out
    if _unpack_words(a, ak, an) and _unpack_words(b, bk, bn):
        out = _mul_word(ak, an, bk, bn)
        if out is not None:
            return out
    return _mul_object(a, b)


def add_terms(dict a, object fa, dict b, object fb):
    cdef dict out
    cdef object k, v, cur
    if fa == 1:
        out = dict(a)
    else:
        out = {k: v * fa for k, v in a.items()}
    for k, v in b.items():
        cur = out.get(k)
        if cur is None:
            out[k] = v * fb
        else:
            cur = cur + v * fb
            if cur:
                out[k] = cur
            else:
                del out[k]
    return out
