# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for products of elementary column operations.

Same contract as ``stsp._pykernels``: flat column-major matrices, operations
``(dst, src, c)`` meaning ``col[dst] += c * col[src]``.  The integer kernels
work in int64 and report overflow by returning None, in which case the caller
falls back to arbitrary-precision Python code.
"""
from libc.stdint cimport int64_t

cdef extern from *:
    """
    static inline int stsp_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int stsp_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    int stsp_mul_ovf(long long a, long long b, long long *r) nogil
    int stsp_add_ovf(long long a, long long b, long long *r) nogil

BACKEND = "cython"


def col_ops_mod(flat, Py_ssize_t d, ops, long long m):
    cdef Py_ssize_t nd = d * d, k, r, dst, src, nops = len(ops)
    cdef long long c
    cdef long long[::1] mat
    cdef long long[::1] opv
    if m >= 3037000499:  # products could overflow int64
        return None
    mat_obj = bytearray(8 * nd)
    mat = memoryview(mat_obj).cast("q")
    for k in range(nd):
        mat[k] = flat[k] % m
    op_obj = bytearray(8 * 3 * nops)
    opv = memoryview(op_obj).cast("q")
    for k in range(nops):
        o = ops[k]
        opv[3 * k] = o[0]
        opv[3 * k + 1] = o[1]
        opv[3 * k + 2] = o[2] % m
    with nogil:
        for k in range(nops):
            dst = opv[3 * k] * d
            src = opv[3 * k + 1] * d
            c = opv[3 * k + 2]
            if c == 0:
                continue
            for r in range(d):
                if mat[src + r] != 0:
                    mat[dst + r] = (mat[dst + r] + c * mat[src + r]) % m
    return [mat[k] for k in range(nd)]


def col_ops_int(flat, Py_ssize_t d, ops):
    cdef Py_ssize_t nd = d * d, k, r, dst, src, nops = len(ops)
    cdef long long c, prod, tot
    cdef int bad = 0
    cdef long long[::1] mat
    cdef long long[::1] opv
    mat_obj = bytearray(8 * nd)
    mat = memoryview(mat_obj).cast("q")
    op_obj = bytearray(8 * 3 * nops)
    opv = memoryview(op_obj).cast("q")
    try:
        for k in range(nd):
            mat[k] = flat[k]
        for k in range(nops):
            o = ops[k]
            opv[3 * k] = o[0]
            opv[3 * k + 1] = o[1]
            opv[3 * k + 2] = o[2]
    except OverflowError:
        return None
    with nogil:
        for k in range(nops):
            dst = opv[3 * k] * d
            src = opv[3 * k + 1] * d
            c = opv[3 * k + 2]
            if c == 0:
                continue
            for r in range(d):
                if mat[src + r] == 0:
                    continue
                if stsp_mul_ovf(c, mat[src + r], &prod) or stsp_add_ovf(mat[dst + r], prod, &tot):
                    bad = 1
                    break
                mat[dst + r] = tot
            if bad:
                break
    if bad:
        return None
    return [mat[k] for k in range(nd)]


def matmul_mod(a, b, Py_ssize_t d, long long m):
    cdef Py_ssize_t nd = d * d, q, k, r
    cdef long long bk
    cdef long long[::1] av, bv, ov
    if m >= 3037000499:
        return None
    a_obj = bytearray(8 * nd); b_obj = bytearray(8 * nd); o_obj = bytearray(8 * nd)
    av = memoryview(a_obj).cast("q"); bv = memoryview(b_obj).cast("q")
    ov = memoryview(o_obj).cast("q")
    for k in range(nd):
        av[k] = a[k] % m
        bv[k] = b[k] % m
    with nogil:
        for q in range(d):
            for k in range(d):
                bk = bv[q * d + k]
                if bk == 0:
                    continue
                for r in range(d):
                    ov[q * d + r] = (ov[q * d + r] + bk * av[k * d + r]) % m
    return [ov[k] for k in range(nd)]


def matmul_int(a, b, Py_ssize_t d):
    cdef Py_ssize_t nd = d * d, q, k, r
    cdef long long bk, prod, tot
    cdef int bad = 0
    cdef long long[::1] av, bv, ov
    a_obj = bytearray(8 * nd); b_obj = bytearray(8 * nd); o_obj = bytearray(8 * nd)
    av = memoryview(a_obj).cast("q"); bv = memoryview(b_obj).cast("q")
    ov = memoryview(o_obj).cast("q")
    try:
        for k in range(nd):
            av[k] = a[k]
            bv[k] = b[k]
    except OverflowError:
        return None
    with nogil:
        for q in range(d):
            for k in range(d):
                bk = bv[q * d + k]
                if bk == 0:
                    continue
                for r in range(d):
                    if stsp_mul_ovf(bk, av[k * d + r], &prod) or stsp_add_ovf(ov[q * d + r], prod, &tot):
                        bad = 1
                        break
                    ov[q * d + r] = tot
                if bad:
                    break
            if bad:
                break
    if bad:
        return None
    return [ov[k] for k in range(nd)]
