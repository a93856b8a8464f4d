# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled handle-reduction kernel; exact twin of _reduction_py.

Same rewrite rule, same leftmost-closing-handle strategy, same early
exit for sign queries.  Kept in lockstep with the pure module so the
parity tests can compare outputs letter for letter.
"""

from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memmove

from braidcert.errors import ReductionBudgetExceeded

cdef int MIXED = 2


cdef inline int _definite_sign(int* pos, int* neg, int strands) noexcept:
    cdef int j
    for j in range(1, strands):
        if pos[j] or neg[j]:
            if neg[j] == 0:
                return 1
            if pos[j] == 0:
                return -1
            return MIXED
    return 0


cdef _reduce_core(object letters, int strands, Py_ssize_t max_len, bint full):
    cdef Py_ssize_t n0 = len(letters)
    cdef Py_ssize_t cap = n0 + 16
    cdef Py_ssize_t seg_cap = 64
    cdef int* w = <int*> malloc(cap * sizeof(int))
    cdef int* seg = NULL
    cdef int* pos = NULL
    cdef int* neg = NULL
    cdef Py_ssize_t* last = NULL
    cdef Py_ssize_t n = 0, i, s, q, seg_n, new_n, tail
    cdef int x, y, z, g, gy, g1, e, d, j, sd, remaining
    cdef bint is_handle
    cdef int tri0, tri1, tri2
    cdef Py_ssize_t k3

    if w == NULL:
        raise MemoryError()
    try:
        # Free reduction straight into the working buffer.
        for obj in letters:
            x = obj
            if n and w[n - 1] == -x:
                n -= 1
            else:
                w[n] = x
                n += 1
        if n > max_len:
            raise ReductionBudgetExceeded(
                f"word of length {n} exceeds budget {max_len}"
            )

        pos = <int*> malloc(strands * sizeof(int))
        neg = <int*> malloc(strands * sizeof(int))
        last = <Py_ssize_t*> malloc(strands * sizeof(Py_ssize_t))
        seg = <int*> malloc(seg_cap * sizeof(int))
        if pos == NULL or neg == NULL or last == NULL or seg == NULL:
            raise MemoryError()
        for j in range(strands):
            pos[j] = 0
            neg[j] = 0
            last[j] = -1
        for i in range(n):
            x = w[i]
            if x > 0:
                pos[x] += 1
            else:
                neg[-x] += 1

        if not full:
            sd = _definite_sign(pos, neg, strands)
            if sd != MIXED:
                return sd, _to_list(w, n)

        i = 0
        while i < n:
            x = w[i]
            g = x if x > 0 else -x
            s = last[g]
            is_handle = s >= 0 and w[s] == -x
            if is_handle:
                for j in range(1, g):
                    if last[j] > s:
                        is_handle = False
                        break
            if not is_handle:
                last[g] = i
                i += 1
                continue

            e = 1 if w[s] > 0 else -1
            g1 = g + 1
            # Worst case the interior triples in length.
            if 3 * (i - s) + 4 > seg_cap:
                seg_cap = 3 * (i - s) + 64
                seg = <int*> realloc(seg, seg_cap * sizeof(int))
                if seg == NULL:
                    raise MemoryError()
            seg_n = 0
            for q in range(s + 1, i):
                y = w[q]
                gy = y if y > 0 else -y
                if gy == g1:
                    d = 1 if y > 0 else -1
                    tri0 = -e * g1
                    tri1 = d * g
                    tri2 = e * g1
                    for k3 in range(3):
                        z = tri0 if k3 == 0 else (tri1 if k3 == 1 else tri2)
                        if seg_n and seg[seg_n - 1] == -z:
                            seg_n -= 1
                        else:
                            seg[seg_n] = z
                            seg_n += 1
                elif seg_n and seg[seg_n - 1] == -y:
                    seg_n -= 1
                else:
                    seg[seg_n] = y
                    seg_n += 1

            for q in range(s, i + 1):
                y = w[q]
                if y > 0:
                    pos[y] -= 1
                else:
                    neg[-y] -= 1
            for q in range(seg_n):
                y = seg[q]
                if y > 0:
                    pos[y] += 1
                else:
                    neg[-y] += 1

            new_n = n - (i - s + 1) + seg_n
            if new_n > cap:
                cap = new_n + new_n // 2 + 16
                w = <int*> realloc(w, cap * sizeof(int))
                if w == NULL:
                    raise MemoryError()
            tail = n - (i + 1)
            if tail > 0:
                memmove(w + s + seg_n, w + i + 1, tail * sizeof(int))
            for q in range(seg_n):
                w[s + q] = seg[q]
            n = new_n
            if n > max_len:
                raise ReductionBudgetExceeded(
                    f"word grew past budget {max_len} during handle reduction"
                )

            if not full:
                sd = _definite_sign(pos, neg, strands)
                if sd != MIXED:
                    return sd, _to_list(w, n)

            for j in range(1, strands):
                last[j] = -1
            remaining = strands - 1
            q = s - 1
            while q >= 0 and remaining:
                gy = w[q] if w[q] > 0 else -w[q]
                if last[gy] < 0:
                    last[gy] = q
                    remaining -= 1
                q -= 1
            i = s

        return _definite_sign(pos, neg, strands), _to_list(w, n)
    finally:
        free(w)
        free(seg)
        free(pos)
        free(neg)
        free(last)


cdef _to_list(int* w, Py_ssize_t n):
    cdef Py_ssize_t i
    out = [0] * n
    for i in range(n):
        out[i] = w[i]
    return out


def reduce_word(letters, int strands, Py_ssize_t max_len):
    """Fully handle-reduced word equal to the input in the braid group."""
    _, w = _reduce_core(letters, strands, max_len, True)
    return w


def sign_of(letters, int strands, Py_ssize_t max_len):
    """Dehornoy sign of the word: +1, 0 or -1."""
    s, _ = _reduce_core(letters, strands, max_len, False)
    return s
