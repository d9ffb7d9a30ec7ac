# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled enumeration kernels for the brute-force oracle.

Mirrors _pykernels: same entry points, same counting semantics, with the
tuple enumeration, relation filtering, orbit fusion and orientability split
running in C.  Generator images are stepped through lexicographic order by
an odometer of next-permutation moves, so no permutation table is ever
materialised; orbit fusion keys each tuple by the mixed-radix word of its
permutation ranks, which fits in 64 bits for every feasible request.
"""

from libc.stdlib cimport free, malloc, qsort, realloc

from math import factorial as _pyfactorial

cdef enum:
    _REL_FREE = 0
    _REL_COMMUTATOR = 1
    _REL_SQUARES = 2

REL_FREE = _REL_FREE
REL_COMMUTATOR = _REL_COMMUTATOR
REL_SQUARES = _REL_SQUARES

cdef enum:
    MAXN = 16
    MAXGENS = 16
    MAXFLAT = 256


cdef long long _factorial(int n) noexcept nogil:
    cdef long long f = 1
    cdef int i
    for i in range(2, n + 1):
        f *= i
    return f


cdef bint _next_perm(int* p, int n) noexcept nogil:
    # Advance p to the next lexicographic permutation.  Past the last one,
    # reset to the identity and report the wrap.
    cdef int i = n - 2
    cdef int j, t
    while i >= 0 and p[i] >= p[i + 1]:
        i -= 1
    if i < 0:
        for j in range(n):
            p[j] = j
        return False
    j = n - 1
    while p[j] <= p[i]:
        j -= 1
    t = p[i]; p[i] = p[j]; p[j] = t
    i += 1
    j = n - 1
    while i < j:
        t = p[i]; p[i] = p[j]; p[j] = t
        i += 1
        j -= 1
    return True


cdef long long _rank(int* p, int n) noexcept nogil:
    # Lexicographic rank via the factorial number system.
    cdef long long r = 0
    cdef int i, j, smaller
    for i in range(n):
        smaller = 0
        for j in range(i + 1, n):
            if p[j] < p[i]:
                smaller += 1
        r = r * (n - i) + smaller
    return r


cdef void _unrank(long long r, int n, int* out) noexcept nogil:
    cdef int avail[MAXN]
    cdef int i, j, k, navail
    cdef long long f
    for i in range(n):
        avail[i] = i
    navail = n
    for i in range(n):
        f = _factorial(n - 1 - i)
        k = <int> (r / f)
        r = r - f * k
        out[i] = avail[k]
        for j in range(k, navail - 1):
            avail[j] = avail[j + 1]
        navail -= 1


cdef void _fill_inverses(int gens, int n, int* imgs, int* invs) noexcept nogil:
    cdef int g, i
    for g in range(gens):
        for i in range(n):
            invs[g * MAXN + imgs[g * MAXN + i]] = i


cdef bint _relation_holds(int rel, int gens, int n, int* imgs, int* invs) noexcept nogil:
    cdef int x, y, g
    if rel == _REL_FREE:
        return True
    if rel == _REL_SQUARES:
        for x in range(n):
            y = x
            for g in range(gens):
                y = imgs[g * MAXN + y]
                y = imgs[g * MAXN + y]
            if y != x:
                return False
        return True
    for x in range(n):
        y = x
        g = 0
        while g < gens:
            y = imgs[g * MAXN + y]
            y = imgs[(g + 1) * MAXN + y]
            y = invs[g * MAXN + y]
            y = invs[(g + 1) * MAXN + y]
            g += 2
        if y != x:
            return False
    return True


cdef bint _is_transitive(int gens, int n, int* imgs) noexcept nogil:
    # Forward closure from point 0; on a finite set the generated monoid
    # equals the generated group, so forward edges suffice.
    cdef int stack[MAXN]
    cdef int seen = 1
    cdef int count = 1
    cdef int top = 1
    cdef int x, y, g
    stack[0] = 0
    while top:
        top -= 1
        x = stack[top]
        for g in range(gens):
            y = imgs[g * MAXN + x]
            if not (seen >> y) & 1:
                seen |= 1 << y
                count += 1
                stack[top] = y
                top += 1
    return count == n


cdef bint _stab_orientable(int gens, int n, int* imgs) noexcept nogil:
    # Parity propagation from point 0: the stabiliser of 0 is orientable
    # exactly when every generator edge flips parity.  Assumes transitivity.
    cdef int parity[MAXN]
    cdef int stack[MAXN]
    cdef int top = 1
    cdef int x, y, g
    for x in range(n):
        parity[x] = -1
    parity[0] = 0
    stack[0] = 0
    while top:
        top -= 1
        x = stack[top]
        for g in range(gens):
            y = imgs[g * MAXN + x]
            if parity[y] < 0:
                parity[y] = parity[x] ^ 1
                stack[top] = y
                top += 1
    for g in range(gens):
        for x in range(n):
            if parity[imgs[g * MAXN + x]] == parity[x]:
                return False
    return True


cdef void _conjugate_adjacent(int gens, int n, int* imgs, int* out, int a) noexcept nogil:
    # Conjugate every image by the transposition of points a and a+1.
    cdef int b = a + 1
    cdef int g, i, x, y
    for g in range(gens):
        for i in range(n):
            x = i
            if x == a:
                x = b
            elif x == b:
                x = a
            y = imgs[g * MAXN + x]
            if y == a:
                y = b
            elif y == b:
                y = a
            out[g * MAXN + i] = y


cdef long long _tuple_key(int gens, int n, int* imgs, long long nfact) noexcept nogil:
    cdef long long key = 0
    cdef int g
    for g in range(gens - 1, -1, -1):
        key = key * nfact + _rank(&imgs[g * MAXN], n)
    return key


cdef void _tuple_unkey(long long key, int gens, int n, int* imgs, long long nfact) noexcept nogil:
    cdef int g
    for g in range(gens):
        _unrank(key % nfact, n, &imgs[g * MAXN])
        key = key / nfact


cdef long long _bsearch(long long* keys, long long count, long long key) noexcept nogil:
    cdef long long lo = 0
    cdef long long hi = count - 1
    cdef long long mid
    while lo <= hi:
        mid = (lo + hi) >> 1
        if keys[mid] < key:
            lo = mid + 1
        elif keys[mid] > key:
            hi = mid - 1
        else:
            return mid
    return -1


cdef int _find(int* parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef int _cmp_keys(const void* a, const void* b) noexcept nogil:
    cdef long long x = (<const long long*> a)[0]
    cdef long long y = (<const long long*> b)[0]
    if x < y:
        return -1
    if x > y:
        return 1
    return 0


cdef _validate(int rel, int gens, int n, long long space_limit):
    if rel not in (_REL_FREE, _REL_COMMUTATOR, _REL_SQUARES):
        raise ValueError(f"unknown relation code {rel}")
    if not 1 <= n <= MAXN:
        raise ValueError(f"n must be between 1 and {MAXN}, got {n}")
    if not 1 <= gens <= MAXGENS:
        raise ValueError(f"generator count must be between 1 and {MAXGENS}, got {gens}")
    if rel == _REL_COMMUTATOR and gens % 2:
        raise ValueError("the commutator relation needs an even number of generators")
    if _pyfactorial(n) ** gens > space_limit:
        raise ValueError(f"enumeration space exceeds the kernel limit {space_limit}")


cdef void _reset_identity(int gens, int n, int* imgs) noexcept nogil:
    cdef int g, i
    for g in range(gens):
        for i in range(n):
            imgs[g * MAXN + i] = i


cdef bint _advance(int gens, int n, int* imgs) noexcept nogil:
    cdef int g = gens - 1
    while g >= 0 and not _next_perm(&imgs[g * MAXN], n):
        g -= 1
    return g >= 0


def count_relation_tuples(int rel, int gens, int n):
    """(relation-satisfying tuples, transitive relation-satisfying tuples)."""
    _validate(rel, gens, n, (<long long> 1) << 62)
    cdef int imgs[MAXFLAT]
    cdef int invs[MAXFLAT]
    cdef long long total = 0
    cdef long long transitive = 0
    _reset_identity(gens, n, imgs)
    with nogil:
        while True:
            if rel == _REL_COMMUTATOR:
                _fill_inverses(gens, n, imgs, invs)
            if _relation_holds(rel, gens, n, imgs, invs):
                total += 1
                if _is_transitive(gens, n, imgs):
                    transitive += 1
            if not _advance(gens, n, imgs):
                break
    return total, transitive


def count_transitive_orbits(int rel, int gens, int n):
    """(transitive tuples, orbits under simultaneous conjugation).

    Conjugation by the adjacent transpositions generates the full symmetric
    group action, so union-find over those moves yields its orbits.
    """
    # Positions index an int array, so the key count must stay below 2^31.
    _validate(rel, gens, n, (<long long> 1) << 31)
    cdef long long nfact = _factorial(n)
    cdef int imgs[MAXFLAT]
    cdef int invs[MAXFLAT]
    cdef int conj[MAXFLAT]
    cdef long long capacity = 1024
    cdef long long count = 0
    cdef long long pos, other, key
    cdef long long orbits = 0
    cdef int a, here, there
    cdef bint failed = False
    cdef bint missing = False
    cdef long long* keys = <long long*> malloc(capacity * sizeof(long long))
    cdef long long* grown = NULL
    cdef int* parent = NULL
    if keys == NULL:
        raise MemoryError()
    _reset_identity(gens, n, imgs)
    with nogil:
        while True:
            if rel == _REL_COMMUTATOR:
                _fill_inverses(gens, n, imgs, invs)
            if _relation_holds(rel, gens, n, imgs, invs) and _is_transitive(gens, n, imgs):
                if count == capacity:
                    capacity *= 2
                    grown = <long long*> realloc(keys, capacity * sizeof(long long))
                    if grown == NULL:
                        failed = True
                        break
                    keys = grown
                keys[count] = _tuple_key(gens, n, imgs, nfact)
                count += 1
            if not _advance(gens, n, imgs):
                break
    if failed:
        free(keys)
        raise MemoryError()
    if count:
        parent = <int*> malloc(count * sizeof(int))
        if parent == NULL:
            free(keys)
            raise MemoryError()
    with nogil:
        qsort(keys, count, sizeof(long long), &_cmp_keys)
        for pos in range(count):
            parent[pos] = <int> pos
        for pos in range(count):
            _tuple_unkey(keys[pos], gens, n, imgs, nfact)
            for a in range(n - 1):
                _conjugate_adjacent(gens, n, imgs, conj, a)
                key = _tuple_key(gens, n, conj, nfact)
                other = _bsearch(keys, count, key)
                if other < 0:
                    missing = True
                    break
                here = _find(parent, <int> pos)
                there = _find(parent, <int> other)
                if here != there:
                    parent[there] = here
            if missing:
                break
        if not missing:
            for pos in range(count):
                if parent[pos] == pos:
                    orbits += 1
    free(keys)
    free(parent)
    if missing:
        raise RuntimeError("conjugated tuple missing from the key table")
    return count, orbits


def count_orientation_split(int gens, int n):
    """(orientable, non-orientable) transitive tuples for the squares relation."""
    _validate(_REL_SQUARES, gens, n, (<long long> 1) << 62)
    cdef int imgs[MAXFLAT]
    cdef long long orientable = 0
    cdef long long nonorientable = 0
    _reset_identity(gens, n, imgs)
    with nogil:
        while True:
            if _relation_holds(_REL_SQUARES, gens, n, imgs, NULL) and _is_transitive(gens, n, imgs):
                if _stab_orientable(gens, n, imgs):
                    orientable += 1
                else:
                    nonorientable += 1
            if not _advance(gens, n, imgs):
                break
    return orientable, nonorientable
