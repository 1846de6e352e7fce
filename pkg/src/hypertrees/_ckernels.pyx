# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels over 64-bit vertex masks.

Behaviourally identical to ``_pykernels`` (same visiting order, same
witnesses, same node counts) but limited to ``n <= 64`` vertices.
"""
from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memcpy

from hypertrees.errors import BudgetExceeded

ctypedef unsigned long long u64

cdef extern from *:
    int popcount "__builtin_popcountll"(u64) nogil
    int ctz "__builtin_ctzll"(u64) nogil

cdef enum:
    MAXV = 64

cdef enum:
    K_SEMI = 0
    K_CYCLE = 1
    K_COVER = 2
    K_FIND = 3
    K_MAX = 4

cdef enum:
    F_CC = 1
    F_SF = 2
    F_EMIN = 4
    F_EMAX = 8
    F_CYC_CHECKED = 16
    F_HAS_CYC = 32
    F_CLASS_FAIL = 64
    F_COVERS = 128

cdef enum:
    O_COVER_ONLY = 1
    O_CYCLE_ALL = 2
    O_MINMAX = 4


cdef struct Search:
    int n
    int k
    int m
    u64* masks
    char* nb
    long long budget
    long long nodes
    int over
    int* seq
    int length
    u64* wins
    # chain cover
    u64 cov[MAXV]
    long long missing
    int stop_full
    # find chain
    u64 target
    # longest chain
    int cap
    int best_len
    int best_count
    int* best_seq
    # tight cycle
    char* used
    int start


cdef inline int tick(Search* s) noexcept:
    s.nodes += 1
    if s.budget >= 0 and s.nodes > s.budget:
        s.over = 1
        return -1
    return 0


cdef inline u64 tail_mask(Search* s) noexcept:
    cdef u64 t = 0
    cdef int i
    for i in range(s.length - s.k + 1, s.length):
        t |= (<u64>1) << s.seq[i]
    return t


cdef inline u64 extensions(Search* s, u64 t) noexcept:
    cdef u64 c = 0
    cdef int i
    for i in range(s.m):
        if (s.masks[i] & t) == t:
            c |= s.masks[i]
    return c & ~t


cdef inline int edge_index(Search* s, u64 wm) noexcept:
    cdef int i
    for i in range(s.m):
        if s.masks[i] == wm:
            return i
    return -1


cdef void set_neighbours(Search* s) noexcept:
    cdef int i, j
    for i in range(s.m):
        s.nb[i] = 0
    for i in range(s.m):
        for j in range(i + 1, s.m):
            if popcount(s.masks[i] & s.masks[j]) == s.k - 1:
                s.nb[i] = 1
                s.nb[j] = 1


# ---------------------------------------------------------------- semicycle

cdef int semi_dfs(Search* s, u64 vmask) noexcept:
    if tick(s) < 0:
        return -1
    cdef int L = s.length
    cdef int i, w, r
    cdef u64 t = tail_mask(s)
    cdef u64 close, cand
    cdef bint fresh
    if L >= s.k + 1:
        close = t | ((<u64>1) << s.seq[0])
        if edge_index(s, close) >= 0:
            fresh = True
            for i in range(L - s.k + 1):
                if s.wins[i] == close:
                    fresh = False
                    break
            if fresh:
                return 1
    cand = extensions(s, t) & ~vmask
    while cand:
        w = ctz(cand)
        cand &= cand - 1
        s.seq[L] = w
        s.wins[L - s.k + 1] = t | ((<u64>1) << w)
        s.length = L + 1
        r = semi_dfs(s, vmask | ((<u64>1) << w))
        if r != 0:
            return r
        s.length = L
    return 0


# ------------------------------------------------------------- tight cycle

cdef int cycle_dfs(Search* s) noexcept:
    if tick(s) < 0:
        return -1
    cdef int L = s.length
    cdef int j, t, p, idx, q, w, r, cnt
    cdef int extra[MAXV]
    cdef u64 wm, tl, cand
    cdef bint ok
    if L >= s.k + 1:
        ok = True
        cnt = 0
        for j in range(L - s.k + 1, L):
            wm = 0
            for t in range(s.k):
                p = j + t
                if p >= L:
                    p -= L
                wm |= (<u64>1) << s.seq[p]
            idx = edge_index(s, wm)
            if idx <= s.start or s.used[idx]:
                ok = False
                break
            for q in range(cnt):
                if extra[q] == idx:
                    ok = False
                    break
            if not ok:
                break
            extra[cnt] = idx
            cnt += 1
        if ok:
            return 1
    if L >= s.m:
        return 0
    tl = tail_mask(s)
    cand = extensions(s, tl)
    while cand:
        w = ctz(cand)
        cand &= cand - 1
        idx = edge_index(s, tl | ((<u64>1) << w))
        if idx <= s.start or s.used[idx]:
            continue
        s.used[idx] = 1
        s.seq[L] = w
        s.length = L + 1
        r = cycle_dfs(s)
        s.used[idx] = 0
        if r != 0:
            return r
        s.length = L
    return 0


# ------------------------------------------------------------- chain cover

cdef inline int cover_mark(Search* s, int w, u64 C) noexcept:
    cdef u64 new = C & ~s.cov[w] & ~((<u64>1) << w)
    cdef u64 rest
    cdef int x
    if new:
        rest = new
        while rest:
            x = ctz(rest)
            rest &= rest - 1
            s.cov[x] |= (<u64>1) << w
            s.missing -= 1
        s.cov[w] |= new
        if s.stop_full and s.missing == 0:
            return 1
    return 0


cdef int cover_dfs(Search* s, u64 C) noexcept:
    if tick(s) < 0:
        return -1
    cdef int L = s.length
    cdef int w, r
    cdef u64 cand = extensions(s, tail_mask(s)) & ~C
    while cand:
        w = ctz(cand)
        cand &= cand - 1
        if cover_mark(s, w, C):
            return 1
        s.seq[L] = w
        s.length = L + 1
        r = cover_dfs(s, C | ((<u64>1) << w))
        s.length = L
        if r != 0:
            return r
    return 0


# -------------------------------------------------------------- find chain

cdef int find_dfs(Search* s, u64 C) noexcept:
    if tick(s) < 0:
        return -1
    cdef int L = s.length
    cdef int w, r
    cdef u64 nC
    cdef u64 cand = extensions(s, tail_mask(s)) & ~C
    while cand:
        w = ctz(cand)
        cand &= cand - 1
        nC = C | ((<u64>1) << w)
        s.seq[L] = w
        s.length = L + 1
        if (nC & s.target) == s.target:
            return 1
        r = find_dfs(s, nC)
        if r != 0:
            return r
        s.length = L
    return 0


# ------------------------------------------------------------ longest chain

cdef int max_dfs(Search* s, u64 C) noexcept:
    if tick(s) < 0:
        return -1
    cdef int L = s.length
    cdef int w, r
    if L - s.k + 1 > s.best_len:
        s.best_len = L - s.k + 1
        s.best_count = L
        memcpy(s.best_seq, s.seq, L * sizeof(int))
        if s.best_len == s.cap:
            return 1
    cdef u64 cand = extensions(s, tail_mask(s)) & ~C
    while cand:
        w = ctz(cand)
        cand &= cand - 1
        s.seq[L] = w
        s.length = L + 1
        r = max_dfs(s, C | ((<u64>1) << w))
        s.length = L
        if r != 0:
            return r
    return 0


# ------------------------------------------------------------ driver

cdef int run_kind(Search* s, int kind, int edge) noexcept:
    cdef u64 e = s.masks[edge]
    if kind == K_SEMI:
        s.wins[0] = e
        return semi_dfs(s, e)
    if kind == K_CYCLE:
        s.used[edge] = 1
        return cycle_dfs(s)
    if kind == K_COVER:
        return cover_dfs(s, e)
    if kind == K_FIND:
        return find_dfs(s, e)
    return max_dfs(s, e)


cdef int permute(Search* s, int kind, int edge, int depth, u64 remaining) noexcept:
    """Place the start edge's vertices in lexicographic order, then search."""
    cdef u64 rest = remaining
    cdef int v, r
    if depth == s.k:
        s.length = s.k
        r = run_kind(s, kind, edge)
        if kind == K_CYCLE and r != 1:
            s.used[edge] = 0
        return r
    while rest:
        v = ctz(rest)
        rest &= rest - 1
        s.seq[depth] = v
        r = permute(s, kind, edge, depth + 1, remaining & ~((<u64>1) << v))
        if r != 0:
            return r
    return 0


cdef int seeded(Search* s, int kind) noexcept:
    """Run ``kind`` from every start ordering of every extendable edge."""
    cdef int i, r
    for i in range(s.m):
        if not s.nb[i]:
            continue
        if kind == K_CYCLE:
            s.start = i
        r = permute(s, kind, i, 0, s.masks[i])
        if r != 0:
            return r
    return 0


cdef int cover_all(Search* s) noexcept:
    cdef int i, x, r
    cdef u64 e, rest
    for i in range(s.m):
        e = s.masks[i]
        rest = e
        while rest:
            x = ctz(rest)
            rest &= rest - 1
            if cover_mark(s, x, e):
                return 1
        if s.nb[i]:
            r = permute(s, K_COVER, i, 0, e)
            if r != 0:
                return r
    return 0


cdef class _Buffers:
    """Owns the scratch arrays of a :c:type:`Search`."""
    cdef Search s
    cdef int cap_m
    cdef int cap_seq

    def __cinit__(self, int n, int k, int cap_m):
        self.cap_m = cap_m if cap_m > 0 else 1
        self.cap_seq = (n if n > cap_m else cap_m) + k + 2
        self.s.n = n
        self.s.k = k
        self.s.m = 0
        self.s.masks = <u64*> calloc(self.cap_m, sizeof(u64))
        self.s.nb = <char*> calloc(self.cap_m, sizeof(char))
        self.s.used = <char*> calloc(self.cap_m, sizeof(char))
        self.s.seq = <int*> calloc(self.cap_seq, sizeof(int))
        self.s.best_seq = <int*> calloc(self.cap_seq, sizeof(int))
        self.s.wins = <u64*> calloc(self.cap_seq, sizeof(u64))
        if (self.s.masks == NULL or self.s.nb == NULL or self.s.used == NULL
                or self.s.seq == NULL or self.s.best_seq == NULL or self.s.wins == NULL):
            raise MemoryError()

    def __dealloc__(self):
        free(self.s.masks)
        free(self.s.nb)
        free(self.s.used)
        free(self.s.seq)
        free(self.s.best_seq)
        free(self.s.wins)


cdef inline void reset(Search* s, long long budget) noexcept:
    s.nodes = 0
    s.over = 0
    s.budget = budget
    s.length = 0


cdef _Buffers load(int n, int k, masks, long long budget):
    if n > MAXV:
        raise ValueError("compiled kernels support at most 64 vertices")
    cdef list ms = list(masks)
    cdef _Buffers b = _Buffers(n, k, len(ms))
    cdef int i
    for i in range(len(ms)):
        b.s.masks[i] = <u64> ms[i]
    b.s.m = len(ms)
    set_neighbours(&b.s)
    reset(&b.s, budget)
    return b


cdef list seq_list(Search* s):
    cdef int i
    return [s.seq[i] for i in range(s.length)]


def semicycle(int n, int k, masks, long long budget=-1):
    cdef _Buffers b = load(n, k, masks, budget)
    cdef int r = seeded(&b.s, K_SEMI)
    if r < 0:
        raise BudgetExceeded(budget)
    if r == 0:
        return None
    out = seq_list(&b.s)
    out.append(out[0])
    return out


def tight_cycle(int n, int k, masks, long long budget=-1):
    cdef _Buffers b = load(n, k, masks, budget)
    if b.s.m + k + 2 > b.cap_seq:
        raise ValueError("cycle buffer too small")
    cdef int r = seeded(&b.s, K_CYCLE)
    if r < 0:
        raise BudgetExceeded(budget)
    return seq_list(&b.s) if r == 1 else None


def chain_cover(int n, int k, masks, long long budget=-1, bint stop_when_full=True):
    cdef _Buffers b = load(n, k, masks, budget)
    cdef int v
    for v in range(n):
        b.s.cov[v] = 0
    b.s.missing = (<long long> n) * (n - 1) // 2
    b.s.stop_full = stop_when_full
    if cover_all(&b.s) < 0:
        raise BudgetExceeded(budget)
    return [b.s.cov[v] for v in range(n)]


def find_chain(int n, int k, masks, int u, int v, long long budget=-1):
    cdef _Buffers b = load(n, k, masks, budget)
    cdef Search* s = &b.s
    cdef int i, r
    cdef u64 e
    s.target = ((<u64>1) << u) | ((<u64>1) << v)
    for i in range(s.m):
        if tick(s) < 0:
            raise BudgetExceeded(budget)
        e = s.masks[i]
        if (e & s.target) == s.target:
            return [x for x in range(n) if (e >> x) & 1]
        if s.nb[i]:
            r = permute(s, K_FIND, i, 0, e)
            if r < 0:
                raise BudgetExceeded(budget)
            if r == 1:
                return seq_list(s)
    return None


def max_chain(int n, int k, masks, long long budget=-1):
    cdef _Buffers b = load(n, k, masks, budget)
    cdef Search* s = &b.s
    cdef int i
    cdef u64 e0 = s.masks[0]
    s.cap = n - k + 1
    s.best_len = 1
    s.best_count = 0
    for i in range(n):
        if (e0 >> i) & 1:
            s.best_seq[s.best_count] = i
            s.best_count += 1
    if seeded(s, K_MAX) < 0:
        raise BudgetExceeded(budget)
    return s.best_len, [s.best_seq[i] for i in range(s.best_count)]


# ------------------------------------------------------------ exhaustive scan

cdef bint chain_connected(Search* s, u64 full) noexcept:
    cdef u64 union = 0
    cdef int i, v
    for i in range(s.m):
        union |= s.masks[i]
    if union != full:
        return False
    set_neighbours(s)
    reset(s, -1)
    for v in range(s.n):
        s.cov[v] = 0
    s.missing = (<long long> s.n) * (s.n - 1) // 2
    s.stop_full = 1
    cover_all(s)
    return s.missing == 0


cdef bint has_semicycle(Search* s) noexcept:
    set_neighbours(s)
    reset(s, -1)
    return seeded(s, K_SEMI) == 1


cdef bint has_cycle(Search* s) noexcept:
    cdef int i
    set_neighbours(s)
    reset(s, -1)
    for i in range(s.m):
        s.used[i] = 0
    return seeded(s, K_CYCLE) == 1


cdef bint class_cover_ok(Search* s, u64 full) noexcept:
    cdef int parent[MAXV]
    cdef u64 cls[MAXV]
    cdef int i, j, a, b, x
    cdef u64 acc
    for i in range(s.m):
        parent[i] = i
        cls[i] = 0
    for i in range(s.m):
        for j in range(i + 1, s.m):
            if popcount(s.masks[i] & s.masks[j]) == s.k - 1:
                a = i
                while parent[a] != a:
                    a = parent[a]
                b = j
                while parent[b] != b:
                    b = parent[b]
                if a != b:
                    parent[a] = b
    for i in range(s.m):
        a = i
        while parent[a] != a:
            a = parent[a]
        cls[a] |= s.masks[i]
    for x in range(s.n):
        acc = 0
        for i in range(s.m):
            if (cls[i] >> x) & 1:
                acc |= cls[i]
        if acc != full:
            return False
    return True


def scan_block(int n, int k, universe, u64 start, u64 stop, int options):
    """Flag bytes for the subset ids ``start <= id < stop`` (see ``_pykernels``)."""
    cdef list uni = list(universe)
    cdef int U = len(uni)
    if U > MAXV or n > MAXV:
        raise ValueError("compiled scan supports at most 64 universe edges and 64 vertices")
    cdef u64 umask[MAXV]
    cdef u64 cur[MAXV]
    cdef int curpos[MAXV]
    cdef int i, j, m, p, q
    for i in range(U):
        umask[i] = <u64> uni[i]
    cdef _Buffers b = _Buffers(n, k, U + 1)
    cdef Search* s = &b.s
    cdef u64 full = ((<u64>1) << n) - 1 if n < 64 else <u64>(-1)
    cdef u64 sid, rest, union
    cdef int flags
    cdef bint covers, cc, sf, minimal, maximal
    out = bytearray(stop - start)
    cdef unsigned char[:] view = out
    sid = start
    while sid < stop:
        m = 0
        rest = sid
        union = 0
        while rest:
            j = ctz(rest)
            rest &= rest - 1
            cur[m] = umask[j]
            curpos[m] = j
            union |= umask[j]
            m += 1
        covers = union == full
        if (options & O_COVER_ONLY) and not covers:
            view[sid - start] = 0
            sid += 1
            continue
        flags = F_COVERS if covers else 0

        s.m = m
        memcpy(s.masks, cur, m * sizeof(u64))
        cc = covers and chain_connected(s, full)
        s.m = m
        memcpy(s.masks, cur, m * sizeof(u64))
        sf = not has_semicycle(s)
        if cc:
            flags |= F_CC
            if not class_cover_ok(s, full):
                flags |= F_CLASS_FAIL
        if sf:
            flags |= F_SF
        if (options & O_CYCLE_ALL) or sf:
            flags |= F_CYC_CHECKED
            if has_cycle(s):
                flags |= F_HAS_CYC
        if cc and sf and (options & O_MINMAX):
            minimal = True
            for i in range(m):
                q = 0
                for p in range(m):
                    if p != i:
                        s.masks[q] = cur[p]
                        q += 1
                s.m = m - 1
                if chain_connected(s, full):
                    minimal = False
                    break
            if minimal:
                flags |= F_EMIN
            maximal = True
            for j in range(U):
                if (sid >> j) & 1:
                    continue
                q = 0
                p = 0
                while p < m and curpos[p] < j:
                    s.masks[q] = cur[p]
                    q += 1
                    p += 1
                s.masks[q] = umask[j]
                q += 1
                while p < m:
                    s.masks[q] = cur[p]
                    q += 1
                    p += 1
                s.m = m + 1
                if not has_semicycle(s):
                    maximal = False
                    break
            if maximal:
                flags |= F_EMAX
            s.m = m
            memcpy(s.masks, cur, m * sizeof(u64))
        view[sid - start] = flags
        sid += 1
    return bytes(out)
