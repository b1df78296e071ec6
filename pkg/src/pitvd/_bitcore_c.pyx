# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_bitcore`` using C uint64 masks (at most 63 slots).

Every public function must stay behaviorally identical to the pure module,
including tie-breaking and scan order -- the parity tests compare outputs
exactly.  Mirror any change made there.
"""

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

ctypedef unsigned long long u64

cdef inline u64 _bit(int v) nogil:
    return (<u64> 1) << v


cdef int _load(object adj, u64 *cadj) except -1:
    cdef int n = len(adj)
    cdef int i
    if n > 63:
        raise ValueError("compiled backend supports at most 63 vertex slots")
    for i in range(n):
        cadj[i] = adj[i]
    return n


def comp_masks(adj, mask):
    cdef u64 cadj[64]
    cdef u64 cmask, rem, comp, frontier, nxt, m
    cdef int v
    _load(adj, cadj)
    cmask = mask
    rem = cmask
    out = []
    while rem:
        comp = rem & (0 - rem)
        frontier = comp
        while frontier:
            nxt = 0
            m = frontier
            while m:
                v = __builtin_ctzll(m)
                m &= m - 1
                nxt |= cadj[v]
            nxt &= cmask & ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        rem &= ~comp
    return out


def count_edges(adj, mask):
    cdef u64 cadj[64]
    cdef u64 cmask, m
    cdef int v, total = 0
    _load(adj, cadj)
    cmask = mask
    m = cmask
    while m:
        v = __builtin_ctzll(m)
        m &= m - 1
        total += __builtin_popcountll(cadj[v] & cmask)
    return total // 2


def find_triangle(adj, mask):
    cdef u64 cadj[64]
    cdef u64 cmask, ma, mb, common
    cdef int a, b
    _load(adj, cadj)
    cmask = mask
    ma = cmask
    while ma:
        a = __builtin_ctzll(ma)
        ma &= ma - 1
        mb = cadj[a] & cmask & ~(_bit(a + 1) - 1)
        while mb:
            b = __builtin_ctzll(mb)
            mb &= mb - 1
            common = cadj[a] & cadj[b] & cmask & ~(_bit(b + 1) - 1)
            if common:
                return (a, b, __builtin_ctzll(common))
    return None


def find_claw(adj, mask):
    cdef u64 cadj[64]
    cdef u64 cmask, mc, nb, ma, rest_a, mb, rest_b
    cdef int c, a, b
    _load(adj, cadj)
    cmask = mask
    mc = cmask
    while mc:
        c = __builtin_ctzll(mc)
        mc &= mc - 1
        nb = cadj[c] & cmask
        if __builtin_popcountll(nb) < 3:
            continue
        ma = nb
        while ma:
            a = __builtin_ctzll(ma)
            ma &= ma - 1
            rest_a = nb & ~cadj[a] & ~(_bit(a + 1) - 1)
            mb = rest_a
            while mb:
                b = __builtin_ctzll(mb)
                mb &= mb - 1
                rest_b = rest_a & ~cadj[b] & ~(_bit(b + 1) - 1)
                if rest_b:
                    return (c, a, b, __builtin_ctzll(rest_b))
    return None


def chordal_fail(adj, mask):
    cdef u64 cadj[64]
    cdef u64 cmask, rem, m, later, l_nbrs, bad
    cdef int n, v, u, best, bestw, i, cnt, p, bestpos
    cdef int weight[64]
    cdef int order[64]
    cdef int pos[64]
    cdef u64 later_masks[64]
    n = _load(adj, cadj)
    cmask = mask
    for v in range(n):
        weight[v] = 0
    cnt = 0
    rem = cmask
    while rem:
        best = -1
        bestw = -1
        m = rem
        while m:
            v = __builtin_ctzll(m)
            m &= m - 1
            if weight[v] > bestw:
                best = v
                bestw = weight[v]
        order[cnt] = best
        cnt += 1
        rem &= ~_bit(best)
        m = cadj[best] & rem
        while m:
            u = __builtin_ctzll(m)
            m &= m - 1
            weight[u] += 1
    # reverse in place: reverse MCS order is a PEO iff chordal
    for i in range(cnt // 2):
        v = order[i]
        order[i] = order[cnt - 1 - i]
        order[cnt - 1 - i] = v
    for i in range(cnt):
        pos[order[i]] = i
    later = 0
    for i in range(cnt - 1, -1, -1):
        later_masks[i] = later
        later |= _bit(order[i])
    for i in range(cnt):
        v = order[i]
        l_nbrs = cadj[v] & later_masks[i]
        if __builtin_popcountll(l_nbrs) < 2:
            continue
        p = -1
        bestpos = 1 << 30
        m = l_nbrs
        while m:
            u = __builtin_ctzll(m)
            m &= m - 1
            if pos[u] < bestpos:
                bestpos = pos[u]
                p = u
        bad = l_nbrs & ~cadj[p] & ~_bit(p)
        if bad:
            return (v, p, __builtin_ctzll(bad))
    return None


def net_tent_witnesses(adj, mask, find_all):
    cdef u64 cadj[64]
    cdef u64 cmask, ma, mb, mcm, tmask, pa, pb, pc, qab, qbc, qca
    cdef u64 mx, my, mz, pb2, pc2, qbc2, qca2
    cdef int a, b, c, x, y, z
    cdef bint fall = bool(find_all)
    _load(adj, cadj)
    cmask = mask
    out = []
    ma = cmask
    while ma:
        a = __builtin_ctzll(ma)
        ma &= ma - 1
        mb = cadj[a] & cmask & ~(_bit(a + 1) - 1)
        while mb:
            b = __builtin_ctzll(mb)
            mb &= mb - 1
            mcm = cadj[a] & cadj[b] & cmask & ~(_bit(b + 1) - 1)
            while mcm:
                c = __builtin_ctzll(mcm)
                mcm &= mcm - 1
                tmask = _bit(a) | _bit(b) | _bit(c)
                pa = cadj[a] & cmask & ~(cadj[b] | cadj[c]) & ~tmask
                pb = cadj[b] & cmask & ~(cadj[a] | cadj[c]) & ~tmask
                pc = cadj[c] & cmask & ~(cadj[a] | cadj[b]) & ~tmask
                if pa and pb and pc:
                    mx = pa
                    while mx:
                        x = __builtin_ctzll(mx)
                        mx &= mx - 1
                        pb2 = pb & ~cadj[x]
                        if not pb2:
                            continue
                        my = pb2
                        while my:
                            y = __builtin_ctzll(my)
                            my &= my - 1
                            pc2 = pc & ~cadj[x] & ~cadj[y]
                            if not pc2:
                                continue
                            mz = pc2
                            while mz:
                                z = __builtin_ctzll(mz)
                                mz &= mz - 1
                                out.append(("net", (a, b, c, x, y, z)))
                                if not fall:
                                    return out
                qab = cadj[a] & cadj[b] & cmask & ~cadj[c] & ~tmask
                qbc = cadj[b] & cadj[c] & cmask & ~cadj[a] & ~tmask
                qca = cadj[c] & cadj[a] & cmask & ~cadj[b] & ~tmask
                if qab and qbc and qca:
                    mx = qab
                    while mx:
                        x = __builtin_ctzll(mx)
                        mx &= mx - 1
                        qbc2 = qbc & ~cadj[x]
                        if not qbc2:
                            continue
                        my = qbc2
                        while my:
                            y = __builtin_ctzll(my)
                            my &= my - 1
                            qca2 = qca & ~cadj[x] & ~cadj[y]
                            if not qca2:
                                continue
                            mz = qca2
                            while mz:
                                z = __builtin_ctzll(mz)
                                mz &= mz - 1
                                out.append(("tent", (a, b, c, x, y, z)))
                                if not fall:
                                    return out
    return out


cdef bint _cycle_dfs(u64 *cadj, int s, u64 above, int *path, int plen,
                     u64 pmask, u64 blocked, bint find_all, list out):
    cdef int t = plen - 1
    cdef int last = path[plen - 1]
    cdef int i, w
    cdef u64 closers, ext, m
    if t >= 2:
        closers = cadj[last] & cadj[s] & above & ~pmask
        for i in range(1, t):
            closers &= ~cadj[path[i]]
        m = closers
        while m:
            w = __builtin_ctzll(m)
            m &= m - 1
            if path[1] < w:
                item = tuple([path[i] for i in range(plen)]) + (w,)
                out.append(item)
                if not find_all:
                    return True
    if t >= 4:
        return False
    ext = cadj[last] & above
    if t:
        ext &= ~blocked
    m = ext
    while m:
        w = __builtin_ctzll(m)
        m &= m - 1
        path[plen] = w
        if _cycle_dfs(cadj, s, above, path, plen + 1, pmask | _bit(w),
                      blocked | cadj[last] | _bit(w), find_all, out):
            return True
    return False


def small_cycles(adj, mask, find_all):
    cdef u64 cadj[64]
    cdef u64 cmask, above, m
    cdef int s
    cdef int path[8]
    cdef bint fall = bool(find_all)
    _load(adj, cadj)
    cmask = mask
    out = []
    m = cmask
    while m:
        s = __builtin_ctzll(m)
        m &= m - 1
        above = cmask & ~(_bit(s + 1) - 1)
        path[0] = s
        if _cycle_dfs(cadj, s, above, path, 1, _bit(s), cadj[s] | _bit(s),
                      fall, out):
            return out
    return out


cdef bint _umbrella(u64 *cadj, int *order, int n):
    cdef int pos[64]
    cdef u64 omask = 0, nb, m
    cdef int i, v, u, p, lo, hi, cnt
    for i in range(n):
        pos[order[i]] = i
        omask |= _bit(order[i])
    for i in range(n):
        v = order[i]
        nb = cadj[v] & omask
        if not nb:
            continue
        lo = i
        hi = i
        cnt = 0
        m = nb
        while m:
            u = __builtin_ctzll(m)
            m &= m - 1
            p = pos[u]
            if p < lo:
                lo = p
            if p > hi:
                hi = p
            cnt += 1
        if cnt != hi - lo:
            return False
    return True


def umbrella_ok(adj, order):
    cdef u64 cadj[64]
    cdef int corder[64]
    cdef int i, n
    _load(adj, cadj)
    n = len(order)
    for i in range(n):
        corder[i] = order[i]
    return bool(_umbrella(cadj, corder, n))


cdef bint _place(u64 *cadj, int *verts, int n, int *order, int depth, u64 used):
    cdef int i, j, u, k
    cdef u64 ub, pn
    cdef bint ok
    if depth == n:
        return _umbrella(cadj, order, n)
    for i in range(n):
        u = verts[i]
        ub = _bit(u)
        if used & ub:
            continue
        pn = cadj[u] & used
        k = __builtin_popcountll(pn)
        ok = True
        for j in range(depth - 1, depth - 1 - k, -1):
            if not (pn >> order[j]) & 1:
                ok = False
                break
        if not ok:
            continue
        order[depth] = u
        if _place(cadj, verts, n, order, depth + 1, used | ub):
            return True
    return False


def pig_order_bruteforce(adj, mask):
    cdef u64 cadj[64]
    cdef u64 m
    cdef int verts[64]
    cdef int order[64]
    cdef int n = 0, i
    _load(adj, cadj)
    m = mask
    while m:
        verts[n] = __builtin_ctzll(m)
        m &= m - 1
        n += 1
    if n == 0:
        return ()
    if _place(cadj, verts, n, order, 0, 0):
        return tuple([order[i] for i in range(n)])
    return None


def component_ok(adj, mask):
    cdef u64 cmask = mask
    nv = __builtin_popcountll(cmask)
    if count_edges(adj, mask) == nv - 1:
        return True
    if chordal_fail(adj, mask) is not None:
        return False
    if find_claw(adj, mask) is not None:
        return False
    if net_tent_witnesses(adj, mask, False):
        return False
    return True


def pitg_ok(adj, mask):
    for c in comp_masks(adj, mask):
        if not component_ok(adj, c):
            return False
    return True
