"""Compiled array kernels behind :mod:`planarflow.fast`.

Each kernel mirrors a pure-Python routine elsewhere in the package and is
checked against it.  Everything is int64; ``BIG`` stands in for infinity
and stays far enough below 2**63 that a few additions cannot overflow.
Uncapacitated arcs carry upper bound ``-1``.
"""
import numpy as np
from numba import njit
from numba.typed import List

BIG = 1 << 60
HALF = 1 << 59
KEY = 1 << 31


@njit(cache=True)
def _origin(tails, heads, d):
    return tails[d >> 1] if d & 1 == 0 else heads[d >> 1]


@njit(cache=True)
def trace_faces(tails, heads, rot_ptr, rot):
    m = tails.shape[0]
    n = rot_ptr.shape[0] - 1
    succ = np.empty(2 * m, np.int64)
    for v in range(n):
        lo, hi = rot_ptr[v], rot_ptr[v + 1]
        for i in range(lo, hi):
            succ[rot[i]] = rot[i + 1] if i + 1 < hi else rot[lo]
    face_of = np.full(2 * m, -1, np.int64)
    walk = np.empty(2 * m, np.int64)
    face_ptr = np.empty(2 * m + 1, np.int64)
    nf = 0
    pos = 0
    for start in range(2 * m):
        if face_of[start] != -1:
            continue
        face_ptr[nf] = pos
        d = start
        while face_of[d] == -1:
            face_of[d] = nf
            walk[pos] = d
            pos += 1
            d = succ[d ^ 1]
        nf += 1
    face_ptr[nf] = pos
    return face_of, face_ptr[:nf + 1].copy(), walk


@njit(cache=True)
def biconnected_blocks(n, tails, heads):
    """Block id of every arc; self-loops get blocks of their own."""
    m = tails.shape[0]
    ptr = np.zeros(n + 1, np.int64)
    for a in range(m):
        if tails[a] != heads[a]:
            ptr[tails[a] + 1] += 1
            ptr[heads[a] + 1] += 1
    for v in range(n):
        ptr[v + 1] += ptr[v]
    fill = ptr[:n].copy()
    adj_arc = np.empty(ptr[n], np.int64)
    adj_to = np.empty(ptr[n], np.int64)
    for a in range(m):
        t, h = tails[a], heads[a]
        if t == h:
            continue
        adj_arc[fill[t]] = a
        adj_to[fill[t]] = h
        fill[t] += 1
        adj_arc[fill[h]] = a
        adj_to[fill[h]] = t
        fill[h] += 1
    disc = np.full(n, -1, np.int64)
    low = np.zeros(n, np.int64)
    block_of = np.full(m, -1, np.int64)
    st_v = np.empty(n, np.int64)
    st_via = np.empty(n, np.int64)
    st_i = np.empty(n, np.int64)
    arc_stack = np.empty(m, np.int64)
    nb = 0
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = timer
        low[root] = timer
        timer += 1
        st_v[0], st_via[0], st_i[0] = root, -1, ptr[root]
        sp = 1
        asp = 0
        while sp > 0:
            v, via, i = st_v[sp - 1], st_via[sp - 1], st_i[sp - 1]
            if i < ptr[v + 1]:
                st_i[sp - 1] = i + 1
                a, w = adj_arc[i], adj_to[i]
                if a == via:
                    continue
                if disc[w] == -1:
                    arc_stack[asp] = a
                    asp += 1
                    disc[w] = timer
                    low[w] = timer
                    timer += 1
                    st_v[sp], st_via[sp], st_i[sp] = w, a, ptr[w]
                    sp += 1
                elif disc[w] < disc[v]:
                    arc_stack[asp] = a
                    asp += 1
                    if disc[w] < low[v]:
                        low[v] = disc[w]
                continue
            sp -= 1
            if sp == 0:
                break
            p = st_v[sp - 1]
            if low[v] < low[p]:
                low[p] = low[v]
            if low[v] >= disc[p]:
                while True:
                    asp -= 1
                    a = arc_stack[asp]
                    block_of[a] = nb
                    if a == via:
                        break
                nb += 1
    for a in range(m):
        if tails[a] == heads[a]:
            block_of[a] = nb
            nb += 1
    return block_of, nb


@njit(cache=True)
def to_circulation(n, tails, heads, lower, upper, cost, balance, rot_ptr, rot, outer_walk):
    """Forced arcs carrying outer-face prefix sums; see ``flow_to_circulation``."""
    m = tails.shape[0]
    k = outer_walk.shape[0]
    size = m + 2 * k
    nt = np.empty(size, np.int64)
    nh = np.empty(size, np.int64)
    nl = np.empty(size, np.int64)
    nu = np.empty(size, np.int64)
    nc = np.zeros(size, np.int64)
    nt[:m] = tails
    nh[:m] = heads
    nl[:m] = lower
    nu[:m] = upper
    nc[:m] = cost
    before = np.full(2 * m, -1, np.int64)
    after = np.full(2 * m, -1, np.int64)
    forced = np.empty((k, 3), np.int64)
    nforced = 0
    ext = np.empty(2 * k, np.int64)
    next_ = 0
    existing = set()
    for a in range(m):
        existing.add(tails[a] * KEY + heads[a])
    seen = np.zeros(n, np.bool_)
    prefix = 0
    cur_m, cur_n = m, n
    new_outer = outer_walk[0]
    for i in range(k - 1):
        d = outer_walk[i]
        x = _origin(tails, heads, d)
        y = _origin(tails, heads, d ^ 1)
        if not seen[x]:
            seen[x] = True
            prefix += balance[x]
        if prefix == 0:
            continue
        if prefix > 0:
            t, h = y, x
        else:
            t, h = x, y
        value = abs(prefix)
        a = cur_m
        if t * KEY + h in existing:
            w = cur_n
            cur_n += 1
            a2 = a + 1
            nt[a], nh[a], nt[a2], nh[a2] = t, w, w, h
            nl[a] = nu[a] = nl[a2] = nu[a2] = value
            cur_m += 2
            ext[next_] = 2 * a + 1
            ext[next_ + 1] = 2 * a2
            next_ += 2
            out_t, out_h = 2 * a, 2 * a2 + 1
        else:
            a2 = -1
            nt[a], nh[a] = t, h
            nl[a] = nu[a] = value
            cur_m += 1
            out_t, out_h = 2 * a, 2 * a + 1
        existing.add(t * KEY + h)
        forced[nforced, 0], forced[nforced, 1], forced[nforced, 2] = a, a2, value
        nforced += 1
        if x == t:
            ox, oy = out_t, out_h
        else:
            ox, oy = out_h, out_t
        before[d] = ox
        after[d ^ 1] = oy
        if i == 0:
            new_outer = ox
    new_ptr = np.empty(cur_n + 1, np.int64)
    new_rot = np.empty(2 * cur_m, np.int64)
    pos = 0
    for v in range(n):
        new_ptr[v] = pos
        for i in range(rot_ptr[v], rot_ptr[v + 1]):
            d = rot[i]
            if before[d] != -1:
                new_rot[pos] = before[d]
                pos += 1
            new_rot[pos] = d
            pos += 1
            if after[d] != -1:
                new_rot[pos] = after[d]
                pos += 1
    for j in range(cur_n - n):
        new_ptr[n + j] = pos
        new_rot[pos] = ext[2 * j]
        new_rot[pos + 1] = ext[2 * j + 1]
        pos += 2
    new_ptr[cur_n] = pos
    return (cur_n, nt[:cur_m].copy(), nh[:cur_m].copy(), nl[:cur_m].copy(),
            nu[:cur_m].copy(), nc[:cur_m].copy(), new_ptr, new_rot, new_outer,
            forced[:nforced].copy())


@njit(cache=True)
def lp_dual(lower, upper, cost, face_of, nf):
    """Transshipment arcs on faces; ``origin`` holds ``2 * arc + forward``."""
    m = lower.shape[0]
    size = m
    for a in range(m):
        if upper[a] >= 0:
            size += 1
    dt = np.empty(size, np.int64)
    dh = np.empty(size, np.int64)
    dc = np.empty(size, np.int64)
    origin = np.empty(size, np.int64)
    fb = np.zeros(nf, np.int64)
    j = 0
    for a in range(m):
        left, right = face_of[2 * a], face_of[2 * a + 1]
        fb[right] += cost[a]
        fb[left] -= cost[a]
        dt[j], dh[j], dc[j], origin[j] = right, left, -lower[a], 2 * a
        j += 1
        if upper[a] >= 0:
            dt[j], dh[j], dc[j], origin[j] = left, right, upper[a], 2 * a + 1
            j += 1
    return dt, dh, dc, origin, fb


@njit(cache=True)
def _pred_cycle(pred, tails, n):
    stamp = np.zeros(n, np.int64)
    for s in range(n):
        u = s
        while u != -1 and stamp[u] == 0:
            stamp[u] = s + 1
            a = pred[u]
            u = tails[a] if a != -1 else -1
        if u != -1 and stamp[u] == s + 1:
            return True
    return False


@njit(cache=True)
def shortest_paths(n, tails, heads, lengths):
    """Distances from a virtual source tied to every vertex, and whether a
    negative cycle exists."""
    m = tails.shape[0]
    ptr = np.zeros(n + 1, np.int64)
    for a in range(m):
        ptr[tails[a] + 1] += 1
    for v in range(n):
        ptr[v + 1] += ptr[v]
    fill = ptr[:n].copy()
    out = np.empty(m, np.int64)
    for a in range(m):
        out[fill[tails[a]]] = a
        fill[tails[a]] += 1
    dist = np.zeros(n, np.int64)
    pred = np.full(n, -1, np.int64)
    queued = np.ones(n, np.bool_)
    queue = np.arange(n + 1, dtype=np.int64)
    qhead, qlen = 0, n
    budget = n
    while qlen > 0:
        v = queue[qhead]
        qhead = qhead + 1 if qhead < n else 0
        qlen -= 1
        queued[v] = False
        dv = dist[v]
        for i in range(ptr[v], ptr[v + 1]):
            a = out[i]
            w = heads[a]
            nd = dv + lengths[a]
            if nd < dist[w]:
                dist[w] = nd
                pred[w] = a
                budget -= 1
                if budget <= 0:
                    if _pred_cycle(pred, tails, n):
                        return dist, True
                    budget = n
                if not queued[w]:
                    queued[w] = True
                    tail = qhead + qlen
                    if tail > n:
                        tail -= n + 1
                    queue[tail] = w
                    qlen += 1
    return dist, False


# -- link-cut tree over parent arcs (capacities) ------------------------------

@njit(cache=True)
def _lc_is_root(lc, x):
    left, right, up = lc[0], lc[1], lc[2]
    p = up[x]
    return p == -1 or (left[p] != x and right[p] != x)


@njit(cache=True)
def _lc_push(lc, x):
    left, right, val, mn, lazy = lc[0], lc[1], lc[3], lc[4], lc[6]
    d = lazy[x]
    if d != 0:
        c = left[x]
        if c != -1:
            val[c] += d
            mn[c] += d
            lazy[c] += d
        c = right[x]
        if c != -1:
            val[c] += d
            mn[c] += d
            lazy[c] += d
        lazy[x] = 0


@njit(cache=True)
def _lc_pull(lc, x):
    left, right, val, mn, arg = lc[0], lc[1], lc[3], lc[4], lc[5]
    lo, hi = left[x], right[x]
    if lo != -1:
        m, a = mn[lo], arg[lo]
        if val[x] <= m:
            m, a = val[x], x
    else:
        m, a = val[x], x
    if hi != -1 and mn[hi] <= m:
        m, a = mn[hi], arg[hi]
    mn[x] = m
    arg[x] = a


@njit(cache=True)
def _lc_rotate(lc, x):
    left, right, up = lc[0], lc[1], lc[2]
    p = up[x]
    g = up[p]
    p_was_root = _lc_is_root(lc, p)
    if left[p] == x:
        b = right[x]
        left[p] = b
        right[x] = p
    else:
        b = left[x]
        right[p] = b
        left[x] = p
    if b != -1:
        up[b] = p
    if not p_was_root:
        if left[g] == p:
            left[g] = x
        else:
            right[g] = x
    up[x] = g
    up[p] = x
    _lc_pull(lc, p)
    _lc_pull(lc, x)


@njit(cache=True)
def _lc_splay(lc, path, x):
    left, up = lc[0], lc[2]
    k = 0
    path[0] = x
    y = x
    while not _lc_is_root(lc, y):
        y = up[y]
        k += 1
        path[k] = y
    for i in range(k, -1, -1):
        _lc_push(lc, path[i])
    while not _lc_is_root(lc, x):
        p = up[x]
        if not _lc_is_root(lc, p):
            g = up[p]
            if (left[g] == p) == (left[p] == x):
                _lc_rotate(lc, p)
            else:
                _lc_rotate(lc, x)
        _lc_rotate(lc, x)


@njit(cache=True)
def _lc_access(lc, path, x):
    right, up = lc[1], lc[2]
    last = -1
    y = x
    while y != -1:
        _lc_splay(lc, path, y)
        right[y] = last
        _lc_pull(lc, y)
        last = y
        y = up[y]
    _lc_splay(lc, path, x)


@njit(cache=True)
def _lc_flush(lc, stack):
    left, right, val = lc[0], lc[1], lc[3]
    n = val.shape[0]
    for x in range(n):
        if _lc_is_root(lc, x):
            sp = 1
            stack[0] = x
            while sp > 0:
                sp -= 1
                y = stack[sp]
                _lc_push(lc, y)
                if left[y] != -1:
                    stack[sp] = left[y]
                    sp += 1
                if right[y] != -1:
                    stack[sp] = right[y]
                    sp += 1


# -- Euler-tour sequence over open/close tokens (costs) -----------------------

@njit(cache=True)
def _et_apply(et, x, d):
    et[4][x] += d
    et[5][x] += d
    et[7][x] += d


@njit(cache=True)
def _et_push(et, x):
    left, right, lazy = et[0], et[1], et[7]
    d = lazy[x]
    if d != 0:
        if left[x] != -1:
            _et_apply(et, left[x], d)
        if right[x] != -1:
            _et_apply(et, right[x], d)
        lazy[x] = 0


@njit(cache=True)
def _et_pull(et, x):
    left, right, size, val, mn, arg = et[0], et[1], et[3], et[4], et[5], et[6]
    m, a = val[x], x >> 1
    s = 1
    c = left[x]
    if c != -1:
        s += size[c]
        if mn[c] < m or (mn[c] == m and arg[c] < a):
            m, a = mn[c], arg[c]
    c = right[x]
    if c != -1:
        s += size[c]
        if mn[c] < m or (mn[c] == m and arg[c] < a):
            m, a = mn[c], arg[c]
    mn[x] = m
    arg[x] = a
    size[x] = s


@njit(cache=True)
def _et_rotate(et, x):
    left, right, up = et[0], et[1], et[2]
    p = up[x]
    g = up[p]
    if left[p] == x:
        b = right[x]
        left[p] = b
        right[x] = p
    else:
        b = left[x]
        right[p] = b
        left[x] = p
    if b != -1:
        up[b] = p
    if g != -1:
        if left[g] == p:
            left[g] = x
        else:
            right[g] = x
    up[x] = g
    up[p] = x
    _et_pull(et, p)
    _et_pull(et, x)


@njit(cache=True)
def _et_splay(et, path, x):
    left, up = et[0], et[2]
    k = 0
    path[0] = x
    y = up[x]
    while y != -1:
        k += 1
        path[k] = y
        y = up[y]
    for i in range(k, -1, -1):
        _et_push(et, path[i])
    while up[x] != -1:
        p = up[x]
        g = up[p]
        if g != -1:
            if (left[g] == p) == (left[p] == x):
                _et_rotate(et, p)
            else:
                _et_rotate(et, x)
        _et_rotate(et, x)


@njit(cache=True)
def _et_join(et, path, a, b):
    if a == -1:
        return b
    if b == -1:
        return a
    right, up = et[1], et[2]
    x = a
    while True:
        _et_push(et, x)
        if right[x] == -1:
            break
        x = right[x]
    _et_splay(et, path, x)
    right[x] = b
    up[b] = x
    _et_pull(et, x)
    return x


@njit(cache=True)
def _et_split3(et, path, a, b):
    left, right, up = et[0], et[1], et[2]
    _et_splay(et, path, a)
    before = left[a]
    if before != -1:
        up[before] = -1
        left[a] = -1
        _et_pull(et, a)
    _et_splay(et, path, b)
    after = right[b]
    if after != -1:
        up[after] = -1
        right[b] = -1
        _et_pull(et, b)
    return before, after


@njit(cache=True)
def _et_subtree_add(et, path, v, d):
    before, after = _et_split3(et, path, 2 * v, 2 * v + 1)
    _et_apply(et, 2 * v + 1, d)
    return _et_join(et, path, _et_join(et, path, before, 2 * v + 1), after)


@njit(cache=True)
def _et_cut(et, path, v):
    before, after = _et_split3(et, path, 2 * v, 2 * v + 1)
    return _et_join(et, path, _et_join(et, path, before, after), 2 * v + 1)


@njit(cache=True)
def _et_build(et, tokens):
    """Balanced tree over ``tokens``; returns the root."""
    left, right, up = et[0], et[1], et[2]
    count = tokens.shape[0]
    if count == 0:
        return -1
    lo_s = np.empty(count, np.int64)
    hi_s = np.empty(count, np.int64)
    par_s = np.empty(count, np.int64)
    side_s = np.empty(count, np.int64)
    made = np.empty(count, np.int64)
    nm = 0
    lo_s[0], hi_s[0], par_s[0], side_s[0] = 0, count, -1, 0
    sp = 1
    root = -1
    while sp > 0:
        sp -= 1
        lo, hi, par, side = lo_s[sp], hi_s[sp], par_s[sp], side_s[sp]
        mid = (lo + hi) // 2
        x = tokens[mid]
        up[x] = par
        left[x] = -1
        right[x] = -1
        if par == -1:
            root = x
        elif side == 0:
            left[par] = x
        else:
            right[par] = x
        made[nm] = x
        nm += 1
        if lo < mid:
            lo_s[sp], hi_s[sp], par_s[sp], side_s[sp] = lo, mid, x, 0
            sp += 1
        if mid + 1 < hi:
            lo_s[sp], hi_s[sp], par_s[sp], side_s[sp] = mid + 1, hi, x, 1
            sp += 1
    for i in range(nm - 1, -1, -1):
        _et_pull(et, made[i])
    return root


# -- fat-tree solver ----------------------------------------------------------

@njit(cache=True)
def _solve_single(v, arcs, tails, cap, cost, balance, flow):
    excess = balance[v]
    for a in arcs:
        flow[a] = cap[a] if cost[a] < 0 else 0
        if tails[a] == v:
            excess -= flow[a]
        else:
            excess += flow[a]
    if excess == 0:
        return True
    send_out = excess > 0
    k = arcs.shape[0]
    o_cost = np.empty(k, np.int64)
    o_arc = np.empty(k, np.int64)
    o_sign = np.empty(k, np.int64)
    o_room = np.empty(k, np.int64)
    no = 0
    for a in arcs:
        if (tails[a] == v) == send_out:
            if flow[a] < cap[a]:
                o_cost[no], o_arc[no], o_sign[no], o_room[no] = cost[a], a, 1, cap[a] - flow[a]
                no += 1
        elif flow[a] > 0:
            o_cost[no], o_arc[no], o_sign[no], o_room[no] = -cost[a], a, -1, flow[a]
            no += 1
    order = np.argsort(o_arc[:no], kind="mergesort")
    order = order[np.argsort(o_cost[:no][order], kind="mergesort")]
    need = abs(excess)
    for j in order:
        d = min(o_room[j], need)
        flow[o_arc[j]] += o_sign[j] * d
        need -= d
        if need == 0:
            return True
    return False


@njit(cache=True)
def _balance_excess(verts, inner, center, excess_apex, mark, local, s,
                    tails, heads, cap, cost, flow):
    if excess_apex == 0:
        return True
    upward = excess_apex > 0
    k = verts.shape[0]
    ni = inner.shape[0]
    c = local[center]

    ptr = np.zeros(k + 1, np.int64)
    for a in inner:
        t, h = tails[a], heads[a]
        if mark[t] == s and mark[h] == s:
            ptr[local[t] + 1] += 1
            ptr[local[h] + 1] += 1
    for x in range(k):
        ptr[x + 1] += ptr[x]
    fill = ptr[:k].copy()
    adj = np.empty(ptr[k], np.int64)
    for a in inner:
        t, h = tails[a], heads[a]
        if mark[t] == s and mark[h] == s:
            lt, lh = local[t], local[h]
            adj[fill[lt]] = lh
            fill[lt] += 1
            adj[fill[lh]] = lt
            fill[lh] += 1
    size = k + ni
    parent = np.full(size, -1, np.int64)
    parent[c] = c
    order = np.empty(k, np.int64)
    order[0] = c
    no = 1
    for i in range(k):
        if i >= no:
            break
        x = order[i]
        for j in range(ptr[x], ptr[x + 1]):
            y = adj[j]
            if parent[y] == -1:
                parent[y] = x
                order[no] = y
                no += 1
    parent[c] = -1

    copy_of = np.full(k, -1, np.int64)
    e_node = np.empty(ni, np.int64)
    e_cost = np.empty(ni, np.int64)
    e_arc = np.empty(ni, np.int64)
    e_sign = np.empty(ni, np.int64)
    e_cap = np.empty(ni, np.int64)
    ne = 0
    total = k
    for a in inner:
        t, h = tails[a], heads[a]
        t_in = mark[t] == s
        h_in = mark[h] == s
        if t_in and h_in:
            lt, lh = local[t], local[h]
            if parent[lt] == lh:
                node, points_up = lt, True
            else:
                node, points_up = lh, False
        else:
            x = local[t] if t_in else local[h]
            node = copy_of[x]
            if node == -1:
                node = total
                copy_of[x] = total
                parent[total] = x
                total += 1
            points_up = not t_in
        if points_up == upward:
            if flow[a] < cap[a]:
                e_node[ne], e_cost[ne], e_arc[ne], e_sign[ne], e_cap[ne] = (
                    node, cost[a], a, 1, cap[a] - flow[a])
                ne += 1
        elif flow[a] > 0:
            e_node[ne], e_cost[ne], e_arc[ne], e_sign[ne], e_cap[ne] = (
                node, -cost[a], a, -1, flow[a])
            ne += 1

    # bundles: entries grouped by node, each group sorted by (cost, arc)
    b_ptr = np.zeros(total + 1, np.int64)
    for i in range(ne):
        b_ptr[e_node[i] + 1] += 1
    for x in range(total):
        b_ptr[x + 1] += b_ptr[x]
    fill = b_ptr[:total].copy()
    bundle = np.empty(ne, np.int64)
    for i in range(ne):
        bundle[fill[e_node[i]]] = i
        fill[e_node[i]] += 1
    for x in range(total):
        lo, hi = b_ptr[x], b_ptr[x + 1]
        for i in range(lo + 1, hi):
            e = bundle[i]
            j = i - 1
            while j >= lo and (e_cost[bundle[j]] > e_cost[e] or (
                    e_cost[bundle[j]] == e_cost[e] and e_arc[bundle[j]] > e_arc[e])):
                bundle[j + 1] = bundle[j]
                j -= 1
            bundle[j + 1] = e

    linked = np.full(total, -1, np.int64)
    ch_ptr = np.zeros(total + 1, np.int64)
    for x in range(total):
        if x != c and b_ptr[x + 1] > b_ptr[x]:
            linked[x] = parent[x]
            ch_ptr[parent[x] + 1] += 1
    for x in range(total):
        ch_ptr[x + 1] += ch_ptr[x]
    fill = ch_ptr[:total].copy()
    children = np.empty(ch_ptr[total], np.int64)
    for x in range(total):
        if linked[x] != -1:
            children[fill[linked[x]]] = x
            fill[linked[x]] += 1

    # link-cut tree: left, right, up, val, min, arg, lazy
    lc = (np.full(total, -1, np.int64), np.full(total, -1, np.int64),
          linked.copy(), np.full(total, BIG, np.int64), np.full(total, BIG, np.int64),
          np.arange(total, dtype=np.int64), np.zeros(total, np.int64))
    for x in range(total):
        if linked[x] != -1:
            e = bundle[b_ptr[x]]
            lc[3][x] = e_cap[e]
            lc[4][x] = e_cap[e]
    # Euler tour: left, right, up, size, val, min, arg, lazy
    t2 = 2 * total
    et = (np.full(t2, -1, np.int64), np.full(t2, -1, np.int64), np.full(t2, -1, np.int64),
          np.ones(t2, np.int64), np.full(t2, BIG, np.int64), np.full(t2, BIG, np.int64),
          np.arange(t2, dtype=np.int64) >> 1, np.zeros(t2, np.int64))
    dist = np.zeros(total, np.int64)
    stack = np.empty(t2 + 1, np.int64)
    sp = 1
    stack[0] = c
    while sp > 0:
        sp -= 1
        x = stack[sp]
        for j in range(ch_ptr[x], ch_ptr[x + 1]):
            y = children[j]
            dist[y] = dist[x] + e_cost[bundle[b_ptr[y]]]
            if y >= k:
                et[4][2 * y] = dist[y]
                et[5][2 * y] = dist[y]
            stack[sp] = y
            sp += 1
    tokens = np.empty(t2, np.int64)
    nt = 0
    for r in range(total):
        if linked[r] != -1:
            continue
        sp = 1
        stack[0] = r
        while sp > 0:
            sp -= 1
            v = stack[sp]
            if v >= 0:
                tokens[nt] = 2 * v
                nt += 1
                stack[sp] = ~v
                sp += 1
                for j in range(ch_ptr[v + 1] - 1, ch_ptr[v] - 1, -1):
                    stack[sp] = children[j]
                    sp += 1
            else:
                tokens[nt] = 2 * ~v + 1
                nt += 1
    root = _et_build(et, tokens)

    path = np.empty(t2 + 1, np.int64)
    active = np.zeros(total, np.int64)
    remaining = abs(excess_apex)
    lc_left, lc_up, lc_val, lc_mn, lc_arg, lc_lazy = lc[0], lc[2], lc[3], lc[4], lc[5], lc[6]
    while remaining > 0:
        if et[5][root] >= HALF:
            return False
        q = et[6][root]
        _lc_access(lc, path, q)
        low, w = lc_mn[q], lc_arg[q]
        if low > 0:
            d = min(low, remaining)
            lc_val[q] -= d
            lc_mn[q] -= d
            lc_lazy[q] -= d
            remaining -= d
            if remaining == 0:
                break
            _lc_access(lc, path, q)
            low, w = lc_mn[q], lc_arg[q]
        old = bundle[b_ptr[w] + active[w]]
        flow[e_arc[old]] += e_sign[old] * e_cap[old]
        active[w] += 1
        if b_ptr[w] + active[w] < b_ptr[w + 1]:
            new = bundle[b_ptr[w] + active[w]]
            _lc_access(lc, path, w)
            lc_val[w] = e_cap[new]
            _lc_pull(lc, w)
            root = _et_subtree_add(et, path, w, e_cost[new] - e_cost[old])
        else:
            _lc_access(lc, path, w)
            left = lc_left[w]
            lc_up[left] = -1
            lc_left[w] = -1
            lc_val[w] = BIG
            _lc_pull(lc, w)
            linked[w] = -1
            root = _et_cut(et, path, w)
            root = _et_subtree_add(et, path, w, BIG)
    _lc_flush(lc, stack)
    for x in range(total):
        if linked[x] != -1:
            e = bundle[b_ptr[x] + active[x]]
            flow[e_arc[e]] += e_sign[e] * (e_cap[e] - lc_val[x])
    return True


@njit(cache=True)
def _centroid(k, ptr, adj):
    parent = np.full(k, -1, np.int64)
    parent[0] = 0
    order = np.empty(k, np.int64)
    order[0] = 0
    no = 1
    for i in range(k):
        x = order[i]
        for j in range(ptr[x], ptr[x + 1]):
            y = adj[j]
            if parent[y] == -1:
                parent[y] = x
                order[no] = y
                no += 1
    parent[0] = -1
    size = np.ones(k, np.int64)
    heaviest = np.zeros(k, np.int64)
    for i in range(k - 1, -1, -1):
        x = order[i]
        p = parent[x]
        if p >= 0:
            size[p] += size[x]
            if size[x] > heaviest[p]:
                heaviest[p] = size[x]
    half = k // 2
    for x in range(k):
        if heaviest[x] <= half and k - size[x] <= half:
            return x
    return -1


@njit(cache=True)
def fat_tree(n, apex, tails, heads, cap, cost, balance):
    """Returns ``(feasible, flow)`` for finite capacities ``cap``."""
    m = tails.shape[0]
    flow = np.zeros(m, np.int64)
    mark = np.zeros(n, np.int64)
    local = np.zeros(n, np.int64)
    stamp = 0
    st_phase = List()
    st_verts = List()
    st_arcs = List()
    st_center = List()
    verts0 = np.empty(n - 1, np.int64)
    j = 0
    for v in range(n):
        if v != apex:
            verts0[j] = v
            j += 1
    st_phase.append(0)
    st_verts.append(verts0)
    st_arcs.append(np.arange(m, dtype=np.int64))
    st_center.append(-1)
    while len(st_phase) > 0:
        phase = st_phase.pop()
        verts = st_verts.pop()
        arcs = st_arcs.pop()
        center = st_center.pop()
        stamp += 1
        s = stamp
        k = verts.shape[0]
        for i in range(k):
            mark[verts[i]] = s
            local[verts[i]] = i
        if phase == 1:
            excess_c = balance[center]
            for a in arcs:
                t, h = tails[a], heads[a]
                if not ((mark[t] == s and t != center) or (mark[h] == s and h != center)):
                    flow[a] = cap[a] if cost[a] < 0 else 0
                if t == center:
                    excess_c -= flow[a]
                elif h == center:
                    excess_c += flow[a]
            if not _balance_excess(verts, arcs, center, -excess_c, mark, local, s,
                                   tails, heads, cap, cost, flow):
                return False, flow
            continue

        inner = np.empty(arcs.shape[0], np.int64)
        ni = 0
        for a in arcs:
            t, h = tails[a], heads[a]
            if t == h or (mark[t] != s and mark[h] != s):
                flow[a] = cap[a] if cost[a] < 0 else 0
            else:
                inner[ni] = a
                ni += 1
        inner = inner[:ni]
        if k == 0:
            continue
        if k == 1:
            if not _solve_single(verts[0], inner, tails, cap, cost, balance, flow):
                return False, flow
            continue

        ptr = np.zeros(k + 1, np.int64)
        for a in inner:
            t, h = tails[a], heads[a]
            if mark[t] == s and mark[h] == s:
                ptr[local[t] + 1] += 1
                ptr[local[h] + 1] += 1
        for x in range(k):
            ptr[x + 1] += ptr[x]
        fill = ptr[:k].copy()
        adj = np.empty(ptr[k], np.int64)
        for a in inner:
            t, h = tails[a], heads[a]
            if mark[t] == s and mark[h] == s:
                lt, lh = local[t], local[h]
                adj[fill[lt]] = lh
                fill[lt] += 1
                adj[fill[lh]] = lt
                fill[lh] += 1
        c = _centroid(k, ptr, adj)
        comp = np.full(k, -1, np.int64)
        comp[c] = -2
        queue = np.empty(k, np.int64)
        g_start = np.empty(k + 1, np.int64)
        ng = 0
        nq = 0
        for j in range(ptr[c], ptr[c + 1]):
            start = adj[j]
            if comp[start] != -1:
                continue
            g_start[ng] = nq
            comp[start] = ng
            queue[nq] = start
            nq += 1
            i = g_start[ng]
            while i < nq:
                x = queue[i]
                i += 1
                for jj in range(ptr[x], ptr[x + 1]):
                    y = adj[jj]
                    if comp[y] == -1:
                        comp[y] = ng
                        queue[nq] = y
                        nq += 1
            ng += 1
        g_start[ng] = nq
        center = verts[c]
        gcount = np.zeros(ng + 1, np.int64)
        owner = np.full(ni, -1, np.int64)
        for i in range(ni):
            a = inner[i]
            t, h = tails[a], heads[a]
            if mark[t] == s and t != center:
                owner[i] = comp[local[t]]
            elif mark[h] == s and h != center:
                owner[i] = comp[local[h]]
            if owner[i] >= 0:
                gcount[owner[i] + 1] += 1
        for g in range(ng):
            gcount[g + 1] += gcount[g]
        gfill = gcount[:ng].copy()
        sub = np.empty(gcount[ng], np.int64)
        for i in range(ni):
            g = owner[i]
            if g >= 0:
                sub[gfill[g]] = inner[i]
                gfill[g] += 1
        st_phase.append(1)
        st_verts.append(verts)
        st_arcs.append(inner)
        st_center.append(center)
        for g in range(ng - 1, -1, -1):
            members = np.empty(g_start[g + 1] - g_start[g], np.int64)
            for i in range(members.shape[0]):
                members[i] = verts[queue[g_start[g] + i]]
            st_phase.append(0)
            st_verts.append(members)
            st_arcs.append(sub[gcount[g]:gcount[g + 1]].copy())
            st_center.append(-1)
    return True, flow
