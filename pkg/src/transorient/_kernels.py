"""numba kernels: the whole pipeline on flat integer arrays.

This is a line-by-line port of the pure-Python modules (partition, lbfs,
slices, orientation) and keeps their operation counting, so both engines
report identical orders and identical counters.  The Python modules stay the
readable reference; ``fast.py`` wraps these kernels.

Partition state is three arrays: ``E`` (per-element rows), ``C`` (per-class
rows, classes addressed by integer id) and ``M`` (a few scalars).
"""

from __future__ import annotations

import numpy as np
from numba import njit

# element rows
CLS, NXT, PRV, ANC, BHEAD, BTAIL, BNEXT, BPREV, BSZ, MARK = range(10)
N_EROWS = 10
# class rows
CPREV, CNEXT, CHEAD, CTAIL, CSTART, CEND, CW, CCNT, COFF, CSEEN, CNEW, CCUR = range(12)
N_CROWS = 12
# scalars
FIRST, LAST, NCLS, OPS, STAMP, NBLOCKS = range(6)

# error codes
OK, ERR_NOT_PRIME, ERR_SLICE_COVER, ERR_COCOMP = 0, 1, 2, 3

NPHASES = 7  # source, lbfs, slice_tree, active_edges, order_connected, cocomponents, linear_extension


# --- ordered partition -------------------------------------------------------


@njit(cache=True)
def _raw_class(C, M, start):
    c = M[NCLS]
    M[NCLS] += 1
    C[CPREV, c] = -1
    C[CNEXT, c] = -1
    C[CHEAD, c] = -1
    C[CTAIL, c] = -1
    C[CSTART, c] = start
    C[CEND, c] = start
    C[CSEEN, c] = 0
    C[CNEW, c] = -1
    return c


@njit(cache=True)
def _link_after(C, M, c, before):
    if before < 0:
        C[CNEXT, c] = M[FIRST]
        if M[FIRST] >= 0:
            C[CPREV, M[FIRST]] = c
        M[FIRST] = c
        if M[LAST] < 0:
            M[LAST] = c
    else:
        nb = C[CNEXT, before]
        C[CPREV, c] = before
        C[CNEXT, c] = nb
        if nb >= 0:
            C[CPREV, nb] = c
        else:
            M[LAST] = c
        C[CNEXT, before] = c


@njit(cache=True)
def _unlink_class(C, M, c):
    p, nx = C[CPREV, c], C[CNEXT, c]
    if p >= 0:
        C[CNEXT, p] = nx
    else:
        M[FIRST] = nx
    if nx >= 0:
        C[CPREV, nx] = p
    else:
        M[LAST] = p


@njit(cache=True)
def _append(E, C, c, e):
    E[CLS, e] = c
    E[NXT, e] = -1
    t = C[CTAIL, c]
    E[PRV, e] = t
    if t >= 0:
        E[NXT, t] = e
    else:
        C[CHEAD, c] = e
    C[CTAIL, c] = e


@njit(cache=True)
def _unlink(E, C, c, e):
    p, nx = E[PRV, e], E[NXT, e]
    if p >= 0:
        E[NXT, p] = nx
    else:
        C[CHEAD, c] = nx
    if nx >= 0:
        E[PRV, nx] = p
    else:
        C[CTAIL, c] = p


@njit(cache=True)
def _new_class(C, M, c, before):
    if before:
        new = _raw_class(C, M, C[CSTART, c])
        _link_after(C, M, new, C[CPREV, c])
    else:
        new = _raw_class(C, M, C[CEND, c])
        _link_after(C, M, new, c)
    M[OPS] += 1
    return new


@njit(cache=True)
def _partition_new(n, x):
    """``[[x], [every other element in increasing order]]``."""
    E = np.full((N_EROWS, n), -1, np.int64)
    E[BSZ] = 0
    E[MARK] = 0
    C = np.full((N_CROWS, 2 * n + 4), -1, np.int64)
    M = np.zeros(6, np.int64)
    M[FIRST] = -1
    M[LAST] = -1
    c0 = _raw_class(C, M, 0)
    _link_after(C, M, c0, -1)
    _append(E, C, c0, x)
    C[CEND, c0] = 1
    if n > 1:
        c1 = _raw_class(C, M, 1)
        _link_after(C, M, c1, c0)
        for v in range(n):
            if v != x:
                _append(E, C, c1, v)
        C[CEND, c1] = n
    M[OPS] += n
    return E, C, M


@njit(cache=True)
def _class_of(E, e):
    a = E[ANC, e]
    if a >= 0:
        return E[CLS, a]
    return E[CLS, e]


@njit(cache=True)
def _size(C, c):
    return C[CEND, c] - C[CSTART, c]


@njit(cache=True)
def _block_remove(E, M, a, e):
    p, nx = E[BPREV, e], E[BNEXT, e]
    if p >= 0:
        E[BNEXT, p] = nx
    else:
        E[BHEAD, a] = nx
    if nx >= 0:
        E[BPREV, nx] = p
    else:
        E[BTAIL, a] = p
    E[BSZ, a] -= 1
    if E[BSZ, a] == 0:
        M[NBLOCKS] -= 1


@njit(cache=True)
def _split(E, C, M, c, buf, lo, hi, before):
    new = _new_class(C, M, c, before)
    for k in range(lo, hi):
        e = buf[k]
        a = E[ANC, e]
        if a >= 0:
            _block_remove(E, M, a, e)
            E[ANC, e] = -1
            w = 1
        else:
            _unlink(E, C, c, e)
            w = 1 + E[BSZ, e]
        _append(E, C, new, e)
        if before:
            C[CEND, new] += w
            C[CSTART, c] += w
        else:
            C[CEND, c] -= w
            C[CSTART, new] -= w
    M[OPS] += hi - lo
    return new


@njit(cache=True)
def _group(E, C, M, s, touched, buf):
    """Group ``s`` by class: per touched class, weight in CW, movers in
    ``buf[COFF : COFF + CCNT]``.  Returns the number of touched classes."""
    M[STAMP] += 1
    stamp = M[STAMP]
    if M[NBLOCKS] > 0:
        for k in range(s.shape[0]):
            E[MARK, s[k]] = stamp
    nt = 0
    for k in range(s.shape[0]):
        e = s[k]
        c = E[CLS, e]
        if c < 0:
            continue
        w = 1
        a = E[ANC, e]
        if a >= 0:
            if E[MARK, a] == stamp:
                continue
            c = E[CLS, a]
        elif E[BSZ, e] > 0:
            w += E[BSZ, e]
        if C[CSEEN, c] != stamp:
            C[CSEEN, c] = stamp
            C[CW, c] = 0
            C[CCNT, c] = 0
            touched[nt] = c
            nt += 1
        C[CW, c] += w
        C[CCNT, c] += 1
    off = 0
    for t in range(nt):
        c = touched[t]
        C[COFF, c] = off
        C[CCUR, c] = off
        off += C[CCNT, c]
    for k in range(s.shape[0]):
        e = s[k]
        c = E[CLS, e]
        if c < 0:
            continue
        a = E[ANC, e]
        if a >= 0:
            if E[MARK, a] == stamp:
                continue
            c = E[CLS, a]
        buf[C[CCUR, c]] = e
        C[CCUR, c] += 1
    M[OPS] += s.shape[0]
    return nt


@njit(cache=True)
def _gpivot(E, C, M, v, s, touched, buf):
    pc = _class_of(E, v)
    nt = _group(E, C, M, s, touched, buf)
    for t in range(nt):
        c = touched[t]
        if c == pc or C[CW, c] == _size(C, c):
            continue
        lo = C[COFF, c]
        _split(E, C, M, c, buf, lo, lo + C[CCNT, c], C[CSTART, c] < C[CSTART, pc])


@njit(cache=True)
def _targeted(E, C, M, v, target, s, push, touched, buf):
    """Push or pull ``s`` inside ``target``; returns the mover range in ``buf``."""
    pc = _class_of(E, v)
    _group(E, C, M, s, touched, buf)
    if C[CSEEN, target] != M[STAMP] or C[CW, target] == _size(C, target):
        return 0, 0
    tf = C[CSTART, target] < C[CSTART, pc]
    before = tf if push else not tf
    lo = C[COFF, target]
    hi = lo + C[CCNT, target]
    _split(E, C, M, target, buf, lo, hi, before)
    return lo, hi


@njit(cache=True)
def _split_out_singleton(E, C, M, v, one):
    c = _class_of(E, v)
    if _size(C, c) > 1:
        one[0] = v
        _split(E, C, M, c, one, 0, 1, True)


@njit(cache=True)
def _attach_block(E, C, M, anchor, members, k):
    c = _class_of(E, anchor)
    for t in range(k):
        e = members[t]
        _unlink(E, C, c, e)
        E[ANC, e] = anchor
        tl = E[BTAIL, anchor]
        E[BPREV, e] = tl
        E[BNEXT, e] = -1
        if tl >= 0:
            E[BNEXT, tl] = e
        else:
            E[BHEAD, anchor] = e
        E[BTAIL, anchor] = e
        E[BSZ, anchor] += 1
    M[OPS] += E[BSZ, anchor]
    if k > 0:
        M[NBLOCKS] += 1


@njit(cache=True)
def _detach_block(E, C, M, anchor):
    if E[BSZ, anchor] == 0:
        return
    c = E[CLS, anchor]
    after = anchor
    e = E[BHEAD, anchor]
    cnt = 0
    while e >= 0:
        nb = E[BNEXT, e]
        E[ANC, e] = -1
        E[CLS, e] = c
        nx = E[NXT, after]
        E[PRV, e] = after
        E[NXT, e] = nx
        E[NXT, after] = e
        if nx >= 0:
            E[PRV, nx] = e
        else:
            C[CTAIL, c] = e
        after = e
        e = nb
        cnt += 1
    E[BHEAD, anchor] = -1
    E[BTAIL, anchor] = -1
    E[BSZ, anchor] = 0
    M[NBLOCKS] -= 1
    M[OPS] += cnt


@njit(cache=True)
def _members(E, C, c, out):
    k = 0
    e = C[CHEAD, c]
    while e >= 0:
        out[k] = e
        k += 1
        b = E[BHEAD, e]
        while b >= 0:
            out[k] = b
            k += 1
            b = E[BNEXT, b]
        e = E[NXT, e]
    return k


@njit(cache=True)
def _pop_front(E, C, M):
    c = M[FIRST]
    e = C[CHEAD, c]
    _unlink(E, C, c, e)
    E[CLS, e] = -1
    C[CSTART, c] += 1
    if C[CHEAD, c] < 0:
        _unlink_class(C, M, c)
    M[OPS] += 1
    return e


@njit(cache=True)
def _refine_front(E, C, M, s, touched):
    M[STAMP] += 1
    stamp = M[STAMP]
    nt = 0
    for k in range(s.shape[0]):
        c = E[CLS, s[k]]
        if c < 0:
            continue
        if C[CSEEN, c] != stamp:
            C[CSEEN, c] = stamp
            C[CCNT, c] = 0
            touched[nt] = c
            nt += 1
        C[CCNT, c] += 1
    if nt == 0:
        M[OPS] += s.shape[0]
        return
    for t in range(nt):
        c = touched[t]
        if C[CCNT, c] != _size(C, c):
            C[CNEW, c] = _new_class(C, M, c, True)
        else:
            C[CNEW, c] = -1
    moved = 0
    for k in range(s.shape[0]):
        e = s[k]
        c = E[CLS, e]
        if c < 0:
            continue
        new = C[CNEW, c]
        if new < 0:
            continue
        _unlink(E, C, c, e)
        _append(E, C, new, e)
        C[CEND, new] += 1
        C[CSTART, c] += 1
        moved += 1
    M[OPS] += s.shape[0] + moved


# --- source vertex -----------------------------------------------------------


@njit(cache=True)
def source_vertex(indptr, indices, n, start):
    """Returns (vertex or -1 when the last class stays larger than one, ops)."""
    if n == 1:
        return start, 0
    E, C, M = _partition_new(n, start)
    touched = np.empty(2 * n + 4, np.int64)
    buf = np.empty(n + 1, np.int64)
    queue = np.empty(n + 1, np.int64)
    qh, qt = 0, 1
    queue[0] = start
    extra = 1
    while qh < qt and _size(C, M[LAST]) > 1:
        z = queue[qh]
        qh += 1
        last = M[LAST]
        _gpivot(E, C, M, z, indices[indptr[z]:indptr[z + 1]], touched, buf)
        if M[LAST] != last:
            k = _members(E, C, last, buf)
            for t in range(k):
                queue[qt] = buf[t]
                qt += 1
            extra += k
        extra += 1
    ops = M[OPS] + extra
    last = M[LAST]
    if _size(C, last) > 1:
        return -1, ops
    return C[CHEAD, last], ops


# --- LBFS --------------------------------------------------------------------


@njit(cache=True)
def _csr_by_key(keys, vals, nkeys):
    """Stable counting sort of ``vals`` by ``keys``; returns (ptr, sorted vals)."""
    ptr = np.zeros(nkeys + 1, np.int64)
    for k in range(keys.shape[0]):
        ptr[keys[k] + 1] += 1
    for i in range(nkeys):
        ptr[i + 1] += ptr[i]
    cur = ptr[:-1].copy()
    out = np.empty(keys.shape[0], np.int64)
    for k in range(keys.shape[0]):
        out[cur[keys[k]]] = vals[k]
        cur[keys[k]] += 1
    return ptr, out


@njit(cache=True)
def lbfs_from(indptr, indices, n, m, start):
    """Returns (sigma, position, label ptr, label values, ops)."""
    sidx = np.empty(indices.shape[0], np.int64)
    cur = indptr[:-1].copy()
    for u in range(n):
        for k in range(indptr[u], indptr[u + 1]):
            w = indices[k]
            sidx[cur[w]] = u
            cur[w] += 1
    E, C, M = _partition_new(n, start)
    touched = np.empty(2 * n + 4, np.int64)
    visited = np.zeros(n, np.bool_)
    sigma = np.empty(n, np.int64)
    fresh = np.empty(n + 1, np.int64)
    lab_w = np.empty(m, np.int64)
    lab_v = np.empty(m, np.int64)
    ne = 0
    for k in range(1, n + 1):
        v = _pop_front(E, C, M)
        visited[v] = True
        sigma[k - 1] = v
        nf = 0
        for t in range(indptr[v], indptr[v + 1]):
            w = sidx[t]
            if not visited[w]:
                fresh[nf] = w
                nf += 1
                lab_w[ne] = w
                lab_v[ne] = n - k + 1
                ne += 1
        _refine_front(E, C, M, fresh[:nf], touched)
    position = np.empty(n, np.int64)
    for i in range(n):
        position[sigma[i]] = i
    lptr, lval = _csr_by_key(lab_w[:ne], lab_v[:ne], n)
    return sigma, position, lptr, lval, M[OPS] + 2 * m


# --- slice tree and annotations ---------------------------------------------


@njit(cache=True)
def build_slice_tree(sigma, lptr, lval):
    """Returns (parent, child ptr, children, ops, ok)."""
    n = sigma.shape[0]
    parent = np.full(n, -1, np.int64)
    ops = n
    stack = np.empty(n + 1, np.int64)
    depth = np.empty(n + 1, np.int64)
    sp = 0
    if n > 0:
        stack[0] = 0
        depth[0] = lptr[sigma[0] + 1] - lptr[sigma[0]]
        sp = 1
    for k in range(1, n):
        y, z = sigma[k], sigma[k - 1]
        ly0, ly1 = lptr[y], lptr[y + 1]
        lz0, lz1 = lptr[z], lptr[z + 1]
        lim = min(ly1 - ly0, lz1 - lz0)
        rho = 0
        while rho < lim and lval[ly0 + rho] == lval[lz0 + rho]:
            rho += 1
        ops += rho + 1
        while depth[sp - 1] > rho:
            sp -= 1
            ops += 1
            if sp == 0:
                return parent, np.zeros(n + 1, np.int64), np.zeros(0, np.int64), ops, False
        parent[k] = stack[sp - 1]
        if ly1 - ly0 == depth[sp - 1]:
            stack[sp - 1] = k
        else:
            stack[sp] = k
            depth[sp] = ly1 - ly0
            sp += 1
    keys = np.empty(max(n - 1, 0), np.int64)
    vals = np.empty(max(n - 1, 0), np.int64)
    for k in range(1, n):
        keys[k - 1] = parent[k]
        vals[k - 1] = k
    cptr, kids = _csr_by_key(keys, vals, n)
    return parent, cptr, kids, ops, True


@njit(cache=True)
def _grow(a, need):
    if need <= a.shape[0]:
        return a
    b = np.empty(max(need, 2 * a.shape[0] + 16), a.dtype)
    b[: a.shape[0]] = a
    return b


@njit(cache=True)
def annotate(indptr, indices, n, m, sigma, position, parent, cptr, kids):
    """Active edges, connected-vertex order and co-components.

    Returns a tuple of arrays, see ``fast.py`` for the layout, plus
    (ops_active, ops_order, ops_cocomp, error code).
    """
    # ---- slice labels
    nchild = np.empty(n, np.int64)
    for i in range(n):
        nchild[i] = 1 + cptr[i + 1] - cptr[i]
    count = np.zeros(n, np.int64)
    touched = np.empty(n, np.int64)
    full = np.empty(n, np.int64)
    later = np.empty(n, np.int64)
    slab_s = np.empty(2 * m + 1, np.int64)
    slab_y = np.empty(2 * m + 1, np.int64)
    nslab = 0
    ops = 0
    err = OK
    for i in range(n):
        y = sigma[i]
        nl = 0
        for t in range(indptr[y], indptr[y + 1]):
            w = indices[t]
            if position[w] > i:
                later[nl] = w
                nl += 1
        ops += indptr[y + 1] - indptr[y]
        nt = 0
        nf = 0
        for t in range(nl):
            s = position[later[t]]
            while s >= 0:
                if count[s] == 0:
                    touched[nt] = s
                    nt += 1
                count[s] += 1
                ops += 1
                if count[s] < nchild[s]:
                    break
                full[nf] = s
                nf += 1
                s = parent[s]
        for t in range(nf):
            s = full[t]
            p = parent[s]
            if p < 0 or count[p] < nchild[p]:
                slab_s[nslab] = s
                slab_y[nslab] = y
                nslab += 1
        for t in range(nl):
            q = position[later[t]]
            if count[q] < nchild[q]:
                err = ERR_SLICE_COVER
        for t in range(nt):
            count[touched[t]] = 0
        ops += nt + nf
        if err != OK:
            break
    lab_ptr, lab = _csr_by_key(slab_s[:nslab], slab_y[:nslab], n)

    # ---- member lists: list ids and their final lengths
    lid = np.empty(n, np.int64)
    mlen = np.empty(n, np.int64)
    nlists = 0
    listlen = np.zeros(n, np.int64)
    for i in range(n - 1, -1, -1):
        k0, k1 = cptr[i], cptr[i + 1]
        tot = 1
        for t in range(k0, k1):
            tot += mlen[kids[t]]
        mlen[i] = tot
        if k1 > k0 and lab_ptr[kids[k1 - 1] + 1] == lab_ptr[kids[k1 - 1]]:
            lid[i] = lid[kids[k1 - 1]]
        else:
            lid[i] = nlists
            nlists += 1
        listlen[lid[i]] = tot
    loff = np.zeros(nlists + 1, np.int64)
    for L in range(nlists):
        loff[L + 1] = loff[L] + listlen[L]
    membuf = np.empty(loff[nlists], np.int64)
    mcur = loff[:-1].copy()

    # ---- alpha pairs (slice, vertex) -> list of active neighbours
    cap = 2 * m + 1
    akey = np.empty(cap, np.int64)
    acnt = np.zeros(cap, np.int64)
    aoff = np.empty(cap, np.int64)
    aval = np.empty(2 * m + 1, np.int64)
    afill = np.empty(cap, np.int64)
    pstart = np.zeros(n, np.int64)
    pend = np.zeros(n, np.int64)
    ypair = np.full(n, -1, np.int64)
    kst = np.full(n, -1, np.int64)
    kslot = np.empty(n, np.int64)
    npairs = 0
    nval = 0
    for i in range(n - 1, -1, -1):
        k0, k1 = cptr[i], cptr[i + 1]
        x = sigma[i]
        if k1 > k0 and lab_ptr[kids[k1 - 1] + 1] == lab_ptr[kids[k1 - 1]]:
            L = lid[kids[k1 - 1]]
            mid0, mid1 = k0 + 1, k1 - 1
            first = kids[k0] if k1 - k0 > 1 else -1
        else:
            L = lid[i]
            mid0, mid1 = k0 + 1, k1
            first = kids[k0] if k1 > k0 else -1
        for t in range(mid1 - 1, mid0 - 1, -1):
            c = kids[t]
            src = loff[lid[c]]
            for q in range(mlen[c]):
                membuf[mcur[L]] = membuf[src + q]
                mcur[L] += 1
            ops += mlen[c]
        membuf[mcur[L]] = x
        mcur[L] += 1
        if first >= 0:
            src = loff[lid[first]]
            for q in range(mlen[first]):
                membuf[mcur[L]] = membuf[src + q]
                mcur[L] += 1
            ops += mlen[first]

        # count pass
        p0 = npairs
        for t in range(k0, k1):
            c = kids[t]
            la, lb = lab_ptr[c], lab_ptr[c + 1]
            if la == lb:
                continue
            src = loff[lid[c]]
            for q in range(mlen[c]):
                v = membuf[src + q]
                if kst[v] != i:
                    kst[v] = i
                    kslot[v] = npairs
                    akey[npairs] = v
                    acnt[npairs] = 0
                    npairs += 1
                acnt[kslot[v]] += lb - la
                for r in range(la, lb):
                    w = lab[r]
                    if kst[w] != i:
                        kst[w] = i
                        kslot[w] = npairs
                        akey[npairs] = w
                        acnt[npairs] = 0
                        npairs += 1
                    acnt[kslot[w]] += 1
                ops += lb - la
        for p in range(p0, npairs):
            aoff[p] = nval
            afill[p] = nval
            nval += acnt[p]
        # fill pass
        for t in range(k0, k1):
            c = kids[t]
            la, lb = lab_ptr[c], lab_ptr[c + 1]
            if la == lb:
                continue
            src = loff[lid[c]]
            for q in range(mlen[c]):
                v = membuf[src + q]
                pv = kslot[v]
                for r in range(la, lb):
                    w = lab[r]
                    aval[afill[pv]] = w
                    afill[pv] += 1
                    pw = kslot[w]
                    aval[afill[pw]] = v
                    afill[pw] += 1
        pstart[i] = p0
        pend[i] = npairs
        if kst[x] == i:
            ypair[i] = kslot[x]
    ops_active = ops

    # ---- connected vertices in LBFS order
    ops = 0
    skey = np.empty(npairs, np.int64)
    sval = np.empty(npairs, np.int64)
    # pairs are stored in decreasing slice order; walk them slice-ascending
    ns = 0
    for i in range(n):
        for p in range(pstart[i], pend[i]):
            skey[ns] = akey[p]
            sval[ns] = p
            ns += 1
        ops += pend[i] - pstart[i]
    sptr, spairs = _csr_by_key(skey[:ns], sval[:ns], n)
    cpair = np.empty(npairs, np.int64)
    ccur = pstart.copy()
    pslice = np.empty(npairs, np.int64)
    for i in range(n):
        for p in range(pstart[i], pend[i]):
            pslice[p] = i
    for k in range(n):
        v = sigma[k]
        for t in range(sptr[v], sptr[v + 1]):
            p = spairs[t]
            i = pslice[p]
            cpair[ccur[i]] = p
            ccur[i] += 1
        ops += 1 + sptr[v + 1] - sptr[v]
    for i in range(n):
        ops += pend[i] - pstart[i]
    ops_order = ops

    # ---- co-components, bottom-up
    ops = 0
    cc_has = np.zeros(n, np.bool_)
    cc_start = np.zeros(n, np.int64)
    cc_end = np.zeros(n, np.int64)
    ccref = np.empty(16, np.int64)
    nref = 0
    comp_s = np.empty(16, np.int64)
    comp_e = np.empty(16, np.int64)
    ncomp = 0
    segb = np.empty(16, np.int64)
    sege = np.empty(16, np.int64)
    nseg = 0
    ust = np.full(n, -1, np.int64)
    uslot = np.empty(n, np.int64)
    univ = np.empty(16, np.int64)
    for i in range(n - 1, -1, -1):
        if err != OK:
            break
        if pend[i] == pstart[i] or ypair[i] < 0:
            continue
        if cptr[i + 1] == cptr[i]:
            err = ERR_COCOMP
            break
        s1 = kids[cptr[i]]
        if s1 != i + 1 or mlen[s1] != acnt[ypair[i]]:
            err = ERR_COCOMP
            break
        for p in range(pstart[i], pend[i]):
            ust[akey[p]] = i
            uslot[akey[p]] = p
        base = mlen[i] - mlen[s1]
        # default single co-component of s1
        if not cc_has[s1]:
            segb = _grow(segb, nseg + 1)
            sege = _grow(sege, nseg + 1)
            segb[nseg] = loff[lid[s1]]
            sege[nseg] = loff[lid[s1]] + mlen[s1]
            comp_s = _grow(comp_s, ncomp + 1)
            comp_e = _grow(comp_e, ncomp + 1)
            comp_s[ncomp] = nseg
            comp_e[ncomp] = nseg + 1
            nseg += 1
            ccref = _grow(ccref, nref + 1)
            ccref[nref] = ncomp
            ncomp += 1
            r0, r1 = nref, nref + 1
            nref += 1
        else:
            r0, r1 = cc_start[s1], cc_end[s1]
        big = ncomp
        ncomp += 1
        comp_s = _grow(comp_s, ncomp)
        comp_e = _grow(comp_e, ncomp)
        comp_s[big] = nseg
        segb = _grow(segb, nseg + 1)
        sege = _grow(sege, nseg + 1)
        segb[nseg] = loff[lid[i]]
        sege[nseg] = loff[lid[i]] + base
        nseg += 1
        nu = 0
        for r in range(r0, r1):
            comp = ccref[r]
            ok = True
            for sg in range(comp_s[comp], comp_e[comp]):
                for q in range(segb[sg], sege[sg]):
                    ops += 1
                    if acnt[uslot[membuf[q]]] != base:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                univ = _grow(univ, nu + 1)
                univ[nu] = comp
                nu += 1
            else:
                k = comp_e[comp] - comp_s[comp]
                segb = _grow(segb, nseg + k)
                sege = _grow(sege, nseg + k)
                for sg in range(comp_s[comp], comp_e[comp]):
                    segb[nseg] = segb[sg]
                    sege[nseg] = sege[sg]
                    nseg += 1
            ops += comp_e[comp] - comp_s[comp]
        comp_e[big] = nseg
        ccref = _grow(ccref, nref + 1 + nu)
        cc_start[i] = nref
        ccref[nref] = big
        nref += 1
        for t in range(nu):
            ccref[nref] = univ[t]
            nref += 1
        cc_end[i] = nref
        cc_has[i] = True
    ops_cocomp = ops + n
    return (
        akey, aoff, acnt, aval, pstart, pend, cpair, ypair, pslice,
        lid, loff, mlen, membuf,
        cc_has, cc_start, cc_end, ccref, comp_s, comp_e, segb, sege,
        ops_active, ops_order, ops_cocomp, err,
    )


# --- linear extension --------------------------------------------------------


@njit(cache=True)
def _heap_push(hk, hv, size, key, val):
    j = size
    hk[j] = key
    hv[j] = val
    while j > 0:
        p = (j - 1) >> 1
        if hk[p] <= hk[j]:
            break
        hk[p], hk[j] = hk[j], hk[p]
        hv[p], hv[j] = hv[j], hv[p]
        j = p
    return size + 1


@njit(cache=True)
def _heap_pop(hk, hv, size):
    top = hv[0]
    size -= 1
    hk[0] = hk[size]
    hv[0] = hv[size]
    j = 0
    while True:
        lft = 2 * j + 1
        if lft >= size:
            break
        c = lft
        if lft + 1 < size and hk[lft + 1] < hk[lft]:
            c = lft + 1
        if hk[j] <= hk[c]:
            break
        hk[c], hk[j] = hk[j], hk[c]
        hv[c], hv[j] = hv[j], hv[c]
        j = c
    return top, size


@njit(cache=True)
def linear_extension(n, sigma, position, akey, aoff, acnt, aval, pstart, pend, cpair, ypair,
                     lid, loff, mlen, membuf, cc_has, cc_start, cc_end, ccref, comp_s, comp_e,
                     segb, sege):
    """Returns (order, ops)."""
    x = sigma[0]
    E, C, M = _partition_new(n, x)
    touched = np.empty(2 * n + 4, np.int64)
    buf = np.empty(n + 1, np.int64)
    mbuf = np.empty(n + 1, np.int64)
    sbuf = np.empty(n + 1, np.int64)
    one = np.empty(1, np.int64)
    hk = np.empty(n + 1, np.int64)
    hv = np.empty(n + 1, np.int64)
    pst = np.full(n, -1, np.int64)  # pair lookup for the current slice
    pslot = np.empty(n, np.int64)
    aymark = np.full(n, -1, np.int64)
    queued = np.full(n, -1, np.int64)
    insflag = np.full(n, -1, np.int64)
    ins = np.empty(n + 1, np.int64)
    ins2 = np.empty(n + 1, np.int64)
    compst = np.full(n, -1, np.int64)
    compof = np.empty(n, np.int64)
    pulled = np.full(n + 1, -1, np.int64)
    extra = 0
    for i in range(n):
        y = sigma[i]
        p0, p1 = pstart[i], pend[i]
        if p1 > p0:
            # ---- first round: separate y from its active neighbours
            rops = 0
            for k in range(p0, p1):
                pst[akey[k]] = i
                pslot[akey[k]] = k
            yp = ypair[i]
            ay0 = 0
            ay1 = 0
            if yp >= 0:
                ay0 = aoff[yp]
                ay1 = ay0 + acnt[yp]
            for t in range(ay0, ay1):
                aymark[aval[t]] = i
            py = _class_of(E, y)
            nins = 0
            ninsl = 0
            hsize = 0
            for k in range(p0, p1):
                v = akey[cpair[k]]
                if v == y:
                    continue
                if _class_of(E, v) == py:
                    ins[ninsl] = v
                    ninsl += 1
                    insflag[v] = i
                    nins += 1
                else:
                    hsize = _heap_push(hk, hv, hsize, position[v], v)
                    queued[v] = i
            rops += (p1 - p0) + (ay1 - ay0)
            blocked = False
            comps_built = False
            cr0 = 0
            cr1 = 0
            while hsize > 0:
                z, hsize = _heap_pop(hk, hv, hsize)
                pz = pslot[z]
                for phase in range(2):
                    if phase == 0:
                        if aymark[z] != i:
                            continue
                        if not blocked:
                            cy = _class_of(E, y)
                            k = 0
                            for t in range(ay0, ay1):
                                v = aval[t]
                                if _class_of(E, v) == cy:
                                    mbuf[k] = v
                                    k += 1
                            _attach_block(E, C, M, y, mbuf, k)
                            for t in range(k):
                                v = mbuf[t]
                                if insflag[v] == i:
                                    insflag[v] = -1
                                    nins -= 1
                            blocked = True
                        if not comps_built:
                            comps_built = True
                            s1 = i + 1
                            cnt = 0
                            if cc_has[s1]:
                                cr0, cr1 = cc_start[s1], cc_end[s1]
                                for r in range(cr0, cr1):
                                    comp = ccref[r]
                                    for sg in range(comp_s[comp], comp_e[comp]):
                                        for q in range(segb[sg], sege[sg]):
                                            compst[membuf[q]] = i
                                            compof[membuf[q]] = r - cr0
                                            cnt += 1
                            else:
                                cr0, cr1 = -1, -1
                                b0 = loff[lid[s1]]
                                for q in range(b0, b0 + mlen[s1]):
                                    compst[membuf[q]] = i
                                    compof[membuf[q]] = 0
                                    cnt += 1
                            rops += cnt
                        ci = compof[z]
                        if pulled[ci] == i:
                            continue
                        pulled[ci] = i
                        k = 0
                        if cr0 >= 0:
                            comp = ccref[cr0 + ci]
                            for sg in range(comp_s[comp], comp_e[comp]):
                                for q in range(segb[sg], sege[sg]):
                                    sbuf[k] = membuf[q]
                                    k += 1
                        else:
                            b0 = loff[lid[i + 1]]
                            for q in range(b0, b0 + mlen[i + 1]):
                                sbuf[k] = membuf[q]
                                k += 1
                        before = _class_of(E, y)
                        lo, hi = _targeted(E, C, M, z, before, sbuf[:k], False, touched, buf)
                    else:
                        before = _class_of(E, y)
                        lo, hi = _targeted(E, C, M, z, before, aval[aoff[pz]:aoff[pz] + acnt[pz]],
                                           True, touched, buf)
                    # settle
                    cy = _class_of(E, y)
                    rops += hi - lo
                    if cy != before:
                        rops += nins
                        n2 = 0
                        for t in range(ninsl):
                            v = ins[t]
                            if insflag[v] != i:
                                continue
                            if _class_of(E, v) == cy:
                                ins2[n2] = v
                                n2 += 1
                            else:
                                insflag[v] = -1
                                if queued[v] != i:
                                    queued[v] = i
                                    hsize = _heap_push(hk, hv, hsize, position[v], v)
                        for t in range(n2):
                            ins[t] = ins2[t]
                        ninsl = n2
                        nins = n2
                    else:
                        for t in range(lo, hi):
                            v = buf[t]
                            if insflag[v] == i:
                                insflag[v] = -1
                                nins -= 1
                                if queued[v] != i:
                                    queued[v] = i
                                    hsize = _heap_push(hk, hv, hsize, position[v], v)
                            elif aymark[v] == i:
                                if queued[v] != i:
                                    queued[v] = i
                                    hsize = _heap_push(hk, hv, hsize, position[v], v)
            if blocked:
                _detach_block(E, C, M, y)
            extra += rops
        _split_out_singleton(E, C, M, y, one)
        if p1 > p0:
            for k in range(p0, p1):
                pz = cpair[k]
                _gpivot(E, C, M, akey[pz], aval[aoff[pz]:aoff[pz] + acnt[pz]], touched, buf)
        extra += 1
    order = np.empty(n, np.int64)
    c = M[FIRST]
    k = 0
    while c >= 0:
        order[k] = C[CHEAD, c]
        k += 1
        c = C[CNEXT, c]
    return order, M[OPS] + extra


# --- whole pipeline ----------------------------------------------------------


@njit(cache=True)
def is_connected(indptr, indices, n):
    if n == 0:
        return True
    seen = np.zeros(n, np.bool_)
    stack = np.empty(n, np.int64)
    seen[0] = True
    stack[0] = 0
    sp = 1
    cnt = 1
    while sp > 0:
        sp -= 1
        u = stack[sp]
        for t in range(indptr[u], indptr[u + 1]):
            w = indices[t]
            if not seen[w]:
                seen[w] = True
                cnt += 1
                stack[sp] = w
                sp += 1
    return cnt == n


@njit(cache=True)
def pipeline(indptr, indices, n, m, start, source):
    """Source (unless ``source`` >= 0), LBFS, slice analysis, linear extension.

    Returns (order, counters, source, error code).
    """
    counters = np.zeros(NPHASES, np.int64)
    if source < 0:
        source, ops = source_vertex(indptr, indices, n, start)
        counters[0] = ops
        if source < 0:
            return np.zeros(0, np.int64), counters, -1, ERR_NOT_PRIME
    sigma, position, lptr, lval, ops = lbfs_from(indptr, indices, n, m, source)
    counters[1] = ops
    parent, cptr, kids, ops, ok = build_slice_tree(sigma, lptr, lval)
    counters[2] = ops
    if not ok:
        return np.zeros(0, np.int64), counters, source, ERR_SLICE_COVER
    (akey, aoff, acnt, aval, pstart, pend, cpair, ypair, pslice,
     lid, loff, mlen, membuf, cc_has, cc_start, cc_end, ccref, comp_s, comp_e, segb, sege,
     ops_a, ops_o, ops_c, err) = annotate(indptr, indices, n, m, sigma, position, parent, cptr, kids)
    counters[3] = ops_a
    counters[4] = ops_o
    counters[5] = ops_c
    if err != OK:
        return np.zeros(0, np.int64), counters, source, err
    order, ops = linear_extension(
        n, sigma, position, akey, aoff, acnt, aval, pstart, pend, cpair, ypair,
        lid, loff, mlen, membuf, cc_has, cc_start, cc_end, ccref, comp_s, comp_e, segb, sege,
    )
    counters[6] = ops
    return order, counters, source, OK
