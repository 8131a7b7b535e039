"""Hot array kernels: word reduction, pile normalization, relator rewriting,
the capped area search, and the deterministic RNG.

Conventions used throughout:

* a word is a 1-d ``int32`` array; letter ``+(g+1)`` is generator ``g``,
  ``-(g+1)`` its inverse (``g`` is a 0-based generator index),
* ``comm`` is a ``bool[k, k]`` matrix; ``comm[i, j]`` says generators ``i``
  and ``j`` commute (diagonal must be False: equal letters never swap),
* letter ranks for shortlex ordering are generators first, then inverses,
  both in generator-list order.

Every function here is wrapped by ``maybe_njit`` (see ``_accel``): with
``RANDDEHN_NUMBA=0`` the same source runs as plain Python over numpy arrays.
"""

import numpy as np

from ._accel import maybe_njit

U64 = np.uint64
GOLDEN = U64(0x9E3779B97F4A7C15)
MIX1 = U64(0xBF58476D1CE4E5B9)
MIX2 = U64(0x94D049BB133111EB)
TRIAL_SALT = U64(0xA24BAED4963EE407)


# ---------------------------------------------------------------------------
# RNG: splitmix64 streams, one per (master seed, trial index)
# ---------------------------------------------------------------------------

@maybe_njit
def fmix64(z):
    z = (z ^ (z >> U64(30))) * MIX1
    z = (z ^ (z >> U64(27))) * MIX2
    return z ^ (z >> U64(31))


@maybe_njit
def derive_stream(master_seed, trial_index):
    """Initial splitmix64 state for one trial.

    stream = fmix64( fmix64(seed + phi) XOR ((trial+1) * salt) ), phi the
    64-bit golden ratio.  Pure integer mixing, bit-exact on every platform.
    """
    a = fmix64(U64(master_seed) + GOLDEN)
    return fmix64(a ^ ((U64(trial_index) + U64(1)) * TRIAL_SALT))


@maybe_njit
def draw_indices(state, n, m):
    """Advance a splitmix64 stream, drawing n indices uniform on [0, m)."""
    out = np.empty(n, np.int32)
    s = U64(state)
    for i in range(n):
        s = s + GOLDEN
        z = fmix64(s)
        out[i] = np.int32(z % U64(m))
    return s, out


@maybe_njit
def draw_unit(state):
    """One uniform float in [0, 1) plus the advanced stream state."""
    s = U64(state) + GOLDEN
    z = fmix64(s)
    return s, np.float64(z >> U64(11)) * (1.0 / 9007199254740992.0)


# ---------------------------------------------------------------------------
# free reduction and letter helpers
# ---------------------------------------------------------------------------

@maybe_njit
def free_reduce_arr(w):
    out = np.empty(w.shape[0], np.int32)
    top = 0
    for i in range(w.shape[0]):
        x = w[i]
        if top > 0 and out[top - 1] == -x:
            top -= 1
        else:
            out[top] = x
            top += 1
    return out[:top].copy()


@maybe_njit
def letter_rank(x, k):
    # generators first, then inverses, both in list order
    if x > 0:
        return x - 1
    return k - x - 1


@maybe_njit
def shortlex_less(u, v, k):
    if u.shape[0] != v.shape[0]:
        return u.shape[0] < v.shape[0]
    for i in range(u.shape[0]):
        ru = letter_rank(u[i], k)
        rv = letter_rank(v[i], k)
        if ru != rv:
            return ru < rv
    return False


# ---------------------------------------------------------------------------
# pile (heap-of-pieces) kernels: free groups are the no-commutation case
# ---------------------------------------------------------------------------

@maybe_njit
def pile_scan(w, comm):
    """Cancel inverse pairs modulo commutation, counting crossings.

    Returns (residual word, number of commutation applications).  Each
    cancellation of a pair x ... x^-1 swaps x^-1 leftward across the letters
    (all commuting with it) that separate the pair; every swap is one
    relator application, the cancellation itself is free.  The residual is
    empty iff the input represents the identity.
    """
    out = np.empty(w.shape[0], np.int32)
    top = 0
    count = np.int64(0)
    for i in range(w.shape[0]):
        x = w[i]
        gx = abs(x) - 1
        j = top - 1
        cancelled = False
        while j >= 0:
            y = out[j]
            gy = abs(y) - 1
            if gy == gx:
                if y == -x:
                    count += top - 1 - j
                    for t in range(j, top - 1):
                        out[t] = out[t + 1]
                    top -= 1
                    cancelled = True
                break
            if not comm[gx, gy]:
                break
            j -= 1
        if not cancelled:
            out[top] = x
            top += 1
    return out[:top].copy(), count


@maybe_njit
def pile_prefix_lengths(w, comm):
    """Geodesic length of every prefix of w (evaluated in the RAAG)."""
    n = w.shape[0]
    lengths = np.empty(n + 1, np.int32)
    lengths[0] = 0
    out = np.empty(n, np.int32)
    top = 0
    for i in range(n):
        x = w[i]
        gx = abs(x) - 1
        j = top - 1
        cancelled = False
        while j >= 0:
            y = out[j]
            gy = abs(y) - 1
            if gy == gx:
                if y == -x:
                    for t in range(j, top - 1):
                        out[t] = out[t + 1]
                    top -= 1
                    cancelled = True
                break
            if not comm[gx, gy]:
                break
            j -= 1
        if not cancelled:
            out[top] = x
            top += 1
        lengths[i + 1] = top
    return lengths


@maybe_njit
def pile_linearize(p, comm, k):
    """Left-greedy linearization of a reduced pile sequence.

    Emits, at every step, the least-ranked letter having no earlier
    dependent letter still unemitted; instances of equal letters keep their
    input order.  The result is the canonical normal form word.
    """
    n = p.shape[0]
    if n == 0:
        return p[:0].copy()
    indeg = np.zeros(n, np.int32)
    outdeg = np.zeros(n, np.int32)
    for i in range(n):
        gi = abs(p[i]) - 1
        for j in range(i):
            gj = abs(p[j]) - 1
            if gi == gj or not comm[gi, gj]:
                indeg[i] += 1
                outdeg[j] += 1
    eptr = np.zeros(n + 1, np.int64)
    for j in range(n):
        eptr[j + 1] = eptr[j] + outdeg[j]
    eidx = np.empty(eptr[n], np.int32)
    fill = np.zeros(n, np.int32)
    for i in range(n):
        gi = abs(p[i]) - 1
        for j in range(i):
            gj = abs(p[j]) - 1
            if gi == gj or not comm[gi, gj]:
                eidx[eptr[j] + fill[j]] = i
                fill[j] += 1
    nranks = 2 * k
    queues = np.empty((nranks, n), np.int32)
    qhead = np.zeros(nranks, np.int32)
    qtail = np.zeros(nranks, np.int32)
    for i in range(n):
        if indeg[i] == 0:
            r = letter_rank(p[i], k)
            queues[r, qtail[r]] = i
            qtail[r] += 1
    out = np.empty(n, np.int32)
    for emitted in range(n):
        r = 0
        while qhead[r] == qtail[r]:
            r += 1
        i = queues[r, qhead[r]]
        qhead[r] += 1
        out[emitted] = p[i]
        for e in range(eptr[i], eptr[i + 1]):
            t = eidx[e]
            indeg[t] -= 1
            if indeg[t] == 0:
                rt = letter_rank(p[t], k)
                queues[rt, qtail[rt]] = t
                qtail[rt] += 1
    return out


@maybe_njit
def pile_left_line_distances(x, line, comm):
    """d(v_j, x) for every prefix v_j of the word `line`, x a reduced pile.

    Left-multiplies x by inverted line letters one at a time, keeping the
    product as a reduced pile; entry j is the geodesic distance from the
    j-th vertex of the line to x.
    """
    m = line.shape[0]
    lx = x.shape[0]
    buf = np.empty(m + lx, np.int32)
    head = m
    tail = m + lx
    for i in range(lx):
        buf[m + i] = x[i]
    dist = np.empty(m + 1, np.int32)
    dist[0] = lx
    for j in range(m):
        x0 = -line[j]
        g0 = abs(x0) - 1
        pos = head
        cancelled = False
        while pos < tail:
            y = buf[pos]
            gy = abs(y) - 1
            if gy == g0:
                if y == -x0:
                    for t in range(pos, head, -1):
                        buf[t] = buf[t - 1]
                    head += 1
                    cancelled = True
                break
            if not comm[g0, gy]:
                break
            pos += 1
        if not cancelled:
            head -= 1
            buf[head] = x0
        dist[j + 1] = tail - head
    return dist


@maybe_njit
def pile_segment_length(w, i, j, comm):
    """Geodesic length of the subword w[i:j] evaluated in the RAAG."""
    out = np.empty(j - i, np.int32)
    top = 0
    for t in range(i, j):
        x = w[t]
        gx = abs(x) - 1
        p = top - 1
        cancelled = False
        while p >= 0:
            y = out[p]
            gy = abs(y) - 1
            if gy == gx:
                if y == -x:
                    for q in range(p, top - 1):
                        out[q] = out[q + 1]
                    top -= 1
                    cancelled = True
                break
            if not comm[gx, gy]:
                break
            p -= 1
        if not cancelled:
            out[top] = x
            top += 1
    return top


@maybe_njit
def subwalk_has_bad_pair(letters, lengths, comm, min_gap, c3):
    """Is there i<j with j-i >= min_gap and d(w_i, w_j) <= (j-i)/c3?

    `lengths` are prefix geodesic lengths (pile metric).  Pairs are first
    screened with d >= |len_i - len_j|; survivors get the exact segment
    length.
    """
    n = lengths.shape[0] - 1
    for i in range(n + 1):
        for j in range(i + min_gap, n + 1):
            thr = (j - i) / c3
            dl = lengths[j] - lengths[i]
            if dl < 0:
                dl = -dl
            if dl > thr:
                continue
            d = pile_segment_length(letters, i, j, comm)
            if d <= thr:
                return True
    return False


# ---------------------------------------------------------------------------
# free group (tree) deviation from the closing geodesic
# ---------------------------------------------------------------------------

@maybe_njit
def f2_walk_deviations(letters, k):
    """Distance from each walk position to the closing combing line.

    Positions live in the free group on k generators; the closing line is
    the reduced word of the endpoint, and the distance from w_t to the
    nearest line vertex equals |w_t| - lcp(w_t, w_n) in the Cayley tree.
    """
    n = letters.shape[0]
    final = np.empty(n, np.int32)
    top = 0
    for i in range(n):
        x = letters[i]
        if top > 0 and final[top - 1] == -x:
            top -= 1
        else:
            final[top] = x
            top += 1
    m = top
    stack = np.empty(n, np.int32)
    dev = np.empty(n + 1, np.int32)
    top = 0
    lcp = 0
    dev[0] = 0
    for i in range(n):
        x = letters[i]
        if top > 0 and stack[top - 1] == -x:
            top -= 1
            if lcp > top:
                lcp = top
        else:
            if lcp == top and top < m and final[top] == x:
                lcp += 1
            stack[top] = x
            top += 1
        dev[i + 1] = top - lcp
    return dev


# ---------------------------------------------------------------------------
# winding-number area for the standard presentation of Z^2
# ---------------------------------------------------------------------------

@maybe_njit
def z2_winding_area(w):
    """Sum over unit cells of |winding number| of the closed edge path.

    Letters ±1 step in x, ±2 step in y.  Returns -1 if the word is not
    closed (nonzero exponent sum).
    """
    n = w.shape[0]
    x = 0
    y = 0
    minx = 0
    maxx = 0
    miny = 0
    maxy = 0
    for i in range(n):
        c = w[i]
        if c == 1:
            x += 1
        elif c == -1:
            x -= 1
        elif c == 2:
            y += 1
        else:
            y -= 1
        if x < minx:
            minx = x
        if x > maxx:
            maxx = x
        if y < miny:
            miny = y
        if y > maxy:
            maxy = y
    if x != 0 or y != 0:
        return np.int64(-1)
    if n == 0:
        return np.int64(0)
    width = maxx - minx + 1
    height = maxy - miny
    if height <= 0:
        return np.int64(0)
    # vertical edge at column c, row r contributes its direction to the
    # winding number of every cell (c', r) with c' < c
    cnt = np.zeros((height, width + 1), np.int64)
    x = -minx
    y = -miny
    for i in range(n):
        c = w[i]
        if c == 1:
            x += 1
        elif c == -1:
            x -= 1
        elif c == 2:
            cnt[y, x] += 1
            y += 1
        else:
            y -= 1
            cnt[y, x] -= 1
    area = np.int64(0)
    for r in range(height):
        acc = np.int64(0)
        for col in range(width, 0, -1):
            acc += cnt[r, col]
            if acc < 0:
                area -= acc
            else:
                area += acc
    return area


@maybe_njit
def z2_enumerate_dehn(max_len, k):
    """Exhaustive worst-case area per even length 4..max_len over <a,b|abAB>.

    Enumerates freely reduced words with zero exponent sums, canonical
    under rotation and inversion, and takes the max winding area.  Returns
    (max_area_by_length, witness matrix, witness lengths).
    """
    nl = max_len + 1
    best = np.zeros(nl, np.int64)
    witness = np.zeros((nl, max_len), np.int32)
    wlen = np.zeros(nl, np.int32)
    word = np.empty(max_len, np.int32)
    rots = np.empty(max_len, np.int32)
    cand = np.empty(max_len, np.int32)
    alphabet = np.array([1, -1, 2, -2], np.int32)
    for L in range(4, max_len + 1, 2):
        # odometer over freely reduced words of length L
        idx = np.zeros(L, np.int32)
        pos = 0
        idx[0] = -1
        while pos >= 0:
            if pos >= L:
                # full word: test closedness
                ex = 0
                ey = 0
                for t in range(L):
                    c = word[t]
                    if c == 1:
                        ex += 1
                    elif c == -1:
                        ex -= 1
                    elif c == 2:
                        ey += 1
                    else:
                        ey -= 1
                if ex == 0 and ey == 0 and word[L - 1] != -word[0]:
                    # canonical iff word is minimal among all rotations of
                    # itself and of its inverse (rank-lex order)
                    canon = True
                    for inv in range(2):
                        if inv == 0:
                            for t in range(L):
                                rots[t] = word[t]
                        else:
                            for t in range(L):
                                rots[t] = -word[L - 1 - t]
                        for s in range(L):
                            if inv == 0 and s == 0:
                                continue
                            less = False
                            for t in range(L):
                                a = rots[(s + t) % L]
                                b = word[t]
                                ra = letter_rank(a, k)
                                rb = letter_rank(b, k)
                                if ra != rb:
                                    less = ra < rb
                                    break
                            if less:
                                canon = False
                                break
                        if not canon:
                            break
                    if canon:
                        for t in range(L):
                            cand[t] = word[t]
                        a = z2_winding_area(cand[:L])
                        if a > best[L]:
                            best[L] = a
                            for t in range(L):
                                witness[L, t] = word[t]
                            wlen[L] = L
                pos -= 1
                continue
            idx[pos] += 1
            if idx[pos] >= 4:
                idx[pos] = -1
                pos -= 1
                continue
            c = alphabet[idx[pos]]
            if pos > 0 and c == -word[pos - 1]:
                continue
            word[pos] = c
            pos += 1
            if pos < L:
                idx[pos] = -1
    # make table cumulative (max over length <= L)
    for L in range(1, nl):
        if best[L] < best[L - 1]:
            best[L] = best[L - 1]
            witness[L] = witness[L - 1]
            wlen[L] = wlen[L - 1]
    return best, witness, wlen


# ---------------------------------------------------------------------------
# small cancellation rewriting (Dehn's algorithm)
# ---------------------------------------------------------------------------

@maybe_njit
def _match_len(w, pos, n, variant, vlen):
    m = 0
    while m < vlen and pos + m < n and w[pos + m] == variant[m]:
        m += 1
    return m


@maybe_njit
def dehn_greedy_count(w, variants, vlens, max_steps):
    """Greedy Dehn reduction: replace >half-relator subwords, count steps.

    Returns (final length, replacement count, buffer).  The scan resumes
    just left of each replacement, which keeps the pass near-linear; a
    word is null-homotopic iff the final length is 0 (C'(1/6) input).
    """
    nv = vlens.shape[0]
    maxv = variants.shape[1]
    buf = np.empty(w.shape[0] + maxv, np.int32)
    n = w.shape[0]
    for i in range(n):
        buf[i] = w[i]
    count = np.int64(0)
    pos = 0
    while pos < n:
        bestv = -1
        bestm = 0
        for vi in range(nv):
            vl = vlens[vi]
            m = _match_len(buf, pos, n, variants[vi], vl)
            if 2 * m > vl and m > bestm:
                bestm = m
                bestv = vi
        if bestv < 0:
            pos += 1
            continue
        if count >= max_steps:
            return n, np.int64(-1), buf
        count += 1
        vl = vlens[bestv]
        rep = vl - bestm  # replacement = inverse of variant tail
        # splice: w[:pos] + inv(tail) + w[pos+bestm:], then local reduce
        tail_src = n - (pos + bestm)
        newn = pos + rep + tail_src
        if rep > bestm:
            for t in range(n - 1, pos + bestm - 1, -1):
                buf[t + (rep - bestm)] = buf[t]
        elif rep < bestm:
            for t in range(pos + bestm, n):
                buf[t - (bestm - rep)] = buf[t]
        for t in range(rep):
            buf[pos + t] = -variants[bestv, vl - 1 - t]
        n = newn
        # free reduce around the splice
        lo = pos - 1
        hi = pos + rep
        while lo >= 0 and hi < n and buf[lo] == -buf[hi]:
            lo -= 1
            hi += 1
        if hi > pos + rep:
            cut = hi - (pos + rep)
            for t in range(hi, n):
                buf[t - 2 * cut] = buf[t]
            n -= 2 * cut
        pos = lo + 1 - maxv
        if pos < 0:
            pos = 0
    return n, count, buf


@maybe_njit
def sc_descent_nf(w, variants, vlens, k, max_rounds):
    """Deterministic normal form for C'(1/6) models.

    Round structure: free reduce, then apply the leftmost longest
    more-than-half replacement; at the length fixpoint apply the leftmost
    exactly-half replacement that lowers the word in shortlex order (or
    shortens it via boundary cancellation).  Terminates because (length,
    rank-lex) strictly decreases.
    """
    cur = free_reduce_arr(w)
    nv = vlens.shape[0]
    rounds = 0
    while rounds < max_rounds:
        rounds += 1
        n = cur.shape[0]
        bestp = -1
        bestv = -1
        bestm = 0
        for pos in range(n):
            for vi in range(nv):
                vl = vlens[vi]
                m = _match_len(cur, pos, n, variants[vi], vl)
                if 2 * m > vl and m > bestm:
                    bestm = m
                    bestv = vi
                    bestp = pos
            if bestp == pos:
                break
        if bestp >= 0:
            vl = vlens[bestv]
            rep = vl - bestm
            nxt = np.empty(n - bestm + rep, np.int32)
            for t in range(bestp):
                nxt[t] = cur[t]
            for t in range(rep):
                nxt[bestp + t] = -variants[bestv, vl - 1 - t]
            for t in range(bestp + bestm, n):
                nxt[t - bestm + rep] = cur[t]
            cur = free_reduce_arr(nxt)
            continue
        # half swaps: equal length, strictly smaller result
        improved = False
        for pos in range(n):
            for vi in range(nv):
                vl = vlens[vi]
                if vl % 2 != 0:
                    continue
                h = vl // 2
                m = _match_len(cur, pos, n, variants[vi], vl)
                if m != h:
                    continue
                nxt = np.empty(n, np.int32)
                for t in range(pos):
                    nxt[t] = cur[t]
                for t in range(h):
                    nxt[pos + t] = -variants[vi, vl - 1 - t]
                for t in range(pos + h, n):
                    nxt[t] = cur[t]
                red = free_reduce_arr(nxt)
                if red.shape[0] < n or shortlex_less(red, cur, k):
                    cur = red
                    improved = True
                    break
            if improved:
                break
        if not improved:
            break
    return cur


# ---------------------------------------------------------------------------
# packed-word hash set and the capped bidirectional area search
# ---------------------------------------------------------------------------

@maybe_njit
def _pack_word(buf, ln, bits):
    lo = U64(0)
    hi = U64(0)
    nlo = 63 // bits
    for i in range(ln):
        x = buf[i]
        g = x if x > 0 else -x
        code = U64(2 * (g - 1) + (1 if x < 0 else 0))
        if i < nlo:
            lo |= code << U64(i * bits)
        else:
            hi |= code << U64((i - nlo) * bits)
    hi |= U64(ln) << U64(56)
    return np.int64(hi), np.int64(lo)


@maybe_njit
def _unpack_word(hi, lo, bits, buf):
    uhi = U64(hi)
    ulo = U64(lo)
    ln = np.int32(uhi >> U64(56))
    nlo = 63 // bits
    mask = U64((1 << bits) - 1)
    for i in range(ln):
        if i < nlo:
            code = (ulo >> U64(i * bits)) & mask
        else:
            code = (uhi >> U64((i - nlo) * bits)) & mask
        g = np.int32(code >> U64(1)) + 1
        buf[i] = -g if (code & U64(1)) else g
    return ln


@maybe_njit
def _ht_slot(k1, hi, lo):
    cap = k1.shape[0]
    h = fmix64((U64(hi) * U64(0x9DDFEA08EB382D69)) ^ (U64(lo) + GOLDEN))
    return np.int64(h & U64(cap - 1))


@maybe_njit
def _ht_get(k1, k2, vals, hi, lo):
    cap = k1.shape[0]
    s = _ht_slot(k1, hi, lo)
    while True:
        if k1[s] == np.int64(-1):
            return np.int32(-1)
        if k1[s] == hi and k2[s] == lo:
            return vals[s]
        s += 1
        if s == cap:
            s = 0


@maybe_njit
def _ht_put_new(k1, k2, vals, hi, lo, v):
    """Insert assuming the key is absent; returns False when already there."""
    cap = k1.shape[0]
    s = _ht_slot(k1, hi, lo)
    while True:
        if k1[s] == np.int64(-1):
            k1[s] = hi
            k2[s] = lo
            vals[s] = v
            return True
        if k1[s] == hi and k2[s] == lo:
            return False
        s += 1
        if s == cap:
            s = 0


@maybe_njit
def area_bfs_bidirectional(w, variants, vlens, bits, cap_len, area_cap,
                           max_nodes):
    """Minimal relator-application count from w to the empty word.

    One edge inserts a cyclic permutation of a relator or an inverse at
    some position and freely reduces; intermediate reduced words longer
    than cap_len are pruned.  Runs breadth-first from both endpoints over
    packed 126-bit word keys.  Returns the distance, -1 if exhausted
    without reaching the empty word, or -2 when max_nodes states were
    visited on either side (budget).
    """
    n0 = w.shape[0]
    if n0 == 0:
        return np.int64(0)
    maxv = variants.shape[1]
    nv = vlens.shape[0]
    cap = 1
    while cap < 2 * max_nodes:
        cap *= 2
    # side 0 = from w, side 1 = from the empty word
    k1 = np.full((2, cap), -1, np.int64)
    k2 = np.zeros((2, cap), np.int64)
    dep = np.zeros((2, cap), np.int32)
    fr_hi = np.empty((2, max_nodes), np.int64)
    fr_lo = np.empty((2, max_nodes), np.int64)
    nx_hi = np.empty((2, max_nodes), np.int64)
    nx_lo = np.empty((2, max_nodes), np.int64)
    fr_n = np.zeros(2, np.int64)
    inserted = np.zeros(2, np.int64)
    depth = np.zeros(2, np.int64)

    shi, slo = _pack_word(w, n0, bits)
    if n0 > cap_len:
        return np.int64(-2)
    _ht_put_new(k1[0], k2[0], dep[0], shi, slo, np.int32(0))
    fr_hi[0, 0] = shi
    fr_lo[0, 0] = slo
    fr_n[0] = 1
    inserted[0] = 1
    ehi, elo = _pack_word(w, 0, bits)
    if ehi == shi and elo == slo:
        return np.int64(0)
    _ht_put_new(k1[1], k2[1], dep[1], ehi, elo, np.int32(0))
    fr_hi[1, 0] = ehi
    fr_lo[1, 0] = elo
    fr_n[1] = 1
    inserted[1] = 1

    INF = np.int64(1 << 60)
    best = INF
    buf = np.empty(cap_len + 4, np.int32)
    nbuf = np.empty(cap_len + maxv + 4, np.int32)

    while True:
        if depth[0] + depth[1] >= best:
            break
        if depth[0] + depth[1] >= area_cap:
            break
        if fr_n[0] == 0 or fr_n[1] == 0:
            break
        side = 0 if fr_n[0] <= fr_n[1] else 1
        other = 1 - side
        nn = np.int64(0)
        for fi in range(fr_n[side]):
            ln = _unpack_word(fr_hi[side, fi], fr_lo[side, fi], bits, buf)
            for vi in range(nv):
                vl = vlens[vi]
                for pos in range(ln + 1):
                    # zipper: buf[:pos] + variant + buf[pos:], reduced
                    top = 0
                    for t in range(pos):
                        nbuf[top] = buf[t]
                        top += 1
                    for t in range(vl):
                        x = variants[vi, t]
                        if top > 0 and nbuf[top - 1] == -x:
                            top -= 1
                        else:
                            nbuf[top] = x
                            top += 1
                    hopeless = False
                    for t in range(pos, ln):
                        x = buf[t]
                        if top > 0 and nbuf[top - 1] == -x:
                            top -= 1
                        else:
                            nbuf[top] = x
                            top += 1
                            if top - (ln - t - 1) > cap_len:
                                hopeless = True
                                break
                    if hopeless or top > cap_len:
                        continue
                    chi, clo = _pack_word(nbuf, top, bits)
                    dother = _ht_get(k1[other], k2[other], dep[other],
                                     chi, clo)
                    if dother >= 0:
                        cand = depth[side] + 1 + dother
                        if cand < best:
                            best = cand
                    if _ht_put_new(k1[side], k2[side], dep[side], chi, clo,
                                   np.int32(depth[side] + 1)):
                        if inserted[side] >= max_nodes:
                            return np.int64(-2)
                        nx_hi[side, nn] = chi
                        nx_lo[side, nn] = clo
                        nn += 1
                        inserted[side] += 1
        for t in range(nn):
            fr_hi[side, t] = nx_hi[side, t]
            fr_lo[side, t] = nx_lo[side, t]
        fr_n[side] = nn
        depth[side] += 1
    if best <= area_cap:
        return best
    return np.int64(-1)
