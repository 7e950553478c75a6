# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels.

Mirrors ``topolab._kernels.pure`` function for function; that module is the
reference semantics and documents the shared conventions.
"""

from libc.stdint cimport uint32_t, uint64_t
from libc.stdlib cimport free, malloc


def space_pack(int n, opens):
    """See topolab._kernels.pure.space_pack."""
    cdef int size = 1 << n
    cdef uint32_t full = <uint32_t>(size - 1)
    cdef uint32_t* minn = <uint32_t*>malloc(n * sizeof(uint32_t)) if n else NULL
    cdef uint32_t* aminn = <uint32_t*>malloc(n * sizeof(uint32_t)) if n else NULL
    cdef uint32_t* int_t = <uint32_t*>malloc(size * sizeof(uint32_t))
    cdef uint32_t* cl_t = <uint32_t*>malloc(size * sizeof(uint32_t))
    cdef int x, a
    cdef uint32_t u, m, s, t
    try:
        for x in range(n):
            m = full
            for u_obj in opens:
                u = <uint32_t>u_obj
                if u >> x & 1:
                    m &= u
            minn[x] = m
        for a in range(size):
            s = 0
            for x in range(n):
                if a >> x & 1 and (minn[x] & <uint32_t>a) == minn[x]:
                    s |= <uint32_t>1 << x
            int_t[a] = s
        for a in range(size):
            cl_t[a] = full ^ int_t[full ^ <uint32_t>a]
        for x in range(n):
            aminn[x] = full
        for a in range(size):
            t = int_t[cl_t[int_t[a]]]
            if (<uint32_t>a & t) == <uint32_t>a:
                for x in range(n):
                    if a >> x & 1:
                        aminn[x] &= <uint32_t>a
        return (tuple(minn[x] for x in range(n)),
                tuple(aminn[x] for x in range(n)),
                tuple(int_t[a] for a in range(size)),
                tuple(cl_t[a] for a in range(size)))
    finally:
        free(minn)
        free(aminn)
        free(int_t)
        free(cl_t)


def class_masks(int n, opens):
    """See topolab._kernels.pure.class_masks.  Requires n <= 6."""
    if n > 6:
        raise ValueError("class_masks requires n <= 6")
    cdef int size = 1 << n
    cdef uint32_t full = <uint32_t>(size - 1)
    cdef uint32_t minn[6]
    cdef uint32_t aminn[6]
    cdef uint32_t int_t[64]
    cdef uint32_t cl_t[64]
    cdef int x, a
    cdef uint32_t u, m, s, t, ia, ca, ica, cia, icia, cica, ker, aker
    for x in range(n):
        m = full
        for u_obj in opens:
            u = <uint32_t>u_obj
            if u >> x & 1:
                m &= u
        minn[x] = m
    for a in range(size):
        s = 0
        for x in range(n):
            if a >> x & 1 and (minn[x] & <uint32_t>a) == minn[x]:
                s |= <uint32_t>1 << x
        int_t[a] = s
    for a in range(size):
        cl_t[a] = full ^ int_t[full ^ <uint32_t>a]
    for x in range(n):
        aminn[x] = full
    for a in range(size):
        t = int_t[cl_t[int_t[a]]]
        if (<uint32_t>a & t) == <uint32_t>a:
            for x in range(n):
                if a >> x & 1:
                    aminn[x] &= <uint32_t>a
    cdef uint64_t open_fm = 0, closed_fm = 0
    cdef uint64_t preopen = 0, preclosed = 0, semiopen = 0, semiclosed = 0
    cdef uint64_t alpha_open = 0, alpha_closed = 0, beta_open = 0, beta_closed = 0
    cdef uint64_t g_closed = 0, am_closed = 0, g_open = 0, am_open = 0
    cdef uint64_t bit
    for u_obj in opens:
        open_fm |= <uint64_t>1 << <uint32_t>u_obj
    for a in range(size):
        if open_fm >> (full ^ <uint32_t>a) & 1:
            closed_fm |= <uint64_t>1 << a
    for a in range(size):
        bit = <uint64_t>1 << a
        ia = int_t[a]
        ca = cl_t[a]
        ica = int_t[ca]
        cia = cl_t[ia]
        icia = int_t[cia]
        cica = cl_t[ica]
        if (<uint32_t>a & ica) == <uint32_t>a:
            preopen |= bit
        if (cia & <uint32_t>a) == cia:
            preclosed |= bit
        if (<uint32_t>a & cia) == <uint32_t>a:
            semiopen |= bit
        if (ica & <uint32_t>a) == ica:
            semiclosed |= bit
        if (<uint32_t>a & icia) == <uint32_t>a:
            alpha_open |= bit
        if (cica & <uint32_t>a) == cica:
            alpha_closed |= bit
        if (<uint32_t>a & cica) == <uint32_t>a:
            beta_open |= bit
        if (icia & <uint32_t>a) == icia:
            beta_closed |= bit
        ker = 0
        aker = 0
        for x in range(n):
            if a >> x & 1:
                ker |= minn[x]
                aker |= aminn[x]
        if (ca & ker) == ca:
            g_closed |= bit
        if (ica & aker) == ica:
            am_closed |= bit
    for a in range(size):
        if g_closed >> (full ^ <uint32_t>a) & 1:
            g_open |= <uint64_t>1 << a
        if am_closed >> (full ^ <uint32_t>a) & 1:
            am_open |= <uint64_t>1 << a
    return (open_fm, closed_fm, open_fm & closed_fm,
            preopen, preclosed, semiopen, semiclosed,
            alpha_open, alpha_closed, beta_open, beta_closed,
            g_closed, g_open, am_closed, am_open)


cdef object _chunks_to_int(uint64_t* chunks, int nch):
    cdef object out = 0
    cdef int i
    for i in range(nch - 1, -1, -1):
        out = (out << 64) | chunks[i]
    return out


def map_masks(int nx, object x_open, object x_closed, object x_amc, object x_amo,
              int ny, object y_open, object y_closed, object y_amc, object y_amo):
    """See topolab._kernels.pure.map_masks.  Requires nX, nY <= 5."""
    if nx > 5 or ny > 5:
        raise ValueError("map_masks requires nX, nY <= 5")
    if nx and not ny:
        return (0,) * 11
    cdef uint64_t xo = <uint64_t>x_open, xc = <uint64_t>x_closed
    cdef uint64_t xamc = <uint64_t>x_amc, xamo = <uint64_t>x_amo
    cdef uint64_t yo = <uint64_t>y_open, yc = <uint64_t>y_closed
    cdef uint64_t yamc = <uint64_t>y_amc, yamo = <uint64_t>y_amo
    cdef int size_x = 1 << nx, size_y = 1 << ny
    cdef uint32_t full_y = <uint32_t>(size_y - 1)
    cdef uint32_t opens_x[32]
    cdef uint32_t closed_x[32]
    cdef uint32_t opens_y[32]
    cdef uint32_t closed_y[32]
    cdef uint32_t amc_y[32]
    cdef int n_ox = 0, n_cx = 0, n_oy = 0, n_cy = 0, n_ay = 0
    cdef int a
    for a in range(size_x):
        if xo >> a & 1:
            opens_x[n_ox] = a
            n_ox += 1
        if xc >> a & 1:
            closed_x[n_cx] = a
            n_cx += 1
    for a in range(size_y):
        if yo >> a & 1:
            opens_y[n_oy] = a
            n_oy += 1
        if yc >> a & 1:
            closed_y[n_cy] = a
            n_cy += 1
        if yamc >> a & 1:
            amc_y[n_ay] = a
            n_ay += 1
    cdef long count = 1
    cdef int i
    for i in range(nx):
        count *= ny
    cdef int nch = <int>((count + 63) // 64)
    # property bitsets, MAP_PROP_ORDER
    cdef uint64_t bits[11][49]
    cdef int p
    for p in range(11):
        for i in range(nch):
            bits[p][i] = 0
    cdef int assign[5]
    cdef int inv[5]
    cdef uint32_t presing[5]
    for i in range(nx):
        assign[i] = 0
    cdef long idx
    cdef int x, y, ok_cont, ok_opap, ok_amc, ok_irr
    cdef int ok_open, ok_amom, ok_closed, ok_amcm, ok_inv, injective
    cdef uint32_t image_full, pre, img, c, uu
    for idx in range(count):
        for y in range(ny):
            presing[y] = 0
        image_full = 0
        injective = 1
        for x in range(nx):
            y = assign[x]
            if presing[y]:
                injective = 0
            presing[y] |= <uint32_t>1 << x
            image_full |= <uint32_t>1 << y
        ok_cont = 1
        ok_opap = 1
        for i in range(n_oy):
            uu = opens_y[i]
            pre = 0
            for y in range(ny):
                if uu >> y & 1:
                    pre |= presing[y]
            if ok_cont and not (xo >> pre & 1):
                ok_cont = 0
            if ok_opap and not (xamo >> pre & 1):
                ok_opap = 0
            if not (ok_cont or ok_opap):
                break
        ok_amc = 1
        for i in range(n_cy):
            uu = closed_y[i]
            pre = 0
            for y in range(ny):
                if uu >> y & 1:
                    pre |= presing[y]
            if not (xamc >> pre & 1):
                ok_amc = 0
                break
        ok_irr = 1
        for i in range(n_ay):
            uu = amc_y[i]
            pre = 0
            for y in range(ny):
                if uu >> y & 1:
                    pre |= presing[y]
            if not (xamc >> pre & 1):
                ok_irr = 0
                break
        ok_open = 1
        ok_amom = 1
        for i in range(n_ox):
            uu = opens_x[i]
            img = 0
            for x in range(nx):
                if uu >> x & 1:
                    img |= <uint32_t>1 << assign[x]
            if ok_open and not (yo >> img & 1):
                ok_open = 0
            if ok_amom and not (yamo >> img & 1):
                ok_amom = 0
            if not (ok_open or ok_amom):
                break
        ok_closed = 1
        ok_amcm = 1
        for i in range(n_cx):
            uu = closed_x[i]
            img = 0
            for x in range(nx):
                if uu >> x & 1:
                    img |= <uint32_t>1 << assign[x]
            if ok_closed and not (yc >> img & 1):
                ok_closed = 0
            if ok_amcm and not (yamc >> img & 1):
                ok_amcm = 0
            if not (ok_closed or ok_amcm):
                break
        if ok_cont:
            bits[0][idx >> 6] |= <uint64_t>1 << (idx & 63)
        if ok_open:
            bits[1][idx >> 6] |= <uint64_t>1 << (idx & 63)
        if ok_closed:
            bits[2][idx >> 6] |= <uint64_t>1 << (idx & 63)
        if ok_amc:
            bits[5][idx >> 6] |= <uint64_t>1 << (idx & 63)
        if ok_irr:
            bits[6][idx >> 6] |= <uint64_t>1 << (idx & 63)
        if ok_amcm:
            bits[7][idx >> 6] |= <uint64_t>1 << (idx & 63)
        if ok_amom:
            bits[8][idx >> 6] |= <uint64_t>1 << (idx & 63)
        if ok_opap:
            bits[9][idx >> 6] |= <uint64_t>1 << (idx & 63)
        if image_full == full_y:
            bits[3][idx >> 6] |= <uint64_t>1 << (idx & 63)
            if injective:
                bits[4][idx >> 6] |= <uint64_t>1 << (idx & 63)
                for x in range(nx):
                    inv[assign[x]] = x
                ok_inv = 1
                for i in range(n_cx):
                    uu = closed_x[i]
                    pre = 0
                    for y in range(ny):
                        if uu >> inv[y] & 1:
                            pre |= <uint32_t>1 << y
                    if not (yamc >> pre & 1):
                        ok_inv = 0
                        break
                if ok_inv:
                    bits[10][idx >> 6] |= <uint64_t>1 << (idx & 63)
        for x in range(nx - 1, -1, -1):
            assign[x] += 1
            if assign[x] < ny:
                break
            assign[x] = 0
    return tuple(_chunks_to_int(bits[p], nch) for p in range(11))


cdef void _extend(int x, int n, uint32_t* minn, list out):
    cdef int size = 1 << n
    cdef uint64_t fm
    cdef int a, y, ok, cand
    cdef uint32_t my, cm
    if x == n:
        fm = 0
        for a in range(size):
            ok = 1
            for y in range(n):
                if a >> y & 1 and (minn[y] & <uint32_t>a) != minn[y]:
                    ok = 0
                    break
            if ok:
                fm |= <uint64_t>1 << a
        out.append(fm)
        return
    for cand in range(size):
        if not (cand >> x & 1):
            continue
        cm = <uint32_t>cand
        ok = 1
        for y in range(x):
            my = minn[y]
            if cand >> y & 1 and (my & cm) != my:
                ok = 0
                break
            if my >> x & 1 and (cm & my) != cm:
                ok = 0
                break
        if ok:
            minn[x] = cm
            _extend(x + 1, n, minn, out)


def enumerate_masks(int n):
    """See topolab._kernels.pure.enumerate_masks.  Requires n <= 5."""
    if n > 5:
        raise ValueError("enumerate_masks requires n <= 5")
    if n == 0:
        return [1]
    cdef uint32_t minn[5]
    out = []
    _extend(0, n, minn, out)
    out.sort()
    return out


def composition_failures(int nx, int ny, int nz, f_indices, g_indices,
                         object target_bits, int limit):
    """See topolab._kernels.pure.composition_failures."""
    cdef int nf = len(f_indices), ng = len(g_indices)
    if nf == 0 or ng == 0:
        return 0, []
    cdef long ncomp = 1
    cdef int i
    for i in range(nx):
        ncomp *= nz
    tb = target_bits.to_bytes((ncomp + 7) // 8, "little")
    cdef const char* tb0 = tb
    cdef const unsigned char* tbuf = <const unsigned char*>tb0
    cdef int* f_assign = <int*>malloc(max(nf * nx, 1) * sizeof(int))
    cdef int* g_assign = <int*>malloc(max(ng * ny, 1) * sizeof(int))
    cdef long weights[5]
    cdef long w = 1
    cdef int x
    for x in range(nx - 1, -1, -1):
        weights[x] = w
        w *= nz
    cdef long fi, gi, c, count = 0
    cdef int j, k
    fails = []
    try:
        for j in range(nf):
            fi = f_indices[j]
            for x in range(nx - 1, -1, -1):
                f_assign[j * nx + x] = fi % ny
                fi //= ny
        for k in range(ng):
            gi = g_indices[k]
            for x in range(ny - 1, -1, -1):
                g_assign[k * ny + x] = gi % nz
                gi //= nz
        for j in range(nf):
            for k in range(ng):
                c = 0
                for x in range(nx):
                    c += g_assign[k * ny + f_assign[j * nx + x]] * weights[x]
                if not (tbuf[c >> 3] >> (c & 7) & 1):
                    count += 1
                    if limit < 0 or len(fails) < limit:
                        fails.append((f_indices[j], g_indices[k]))
        return count, fails
    finally:
        free(f_assign)
        free(g_assign)
