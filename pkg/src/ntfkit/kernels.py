"""Hot loops over exponent matrices (one row per monomial).

Every kernel has a numba version and a vectorised numpy version with the
same contract; the module-level names bind to one of them depending on
``ntfkit._accel.USE_NUMBA``.
"""
import numpy as np

from ._accel import USE_NUMBA, njit
from .errors import ExponentOverflowError

EXPONENT_LIMIT = 2**31 - 1

# ---------------------------------------------------------------------------
# minimal generators


@njit(cache=True)
def _minimal_mask_nb(a):
    # rows of ``a`` must be sorted by total degree (ascending)
    m, n = a.shape
    keep = np.zeros(m, dtype=np.bool_)
    kept = np.empty(m, dtype=np.int64)
    nkept = 0
    for i in range(m):
        redundant = False
        for t in range(nkept):
            j = kept[t]
            divides = True
            for c in range(n):
                if a[j, c] > a[i, c]:
                    divides = False
                    break
            if divides:
                redundant = True
                break
        if not redundant:
            keep[i] = True
            kept[nkept] = i
            nkept += 1
    return keep


def _minimal_mask_np(a, chunk=512):
    m = a.shape[0]
    keep = np.ones(m, dtype=bool)
    idx = np.arange(m)
    for start in range(0, m, chunk):
        block = a[start:start + chunk]
        # div[i, j]: row j divides row start+i
        div = (a[None, :, :] <= block[:, None, :]).all(axis=2)
        rows = idx[start:start + chunk]
        equal = (a[None, :, :] == block[:, None, :]).all(axis=2)
        # a strictly smaller divisor, or an identical row seen earlier
        beaten = div & (~equal | (idx[None, :] < rows[:, None]))
        keep[start:start + chunk] = ~beaten.any(axis=1)
    return keep


def canonical_sort(a):
    """Sort rows ascending, comparing the last column first."""
    if a.shape[0] <= 1:
        return a
    return a[np.lexsort(a.T)]


def minimal_rows(a):
    """Minimal rows of ``a`` under componentwise <=, deduplicated, canonically sorted."""
    # duplicates: the earlier copy divides the later one, so the kernels drop it
    a = np.asarray(a, dtype=np.int64)
    if a.shape[0] <= 1:
        return a.copy()
    a = a[np.argsort(a.sum(axis=1), kind="stable")]
    keep = _minimal_mask(a)
    return canonical_sort(a[keep])


# ---------------------------------------------------------------------------
# membership


@njit(cache=True)
def _any_divides_nb(gens, m):
    g, n = gens.shape
    for i in range(g):
        ok = True
        for c in range(n):
            if gens[i, c] > m[c]:
                ok = False
                break
        if ok:
            return True
    return False


def _any_divides_np(gens, m):
    if gens.shape[0] == 0:
        return False
    return bool((gens <= m[None, :]).all(axis=1).any())


# ---------------------------------------------------------------------------
# prime-valued colons over a box of candidate witnesses


@njit(cache=True)
def _colon_prime_scan_nb(gens, bounds):
    """For every v with 0 <= v <= bounds, test whether (I : v) is prime.

    Returns (flat indices of witnesses, bitmask of the prime) in enumeration
    order; the first variable varies fastest.
    """
    g, n = gens.shape
    total = 1
    for c in range(n):
        total *= bounds[c] + 1
    out_idx = []
    out_mask = []
    v = np.zeros(n, dtype=np.int64)
    red = np.zeros((g, n), dtype=np.int64)
    for flat in range(total):
        r = flat
        for c in range(n):
            v[c] = r % (bounds[c] + 1)
            r //= bounds[c] + 1
        member = False
        mask = np.int64(0)
        for i in range(g):
            deg = 0
            last = -1
            for c in range(n):
                d = gens[i, c] - v[c]
                if d < 0:
                    d = 0
                red[i, c] = d
                if d > 0:
                    deg += d
                    last = c
            if deg == 0:
                member = True
                break
            if deg == 1:
                mask |= np.int64(1) << last
        if member or mask == 0:
            continue
        prime = True
        for i in range(g):
            hit = False
            for c in range(n):
                if red[i, c] > 0 and (mask >> c) & 1:
                    hit = True
                    break
            if not hit:
                prime = False
                break
        if prime:
            out_idx.append(flat)
            out_mask.append(mask)
    res_idx = np.empty(len(out_idx), dtype=np.int64)
    res_mask = np.empty(len(out_mask), dtype=np.int64)
    for t in range(len(out_idx)):
        res_idx[t] = out_idx[t]
        res_mask[t] = out_mask[t]
    return res_idx, res_mask


def _colon_prime_scan_np(gens, bounds, chunk=4096):
    n = gens.shape[1]
    radix = bounds + 1
    total = int(np.prod(radix))
    weights = (np.int64(1) << np.arange(n, dtype=np.int64))
    idx_parts, mask_parts = [], []
    for start in range(0, total, chunk):
        flat = np.arange(start, min(total, start + chunk), dtype=np.int64)
        v = np.empty((flat.size, n), dtype=np.int64)
        r = flat.copy()
        for c in range(n):
            v[:, c] = r % radix[c]
            r //= radix[c]
        red = np.maximum(gens[None, :, :] - v[:, None, :], 0)
        deg = red.sum(axis=2)
        outside = (deg > 0).all(axis=1)
        linear = (deg == 1)[:, :, None] & (red > 0)
        pvars = linear.any(axis=1)
        mask = (pvars * weights[None, :]).sum(axis=1)
        hit = ((red > 0) & pvars[:, None, :]).any(axis=2).all(axis=1)
        ok = outside & (mask != 0) & hit
        idx_parts.append(flat[ok])
        mask_parts.append(mask[ok])
    if not idx_parts:
        return np.empty(0, np.int64), np.empty(0, np.int64)
    return np.concatenate(idx_parts), np.concatenate(mask_parts)


def decode_box_index(flat, bounds):
    out = []
    for b in bounds:
        out.append(int(flat % (b + 1)))
        flat //= b + 1
    return tuple(out)


# ---------------------------------------------------------------------------
# pairwise combinations


def pairwise_sum(a, b):
    s = (a[:, None, :] + b[None, :, :]).reshape(-1, a.shape[1])
    if s.size and s.max() > EXPONENT_LIMIT:
        raise ExponentOverflowError("exponent exceeds %d" % EXPONENT_LIMIT)
    return s


def pairwise_max(a, b):
    return np.maximum(a[:, None, :], b[None, :, :]).reshape(-1, a.shape[1])


if USE_NUMBA:
    _minimal_mask = _minimal_mask_nb
    any_divides = _any_divides_nb
    colon_prime_scan = _colon_prime_scan_nb
else:
    _minimal_mask = _minimal_mask_np
    any_divides = _any_divides_np
    colon_prime_scan = _colon_prime_scan_np
