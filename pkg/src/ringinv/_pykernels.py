"""Pure numpy implementations of the exhaustive-search kernels.

Same signatures and results as the compiled ``_ckernels`` module; selected by
:mod:`ringinv.kernels` when the extension is not built.
"""

import numpy as np


def mat_tables(k, p):
    """Addition and multiplication tables of ``M_k(GF(p))`` under index encoding.

    Index ``i`` encodes the row-major entries as base-``p`` digits, most
    significant first.
    """
    kk = k * k
    n = p ** kk
    idx = np.arange(n, dtype=np.int64)
    weights = p ** np.arange(kk - 1, -1, -1, dtype=np.int64)
    digits = (idx[:, None] // weights[None, :]) % p
    mats = digits.reshape(n, k, k)
    add_digits = (digits[:, None, :] + digits[None, :, :]) % p
    add = (add_digits * weights).sum(axis=2)
    prod = np.einsum("aij,bjk->abik", mats, mats) % p
    mul = (prod.reshape(n, n, kk) * weights).sum(axis=2)
    return add.astype(np.int32), mul.astype(np.int32)


def along_table(mul, rid, lid):
    """For every ``(a, d)``: the least ``b`` with ``bab = b``, ``bR = dR``, ``Rb = Rd``.

    Returns ``(inv, count)``; ``inv[a, d] == -1`` when no witness exists and
    ``count[a, d]`` is the number of witnesses found by the exhaustive scan.
    """
    mul = np.asarray(mul)
    rid = np.asarray(rid)
    lid = np.asarray(lid)
    n = mul.shape[0]
    b = np.arange(n)
    # outer[b, a] <=> b a b == b
    outer = mul[mul, b[:, None]] == b[:, None]
    inv = np.full((n, n), -1, dtype=np.int32)
    count = np.zeros((n, n), dtype=np.int32)
    for d in range(n):
        same = (rid == rid[d]) & (lid == lid[d])
        valid = outer & same[:, None]
        count[:, d] = valid.sum(axis=0)
        hit = valid.any(axis=0)
        inv[hit, d] = valid.argmax(axis=0)[hit]
    return inv, count


def along_search(mul, rid, lid, a, d):
    mul = np.asarray(mul)
    rid = np.asarray(rid)
    lid = np.asarray(lid)
    b = np.arange(mul.shape[0])
    ok = (rid == rid[d]) & (lid == lid[d]) & (mul[mul[b, a], b] == b)
    return [int(x) for x in np.flatnonzero(ok)]


def group_table(mul):
    """For every ``a``: the least ``b`` with ``aba = a``, ``bab = b``, ``ab = ba``."""
    mul = np.asarray(mul)
    n = mul.shape[0]
    a = np.arange(n)[:, None]
    b = np.arange(n)[None, :]
    ab = mul
    ba = mul.T
    ok = (mul[ab, a] == a) & (mul[ba, b] == b) & (ab == ba)
    count = ok.sum(axis=1).astype(np.int32)
    inv = np.where(ok.any(axis=1), ok.argmax(axis=1), -1).astype(np.int32)
    return inv, count
