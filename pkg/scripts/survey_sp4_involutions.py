#!/usr/bin/env python3
"""Survey of Sp(4,2): brute-force enumeration and normal-form statistics.

Enumerates the 720 binary symplectic 4x4 matrices, filters the
involutions, runs the single-involution normal form on each, and
tabulates the rank of the resulting symmetric E block.
"""

from collections import Counter

import numpy as np

from semiclifford import gf2
from semiclifford.normal_form import involution_normal_form


def enumerate_sp4():
    bits = np.arange(1 << 16, dtype=np.uint32)
    mats = ((bits[:, None] >> np.arange(16)) & 1).astype(np.uint8).reshape(-1, 4, 4)
    p = gf2.p_mat(2)
    prods = np.einsum("nji,jk,nkl->nil", mats, p, mats) & 1
    return mats[(prods == p).all(axis=(1, 2))]


def main():
    group = enumerate_sp4()
    print(f"|Sp(4,2)| = {group.shape[0]}")
    eye = np.eye(4, dtype=np.uint8)
    sq = np.einsum("nij,njk->nik", group, group) & 1
    invs = group[(sq == eye).all(axis=(1, 2))]
    print(f"involutions: {invs.shape[0]}")
    ranks = Counter()
    for c in invs:
        res = involution_normal_form(c)
        e = res.normalized[:2, 2:]
        ranks[gf2.rank(e)] += 1
    for r in sorted(ranks):
        print(f"  normal-form E rank {r}: {ranks[r]} matrices")


if __name__ == "__main__":
    main()
