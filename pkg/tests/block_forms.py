"""Explicit block constructions used to cross-check sigma."""

from __future__ import annotations

import numpy as np

from grcodes.field import GF
from grcodes.groupring import GroupRingElement, block_circ, circ, revcirc


def symbolic(G):
    """Coefficient of g_i is i + 1, over a prime field big enough to keep labels apart."""
    F = GF(next(p for p in (11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47) if p > G.n))
    return GroupRingElement(F, G, np.arange(1, G.n + 1))


def dihedral_form1(c):
    n = len(c) // 2
    A, B = circ(c[:n]), revcirc(c[n:])
    return np.block([[A, B], [B, A]])


def dihedral_form2(c):
    n = len(c) // 2
    A, D = circ(c[:n]), circ(c[n:])
    return np.block([[A, D], [D.T, A.T]])


def cyclic_product(c, outer, inner):
    return block_circ([circ(c[j * inner : (j + 1) * inner]) for j in range(outer)])


def cyclic_dihedral(c, outer, form):
    s = len(c) // outer
    inner = dihedral_form1 if form == 1 else dihedral_form2
    return block_circ([inner(c[j * s : (j + 1) * s]) for j in range(outer)])
