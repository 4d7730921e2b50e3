"""Permutations of {0,1,2,3} as 4-tuples, and the census index convention.

The census signature format encodes a face gluing as the lexicographic rank
of its vertex permutation among all 24 permutations of {0,1,2,3}.
"""

from itertools import permutations

S4 = tuple(permutations(range(4)))
S4_INDEX = {p: i for i, p in enumerate(S4)}

IDENTITY = (0, 1, 2, 3)


def compose(p, q):
    """Return p after q, i.e. (p*q)(i) = p(q(i))."""
    return (p[q[0]], p[q[1]], p[q[2]], p[q[3]])


def inverse(p):
    inv = [0] * 4
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def sign(p):
    """+1 for even permutations, -1 for odd."""
    s = 1
    for i in range(4):
        for j in range(i + 1, 4):
            if p[i] > p[j]:
                s = -s
    return s
