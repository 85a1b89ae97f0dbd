"""Permutations as tuples: perm[i] is the image of position i (0-based).

Products compose like functions, (g*h)(i) = g(h(i)), so right-module
actions written m.(g*h) = (m.g).h hold with this product.
"""

from itertools import permutations as _permutations


def identity(l):
    return tuple(range(l))


def compose(g, h):
    """g*h, apply h first."""
    return tuple(g[h[i]] for i in range(len(g)))


def inverse(g):
    inv = [0] * len(g)
    for i, v in enumerate(g):
        inv[v] = i
    return tuple(inv)


def transposition(l, i, j):
    """Swap of 0-based positions i and j."""
    im = list(range(l))
    im[i], im[j] = im[j], im[i]
    return tuple(im)


def adjacent(l, i):
    return transposition(l, i, i + 1)


def all_perms(l):
    return [tuple(p) for p in _permutations(range(l))]


def first_descent(g):
    """Smallest i with g(i) > g(i+1), or None for the identity."""
    for i in range(len(g) - 1):
        if g[i] > g[i + 1]:
            return i
    return None


def coxeter_word(g):
    """Adjacent-transposition indices w with g = s[w[0]] * s[w[1]] * ...."""
    g = tuple(g)
    l = len(g)
    word = []
    while True:
        i = first_descent(g)
        if i is None:
            return word
        word.insert(0, i)
        g = compose(g, adjacent(l, i))


def act_on_index(g, index):
    """Left action on a tensor index: letter at position j moves to g(j)."""
    gi = inverse(g)
    return tuple(index[gi[i]] for i in range(len(index)))


def sorting_permutation(index):
    """Permutation g with act_on_index(g, index) sorted non-decreasing (stable)."""
    order = sorted(range(len(index)), key=lambda i: (index[i], i))
    return inverse(tuple(order))


def num_odd_inversions(g, parities):
    """Count pairs a<b with g(a)>g(b) and both positions odd."""
    count = 0
    l = len(g)
    for a in range(l):
        if not parities[a]:
            continue
        for b in range(a + 1, l):
            if parities[b] and g[a] > g[b]:
                count += 1
    return count
