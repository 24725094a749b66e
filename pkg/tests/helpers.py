"""Independent brute-force oracles used by the test suite.

Everything here deliberately avoids the package's stabiliser-chain code
paths: closure enumeration, elementwise filtering and coset enumeration
provide the ground truth that the fast implementations are checked against.
"""

from __future__ import annotations

from centra.perms import Permutation


def mulclose(gens, cap=None):
    """Closure of a generator set under multiplication (set of Permutation)."""
    if not gens:
        return set()
    idn = Permutation.identity(gens[0].degree)
    els = {idn}
    frontier = [idn]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = a * g
                if c not in els:
                    els.add(c)
                    nxt.append(c)
                    if cap is not None and len(els) > cap:
                        raise RuntimeError(f"closure exceeded cap {cap}")
        frontier = nxt
    return els


def brute_centraliser(elements, x):
    return {g for g in elements if g.commutes_with(x)}


def brute_centre(elements, gens):
    return {g for g in elements if all(g.commutes_with(s) for s in gens)}


def brute_conjugacy_classes(elements):
    """Partition a full element set into conjugacy classes."""
    left = set(elements)
    classes = []
    while left:
        x = next(iter(left))
        cls = {g.inverse() * x * g for g in elements}
        classes.append(cls)
        left -= cls
    return classes


def brute_subgroup_closure(elements_subset):
    return mulclose(list(elements_subset))


def brute_derived_subgroup(elements):
    elems = list(elements)
    comms = {a.commutator(b) for a in elems for b in elems}
    return mulclose(list(comms))


def brute_is_soluble(elements):
    current = set(elements)
    while True:
        nxt = brute_derived_subgroup(current)
        if len(nxt) == 1:
            return True
        if len(nxt) == len(current):
            return False
        current = nxt


def brute_element_order(x):
    idn = Permutation.identity(x.degree)
    n = 1
    y = x
    while y != idn:
        y = y * x
        n += 1
    return n


def parity(perm):
    """+1 for even permutations, -1 for odd ones."""
    sign = 1
    for cyc in perm.cycles():
        if len(cyc) % 2 == 0:
            sign = -sign
    return sign


# -- Todd-Coxeter coset enumeration -------------------------------------------
#
# HLT-style enumeration with coincidence processing.  Used to certify that
# each shipped presentation really defines a group of the expected order
# (enumerate over a cyclic subgroup and multiply index by the generator
# order).


class CosetTableOverflow(RuntimeError):
    pass


def todd_coxeter(ngens, relators, subgroup_words=(), max_cosets=600_000):
    """Index of the subgroup generated by `subgroup_words` in the presented
    group.

    Relators and subgroup words are sequences of signed 1-based generator
    indices.  Returns the index; raises CosetTableOverflow if the coset
    table grows past max_cosets.
    """
    ncols = 2 * ngens

    def col(letter):
        i = abs(letter) - 1
        return 2 * i if letter > 0 else 2 * i + 1

    def inv_col(c):
        return c ^ 1

    table = [[0] * ncols]  # 0 = undefined; cosets are 1-based indices
    table.append([0] * ncols)  # coset 1
    rep = [0, 1]  # union-find for coincidences
    live = [1]    # live coset count (dead rows stay as None)

    def find(a):
        while rep[a] != a:
            rep[a] = rep[rep[a]]
            a = rep[a]
        return a

    pending = []

    def merge(a, b):
        a, b = find(a), find(b)
        if a != b:
            if a > b:
                a, b = b, a
            rep[b] = a
            live[0] -= 1
            pending.append(b)

    def join(a, c, b):
        """Record a.c = b, pushing coincidences as needed."""
        a, b = find(a), find(b)
        ex = table[a][c]
        if ex:
            merge(find(ex), b)
        else:
            table[a][c] = b
        ex = table[b][inv_col(c)]
        if ex:
            merge(find(ex), a)
        else:
            table[b][inv_col(c)] = a

    def process_coincidences():
        while pending:
            b = pending.pop()
            a = find(b)
            row = table[b]
            table[b] = None
            for c in range(ncols):
                d = row[c]
                if d:
                    d = find(d)
                    # transfer the edge b.c = d onto a
                    join(a, c, d)

    def define(a, c):
        if live[0] >= max_cosets or len(table) > 40 * max_cosets:
            raise CosetTableOverflow(f"more than {max_cosets} live cosets")
        table.append([0] * ncols)
        rep.append(len(table) - 1)
        live[0] += 1
        b = len(table) - 1
        table[a][c] = b
        table[b][inv_col(c)] = a
        return b

    def scan_and_fill(a, word):
        while True:
            a = find(a)
            f, i = a, 0
            # forwards
            while i < len(word):
                nxt = table[f][col(word[i])]
                if not nxt:
                    break
                f = find(nxt)
                i += 1
            if i == len(word):
                merge(f, a)
                process_coincidences()
                return
            b, j = a, len(word)
            # backwards
            while j > i:
                prv = table[b][inv_col(col(word[j - 1]))]
                if not prv:
                    break
                b = find(prv)
                j -= 1
            if j == i:
                # forward and backward scans meet at the same position
                merge(f, b)
                process_coincidences()
                return
            if j == i + 1:
                join(f, col(word[i]), b)
                process_coincidences()
                return
            define(f, col(word[i]))

    for w in subgroup_words:
        scan_and_fill(1, list(w))
    a = 1
    while a < len(table):
        if table[a] is None or find(a) != a:
            a += 1
            continue
        for w in relators:
            scan_and_fill(a, list(w))
            if table[a] is None or find(a) != a:
                break
        else:
            # ensure every entry of this row is defined before moving on
            for c in range(ncols):
                aa = find(a)
                if table[aa][c] == 0:
                    define(aa, c)
                    # re-scan relators at this coset later; HLT handles it
        a += 1

    live = [i for i in range(1, len(table)) if table[i] is not None and find(i) == i]
    return len(live)


def presented_group_order(ngens, relators, gen_orders, max_cosets=600_000):
    """Order of the presented group, via enumeration over <first generator>.

    gen_orders[i] must be the true order of generator i+1 in the target
    group; the relators must force generator 1 to have order dividing
    gen_orders[0] (e.g. by an explicit power relator).
    """
    index = coset_enumerate(ngens, relators, subgroup_words=[(1,)],
                            max_cosets=max_cosets)
    return index * gen_orders[0]


def coset_enumerate(ngens, relators, subgroup_words=(), max_cosets=600_000):
    """Felsch-style coset enumeration; returns the subgroup index.

    Deduction-driven: every table definition is propagated through all
    relator rotations before the next definition is made, which keeps the
    table near-minimal even for presentations with heavy collapse.
    """
    ncols = 2 * ngens

    def col(letter):
        i = abs(letter) - 1
        return 2 * i if letter > 0 else 2 * i + 1

    def inv_col(c):
        return c ^ 1

    # rotations of every relator and its inverse, grouped by leading column
    by_col = [[] for _ in range(ncols)]
    seen_rot = set()
    for w in relators:
        for word in (tuple(w), tuple(-x for x in reversed(w))):
            for k in range(len(word)):
                rot = word[k:] + word[:k]
                if rot in seen_rot:
                    continue
                seen_rot.add(rot)
                by_col[col(rot[0])].append(tuple(col(x) for x in rot))

    table = [None, [0] * ncols]
    rep = [0, 1]
    live = [1]
    deductions = []
    pending = []

    def find(a):
        while rep[a] != a:
            rep[a] = rep[rep[a]]
            a = rep[a]
        return a

    def merge(a, b):
        a, b = find(a), find(b)
        if a != b:
            if a > b:
                a, b = b, a
            rep[b] = a
            live[0] -= 1
            pending.append(b)

    def set_edge(a, c, b):
        table[a][c] = b
        table[b][inv_col(c)] = a
        deductions.append((a, c))
        deductions.append((b, inv_col(c)))

    def join(a, c, b):
        a, b = find(a), find(b)
        ex = table[a][c]
        if ex and find(ex) != b:
            merge(find(ex), b)
            return
        if ex:
            return
        ex2 = table[b][inv_col(c)]
        if ex2 and find(ex2) != a:
            merge(find(ex2), a)
            return
        if ex2:
            # b already points back at a through c^-1; record forward edge
            table[a][c] = b
            deductions.append((a, c))
            return
        set_edge(a, c, b)

    def process():
        while pending or deductions:
            while pending:
                dead = pending.pop()
                a = find(dead)
                row = table[dead]
                table[dead] = None
                for c in range(ncols):
                    d = row[c]
                    if d:
                        join(a, c, find(d))
                        deductions.append((find(a), c))  # force a rescan
            if deductions:
                a, c = deductions.pop()
                a = find(a)
                if table[a] is None:
                    continue
                for rot in by_col[c]:
                    scan(a, rot)

    def scan(a, rot):
        # scan the rotation (a column word) from coset a without defining
        f, i = a, 0
        n = len(rot)
        while i < n:
            nxt = table[f][rot[i]]
            if not nxt:
                break
            f = find(nxt)
            i += 1
        if i == n:
            if f != a:
                merge(f, a)
            return
        b, j = a, n
        while j > i:
            prv = table[b][inv_col(rot[j - 1])]
            if not prv:
                break
            b = find(prv)
            j -= 1
        if j == i:
            merge(f, b)
        elif j == i + 1:
            join(f, rot[i], b)

    def define(a, c):
        if live[0] >= max_cosets:
            raise CosetTableOverflow(f"more than {max_cosets} live cosets")
        table.append([0] * ncols)
        rep.append(len(table) - 1)
        live[0] += 1
        set_edge(a, c, len(table) - 1)

    # subgroup generator words close at coset 1
    for w in subgroup_words:
        word_cols = [col(x) for x in w]
        while True:
            a, i = 1, 0
            while i < len(word_cols):
                a = find(a)
                nxt = table[a][word_cols[i]]
                if not nxt:
                    break
                a = find(nxt)
                i += 1
            if i == len(word_cols):
                merge(find(a), find(1))
                process()
                break
            define(find(a), word_cols[i])
            process()

    scan_ptr = 1
    while True:
        process()
        # find first live coset with an undefined entry
        while scan_ptr < len(table) and (table[scan_ptr] is None
                                         or find(scan_ptr) != scan_ptr):
            scan_ptr += 1
        a = scan_ptr
        hole = None
        while a < len(table):
            if table[a] is not None and find(a) == a:
                row = table[a]
                for c in range(ncols):
                    if not row[c]:
                        hole = (a, c)
                        break
                if hole:
                    break
            a += 1
        if hole is None:
            break
        define(*hole)
    return live[0]
