import pytest

from centra.perms import Permutation
from centra.permgroup import CapExceeded, PermGroup
from centra.structure import (centraliser, centre, class_centraliser,
                              conjugacy_classes, derived_series,
                              derived_subgroup, is_p_central, is_perfect,
                              is_pi_element, is_soluble, normal_closure,
                              quotient_action)

from helpers import (brute_centraliser, brute_centre,
                     brute_conjugacy_classes, brute_derived_subgroup,
                     brute_is_soluble, mulclose)


def P(s, n=None):
    return Permutation.parse(s, n)


def A5():
    return PermGroup([P("(1,2,3,4,5)"), P("(1,2,3)", 5)])


def S4():
    return PermGroup([P("(1,2)", 4), P("(1,2,3,4)")])


def S3():
    return PermGroup([P("(1,2)", 3), P("(1,2,3)")])


def SL23():
    # SL_2(3) acting on the 8 nonzero vectors of GF(3)^2; vectors are
    # numbered 1..8 in lexicographic order (0,1),(0,2),(1,0),...,(2,2)
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    idx = {v: i for i, v in enumerate(vecs)}

    def act(mat):
        img = []
        for (a, b) in vecs:
            w = ((a * mat[0][0] + b * mat[1][0]) % 3,
                 (a * mat[0][1] + b * mat[1][1]) % 3)
            img.append(idx[w])
        return Permutation(img)

    G = PermGroup([act(((1, 1), (0, 1))), act(((1, 0), (1, 1)))])
    assert G.order() == 24
    return G


def test_centraliser_of_5_cycle_in_a5():
    G = A5()
    x = P("(1,2,3,4,5)")
    C = centraliser(G, x)
    assert C.order() == 5
    els = mulclose(list(G.generators))
    assert {g for g in C.elements()} == brute_centraliser(els, x)


def test_centraliser_of_identity_is_whole_group():
    G = S4()
    C = centraliser(G, Permutation.identity(4))
    assert C.order() == 24


def test_centraliser_orbit_strategy_matches_brute():
    G = A5()
    els = mulclose(list(G.generators))
    for s in ["(1,2,3,4,5)", "(1,2,3)", "(1,2)(3,4)"]:
        x = P(s, 5)
        brute = brute_centraliser(els, x)
        # cap below |G| but above the class sizes: conjugation-orbit path
        C = centraliser(G, x, cap=30)
        assert C.order() == len(brute)
        assert {g for g in C.elements()} == brute
        assert x in C
        assert all(g.commutes_with(x) for g in C.generators)


def test_centraliser_requires_membership():
    with pytest.raises(ValueError):
        centraliser(A5(), P("(1,2)", 5))


def test_centre_simple_and_abelian():
    assert centre(A5()).order() == 1
    C6 = PermGroup([P("(1,2,3,4,5,6)")])
    assert centre(C6).order() == 6
    G = SL23()
    Z = centre(G)
    assert Z.order() == 2
    els = mulclose(list(G.generators))
    assert {g for g in Z.elements()} == brute_centre(els, G.generators)


def test_derived_series_s4():
    rep = derived_series(S4())
    assert rep.soluble
    assert rep.orders == (24, 12, 4, 1)
    assert rep.derived_length == 3


def test_derived_series_trivial_and_a5():
    T = PermGroup.trivial(3)
    rep = derived_series(T)
    assert rep.soluble and rep.derived_length == 0 and rep.orders == (1,)
    rep5 = derived_series(A5())
    assert not rep5.soluble
    assert rep5.orders == (60, 60)
    assert is_perfect(A5())


def test_solubility_matches_brute_oracle():
    groups = {
        "S4": S4(), "S3": S3(), "A5": A5(), "SL23": SL23(),
        "D8": PermGroup([P("(1,2,3,4)"), P("(1,3)", 4)]),
    }
    for name, G in groups.items():
        els = mulclose(list(G.generators))
        assert is_soluble(G) == brute_is_soluble(els), name
        dsub = derived_subgroup(G)
        assert {g for g in dsub.elements()} == brute_derived_subgroup(els), name


def test_all_groups_of_order_below_60_soluble_spotchecks():
    # classical fact spot-checked on a few non-abelian candidates
    D10 = PermGroup([P("(1,2,3,4,5)"), P("(2,5)(3,4)")])
    F20 = PermGroup([P("(1,2,3,4,5)"), P("(2,3,5,4)")])
    S4g = S4()
    for G in (D10, F20, S4g, SL23()):
        assert G.order() < 60 and is_soluble(G)


def test_conjugacy_classes_a5():
    G = A5()
    classes = conjugacy_classes(G)
    assert sorted(c.size for c in classes) == [1, 12, 12, 15, 20]
    assert sum(c.size for c in classes) == 60
    idcls = [c for c in classes if c.rep.is_identity()]
    assert len(idcls) == 1 and idcls[0].size == 1
    brute = brute_conjugacy_classes(mulclose(list(G.generators)))
    assert sorted(len(c) for c in brute) == [1, 12, 12, 15, 20]
    # orbit-stabiliser per class
    for c in classes:
        C = class_centraliser(G, c)
        assert c.size * C.order() == 60
        assert all(g.commutes_with(c.rep) for g in C.generators)


def test_conjugacy_classes_s3_and_trivial():
    assert sorted(c.size for c in conjugacy_classes(S3())) == [1, 2, 3]
    T = PermGroup.trivial(2)
    assert [c.size for c in conjugacy_classes(T)] == [1]


def test_conjugacy_classes_cap():
    with pytest.raises(CapExceeded):
        conjugacy_classes(A5(), cap=10)


def test_class_centraliser_order_constant_on_class():
    G = S4()
    for cls in conjugacy_classes(G):
        C0 = centraliser(G, cls.rep)
        for seed in range(3):
            g = G.random_element(seed)
            Cg = centraliser(G, cls.rep.conjugated_by(g))
            assert Cg.order() == C0.order()


def test_normal_closure():
    G = S4()
    ncl = normal_closure(G, [P("(1,2)(3,4)", 4)])
    assert ncl.order() == 4  # the Klein four-group is normal in S_4
    ncl2 = normal_closure(G, [P("(1,2)", 4)])
    assert ncl2.order() == 24


def test_is_p_central():
    Q8 = quaternion()
    assert is_p_central(Q8, 2)  # unique involution is central
    D8 = PermGroup([P("(1,2,3,4)"), P("(1,3)", 4)])
    assert not is_p_central(D8, 2)  # reflections are non-central
    C9 = PermGroup([P("(1,2,3,4,5,6,7,8,9)")])
    assert is_p_central(C9, 3)  # abelian
    with pytest.raises(ValueError):
        is_p_central(S3(), 2)  # not a p-group


def quaternion():
    # Q8 as <i, j> inside SL_2(3) acting on the 8 nonzero vectors
    G = SL23()
    els = list(G.elements())
    order4 = [g for g in els if g.order() == 4]
    i = order4[0]
    j = next(g for g in order4 if g != i and g != i ** 3
             and not g.commutes_with(i))
    Q = PermGroup([i, j])
    assert Q.order() == 8
    return Q


def test_is_pi_element():
    idn = Permutation.identity(6)
    assert is_pi_element(idn, {13})
    x = P("(1,2)(3,4,5)", 6)  # order 6
    assert is_pi_element(x, {2, 3})
    assert not is_pi_element(x, {2})
    assert not is_pi_element(x, {3})
    assert is_pi_element(x, None)  # all primes


def test_quotient_action():
    # S_4 / V_4 is S_3
    G = S4()
    V = PermGroup([P("(1,2)(3,4)", 4), P("(1,3)(2,4)", 4)], parent=G)
    Q = quotient_action(G, V)
    assert Q.group.order() == 6
    assert Q.group.degree == 6
    # projection is a homomorphism
    for s1 in range(3):
        a = G.random_element(s1)
        b = G.random_element(s1 + 50)
        assert Q.project(a * b) == Q.project(a) * Q.project(b)
    # kernel is V
    for v in V.elements():
        assert Q.project(v).is_identity()
    with pytest.raises(ValueError):
        quotient_action(G, PermGroup([P("(1,2)", 4)], parent=G))  # not normal


def test_quotient_preimage_rep():
    G = S4()
    V = PermGroup([P("(1,2)(3,4)", 4), P("(1,3)(2,4)", 4)], parent=G)
    Q = quotient_action(G, V)
    for seed in range(4):
        q = Q.group.random_element(seed)
        r = Q.preimage_rep(q)
        assert Q.project(r) == q
