import math
import os

import pytest

from centra import catalogue
from centra.catalogue import (alternating, build, build_from_file,
                              canonical_name, cyclic, deleted_perm_embedding,
                              dihedral, direct_product, matrix_image_order,
                              psl2, psl3, read_generator_file, resolve,
                              shipped_presentation, symmetric,
                              write_generator_file)
from centra.ffield import FieldSpec
from centra.perms import Permutation
from centra.permgroup import PermGroup

from helpers import presented_group_order


def test_alternating_symmetric_orders():
    for n in range(3, 10):
        assert alternating(n).order() == math.factorial(n) // 2
    for n in range(2, 8):
        assert symmetric(n).order() == math.factorial(n)


def test_psl2_orders():
    for q in (4, 5, 7, 8, 9, 11, 13):
        G = psl2(q)
        assert G.degree == q + 1
        assert G.order() == q * (q * q - 1) // math.gcd(2, q - 1)


def test_psl2_9_has_a6_order():
    assert psl2(9).order() == 360 == alternating(6).order()


def test_psl3_orders():
    for q in (2, 3, 4):
        G = psl3(q)
        assert G.degree == q * q + q + 1
        assert G.order() == q ** 3 * (q ** 3 - 1) * (q * q - 1) // math.gcd(3, q - 1)


def test_file_backed_orders():
    expected = {"M11": 7920, "M12": 95040, "M22": 443520, "U3(3)": 6048,
                "PSp4(3)": 25920, "L3(4)": 20160, "Sz(8)": 29120}
    for name, order in expected.items():
        assert build(name).order() == order


def test_small_constructors():
    assert cyclic(6).order() == 6
    assert dihedral(4).order() == 8
    assert direct_product(cyclic(2), cyclic(3)).order() == 6
    assert build("SL2(3)").order() == 24


def test_canonical_names():
    assert canonical_name("a5") == "A5"
    assert canonical_name("Alt(7)") == "A7"
    assert canonical_name("Sym(4)") == "S4"
    assert canonical_name("PSL(2,7)") == "L2(7)"
    assert canonical_name("L2(7)") == "L2(7)"
    assert canonical_name("l_3(4)") == "L3(4)"
    assert canonical_name("m_22") == "M22"
    assert canonical_name("sz(8)") == "Sz(8)"
    assert canonical_name("PSp4(3)") == "PSp4(3)"
    assert canonical_name("u3(3)") == "U3(3)"
    with pytest.raises(KeyError):
        resolve("E8(2)")


def test_generator_file_roundtrip(tmp_path):
    G = alternating(5)
    path = tmp_path / "a5.gens"
    write_generator_file(path, 5, list(G.generators), order=60,
                         comment="test file")
    degree, order, gens = read_generator_file(path)
    assert degree == 5 and order == 60
    assert PermGroup(gens).order() == 60
    assert build_from_file(str(path)).order() == 60


def test_generator_file_rejects_bad_order(tmp_path):
    path = tmp_path / "bad.gens"
    path.write_text("degree 3\norder 5\n2 1 3\n")
    with pytest.raises(ValueError):
        build_from_file(str(path))


def test_data_dir_override(tmp_path, monkeypatch):
    monkeypatch.setenv("CENTRA_DATA", str(tmp_path))
    from centra.catalogue import data_path
    assert data_path("x.gens") == str(tmp_path / "x.gens")


def test_shipped_presentations_verify():
    for name in catalogue.PRESENTATION_NAMES:
        pres = shipped_presentation(name)
        pres.verify()  # relators evaluate to the identity
        G = pres.group()
        assert G.order() == build(name).order()


def test_unknown_presentation():
    with pytest.raises(KeyError):
        shipped_presentation("M11")


@pytest.mark.parametrize("name,order", [
    ("A5", 60), ("A6", 360), ("A7", 2520),
    ("L2(7)", 168), ("L2(8)", 504), ("L3(3)", 5616),
])
def test_presentations_are_defining(name, order):
    # coset enumeration over <first generator> certifies the presented order
    pres = shipped_presentation(name)
    gen_orders = [g.order() for g in pres.generators]
    got = presented_group_order(pres.generator_count, list(pres.relators),
                                gen_orders)
    assert got == order


def test_deleted_perm_embedding_gf2():
    emb = deleted_perm_embedding(4, 2)  # A5 -> GL_4(2)
    assert emb.dimension == 4 and not emb.quotiented
    F = emb.field
    assert matrix_image_order(F, emb.matrices) == 60


def test_deleted_perm_embedding_gf3():
    emb = deleted_perm_embedding(4, 3)
    assert emb.dimension == 4
    assert matrix_image_order(emb.field, emb.matrices) == 60


def test_deleted_perm_embedding_relators_map_to_identity():
    from centra.catalogue import fmat_identity, fmat_mul
    emb = deleted_perm_embedding(4, 2)
    pres = emb.presentation
    assert pres is not None
    F = emb.field
    idm = fmat_identity(F, emb.dimension)
    inv_cache = {}
    for rel in pres.relators:
        m = idm
        for idx in rel:
            mat = emb.matrices[abs(idx) - 1]
            if idx < 0:
                # matrices have order dividing the generator order
                k = emb.generators[abs(idx) - 1].order()
                minv = idm
                for _ in range(k - 1):
                    minv = fmat_mul(F, minv, mat)
                mat = minv
            m = fmat_mul(F, m, mat)
        assert m == idm


def test_deleted_perm_embedding_quotient_dimension():
    # A6 over GF(2): characteristic divides 6, so the dimension drops to 4
    emb = deleted_perm_embedding(5, 2)
    assert emb.dimension == 4 and emb.quotiented
    assert matrix_image_order(emb.field, emb.matrices) == 360


def test_deleted_perm_embedding_requires_n_at_least_4():
    with pytest.raises(ValueError):
        deleted_perm_embedding(3, 2)


def test_embedding_image_is_perfect():
    from centra.catalogue import projective_action
    from centra.structure import is_perfect
    emb = deleted_perm_embedding(4, 3)
    # act on nonzero vectors to get a faithful permutation image
    F = emb.field
    vecs = [tuple((code // F.order ** i) % F.order for i in reversed(range(4)))
            for code in range(1, F.order ** 4)]
    index = {v: i for i, v in enumerate(vecs)}
    from centra.catalogue import fvec_mat
    perms = [Permutation([index[fvec_mat(F, v, A)] for v in vecs])
             for A in emb.matrices]
    assert is_perfect(PermGroup(perms))
