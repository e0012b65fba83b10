import pytest

import gcat


def test_torus_basics():
    t = gcat.corpus.torus()
    assert t.vertex_count == 9
    assert t.f_vector() == [9, 27, 18]
    assert t.euler_characteristic() == 0
    assert gcat.abelianization(*gcat.pi1(t)) == (2, [])


def test_subdivision_keeps_euler_characteristic():
    g = gcat.corpus.genus2()
    assert gcat.subdivide(g).euler_characteristic() == -2
    assert gcat.subdivide(g, 2).vertex_count > gcat.subdivide(g).vertex_count


def test_json_round_trip():
    k = gcat.corpus.klein_bottle()
    assert gcat.SimplicialComplex.from_json(k.to_json()) == k


def test_malformed_complex():
    with pytest.raises(gcat.MalformedInput):
        gcat.SimplicialComplex([[0, 0]])


def test_coset_index_and_classes():
    # Klein four group
    assert gcat.coset_index(2, [[1, 1], [2, 2], [1, 2, 1, 2]]) == 4
    assert gcat.coset_index(2, [], max_cosets=200) is None
    assert gcat.classify_group(1, [], "abelian")["answer"] == "yes"
    assert gcat.classify_group(2, [], "amenable")["answer"] == "no"
    assert gcat.GroupClass("poly").implies("subexp<1/3")
    assert not gcat.GroupClass("amenable").implies("abelian")


def test_cat_bounds():
    t = gcat.corpus.torus()
    r = gcat.cat_upper(t, "amenable")
    assert r["validation"] == "yes"
    assert r["bound"] == 1
    assert gcat.cat_upper(t, "trivial", "stars")["bound"] == 3
    assert gcat.cat_lower(t, "trivial") >= 2
    c = gcat.stars_cover(t)
    assert gcat.validate_cover(c, "trivial")["answer"] == "yes"
    mult, _ = gcat.nerve(c)
    assert mult == 3


def test_fca_of_projection():
    _, first, _ = gcat.product(gcat.corpus.torus(), gcat.corpus.circle())
    r = gcat.check_fca(first, "amenable", 2)
    assert r["answer"] == "yes"
    assert gcat.check_fca(first, "amenable", 1)["answer"] == "no"


def test_rate():
    assert gcat.finite_cover_rate(549, 500, 2) == (183, 500)


def test_certify_torus():
    s = gcat.FactStore()
    circle = gcat.corpus.circle()
    s.add_cover("circle", gcat.VertexCover(circle, [[0, 1, 2]]), "amenable")
    s.assert_axiom("bundle(torus, circle, circle)", "product")
    s.assert_axiom("manifold(torus, 2)", "closed surface")
    s.add_computed("lscat_upper(circle, 2)", "two arcs")
    rep = s.saturate()
    assert rep["complete"] and not rep["contradictions"]
    q = s.query("simvol_zero(torus)")
    assert q["found"]
    assert q["trace"].startswith("depth ")


def test_cli(tmp_path):
    code, out, err = gcat.run(["corpus", "--out", str(tmp_path)])
    assert code == 0, err
    code, out, _ = gcat.run(["chi", str(tmp_path / "torus.json")])
    assert code == 0 and out.strip().endswith("0")
    code, out, _ = gcat.run(["certify", "--goal", "simvol_zero(torus)", "--facts", str(tmp_path / "torus.facts")])
    assert code == 0
    assert gcat.run(["nope"])[0] == 3
