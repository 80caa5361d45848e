import pytest

from quiverhom import (Idempotent, QQ, Quiver, build_path_algebra,
                       classify_idempotent, corner, direct_sum, gorenstein,
                       in_kernel, injective, is_isomorphic, is_short_exact,
                       kernel_of, left_corner_module, match_structure,
                       parse_relation, proj_dim, projective, projective_cover,
                       regular, schur_apply, schur_apply_map, simple,
                       theorem21_report, theorem41_report, zero_module)
from quiverhom import fixtures


def test_schur_apply_examples(field):
    a = fixtures.fix_A(field)
    e1 = Idempotent.from_vertex_names(a, ["1"])
    assert schur_apply(a, e1, simple(a, 1)).is_zero()
    # e1.P(2) is spanned by the paths from 2 ending at 1, namely g and a*g
    assert schur_apply(a, e1, projective(a, 1)).dim == 2
    full = Idempotent.from_slots(a, [0, 1])
    m = injective(a, 1)
    img = schur_apply(a, full, m)
    assert img.dim == m.dim and img.peirce() == m.peirce()


def test_in_kernel_examples(field):
    a = fixtures.fix_A(field)
    e1 = Idempotent.from_vertex_names(a, ["1"])
    assert in_kernel(a, e1, simple(a, 1))
    assert not in_kernel(a, e1, projective(a, 0))
    assert in_kernel(a, e1, zero_module(a))


def test_kernel_membership_iff_image_zero(field):
    a = fixtures.fix_A(field)
    e1 = Idempotent.from_vertex_names(a, ["1"])
    for m in [simple(a, 0), simple(a, 1), projective(a, 0), injective(a, 1)]:
        assert in_kernel(a, e1, m) == schur_apply(a, e1, m).is_zero()


def test_schur_functor_is_exact(field):
    a = fixtures.fix_A(field)
    e1 = Idempotent.from_vertex_names(a, ["1"])
    cd = corner(a, e1)
    s2 = simple(a, 1)
    cover = projective_cover(s2)
    k, incl = kernel_of(cover)
    assert is_short_exact(incl, cover)
    f1 = schur_apply_map(a, e1, incl, cd)
    f2 = schur_apply_map(a, e1, cover, cd)
    assert f1.verify() and f2.verify()
    assert is_short_exact(f1, f2)


def test_schur_sends_supported_projectives_to_projectives(field):
    a = fixtures.fix_A(field)
    e1 = Idempotent.from_vertex_names(a, ["1"])
    cd = corner(a, e1)
    img = schur_apply(a, e1, projective(a, 0), cd)
    assert proj_dim(img).describe() == "Finite(0)"
    cover = projective_cover(img)
    assert cover.is_iso()


def test_classify_idempotent_on_A(field):
    a = fixtures.fix_A(field)
    e1 = Idempotent.from_vertex_names(a, ["1"])
    c1 = classify_idempotent(a, e1)
    # pd S_1 is certified infinite, so e1 itself is singular...
    assert c1.regular == "no" and c1.regular_witness == 0
    # ...but its complement is regular (pd S_2 finite), so e1 is
    # singularly complete
    assert c1.singularly_complete == "yes"
    assert c1.complement_evidence[0].result.describe() == "Finite(1)"
    e2 = Idempotent.from_vertex_names(a, ["2"])
    c2 = classify_idempotent(a, e2)
    assert c2.regular == "yes"
    assert c2.singularly_complete == "no" and c2.complement_witness == 0


def test_classify_full_idempotent_trivially_complete():
    a = fixtures.fix_A(QQ)
    full = Idempotent.from_slots(a, [0, 1])
    c = classify_idempotent(a, full)
    assert c.singularly_complete == "yes"
    assert c.complement_evidence == []


def test_classification_invariant_under_relabeling(field):
    # same quiver declared with the vertex list reversed
    q = Quiver(("2", "1"),
               (("a", "1", "1"), ("b", "1", "2"), ("g", "2", "1")))
    rels = [parse_relation(q, field, t) for t in ("a*a", "g*b", "b*a")]
    a_perm = build_path_algebra(field, q, rels, name="A-relabeled")
    a = fixtures.fix_A(field)
    for name in ("1", "2"):
        c1 = classify_idempotent(a, Idempotent.from_vertex_names(a, [name]))
        c2 = classify_idempotent(a_perm,
                                 Idempotent.from_vertex_names(a_perm, [name]))
        assert (c1.regular, c1.singularly_complete) == \
            (c2.regular, c2.singularly_complete)


def test_theorem21_on_A(field):
    a = fixtures.fix_A(field)
    e1 = Idempotent.from_vertex_names(a, ["1"])
    rep = theorem21_report(a, e1)
    assert rep.established
    assert rep.conclusion is not None and "D_sg" in rep.conclusion
    assert rep.data["eA_pd"].describe() == "Finite(0)"
    assert rep.data["eA_free_rank"] == 2
    assert any("self-injective" in d for d in rep.decorations)
    assert any("vector spaces" in d for d in rep.decorations)
    assert "finite-dimensional" in rep.scope


def test_theorem21_refuted_on_wrong_corner(field):
    a = fixtures.fix_A(field)
    e2 = Idempotent.from_vertex_names(a, ["2"])
    rep = theorem21_report(a, e2)
    assert rep.status == "refuted-hypotheses"
    assert rep.conclusion is None
    first = rep.checklist[0]
    assert first.status == "no" and "S[1]" in first.detail


def test_theorem21_on_Adoubleprime(field):
    app = fixtures.fix_Adoubleprime(field)
    e1 = Idempotent.from_vertex_names(app, ["1"])
    rep = theorem21_report(app, e1)
    assert rep.established
    assert rep.data["eA_free_rank"] == 3
    assert match_structure(rep.corner, fixtures.fix_dualnum(field)) is not None


def test_theorem41_upper(field):
    t = fixtures.aprime_triangular(field)
    rep = theorem41_report(t)
    assert rep.established
    assert rep.conclusion.endswith("D_sg(dualnum)")
    assert any("stable module category" in d for d in rep.decorations)


def test_theorem41_lower(field):
    t = fixtures.adoubleprime_triangular(field)
    rep = theorem41_report(t)
    assert rep.established
    assert rep.conclusion.endswith("D_sg(dualnum)")
    statuses = {c.name: c.status for c in rep.checklist}
    assert all(v == "yes" for v in statuses.values())


def test_theorem41_upper_fails_on_singular_top_corner():
    # dual numbers in the top-left slot have infinite global dimension
    from quiverhom import zero_bimodule, build_triangular
    d = fixtures.fix_dualnum(QQ)
    k = fixtures.fix_K(QQ)
    t = build_triangular(d, k, zero_bimodule(d, k), "upper")
    rep = theorem41_report(t)
    assert rep.status == "refuted-hypotheses"
    assert rep.conclusion is None


def test_conclusions_name_matching_corners(field):
    # both routes to the Adoubleprime singularity category name the same
    # corner algebra, up to structure-constant matching
    t = fixtures.adoubleprime_triangular(field)
    rep41 = theorem41_report(t)
    app = fixtures.fix_Adoubleprime(field)
    e1 = Idempotent.from_vertex_names(app, ["1"])
    rep21 = theorem21_report(app, e1)
    assert rep41.established and rep21.established
    assert match_structure(rep21.corner, rep41.corner) is not None


def test_left_corner_module_is_eA(field):
    a = fixtures.fix_A(field)
    e1 = Idempotent.from_vertex_names(a, ["1"])
    ea = left_corner_module(a, e1)
    # eA = e1, a, g, a*g
    assert ea.dim == 4
    cd = corner(a, e1)
    assert is_isomorphic(ea, direct_sum([regular(cd.algebra)] * 2)).is_iso
