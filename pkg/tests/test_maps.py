"""Images, preimages, and map classification."""

import pytest

from idealtop import (DimensionMismatch, FiniteMap, classify, compose,
                      constant_map, continuity_characterizations, discrete,
                      identity_map, image, image_table, preimage,
                      preimage_table, sierpinski)
from idealtop.search import enumerate_maps, enumerate_topologies


def test_image_examples():
    assert image(identity_map(2), 0b11) == 0b11
    assert image(FiniteMap(2, 2, (0, 0)), 0b11) == 0b01
    assert image(FiniteMap(2, 2, (0, 0)), 0) == 0


def test_preimage_examples():
    assert preimage(identity_map(2), 0b10) == 0b10
    assert preimage(FiniteMap(2, 2, (0, 0)), 0b01) == 0b11
    assert preimage(FiniteMap(3, 2, (0, 1, 0)), 0b11) == 0b111


def test_tables_match_pointwise_ops():
    for f in enumerate_maps(3, 2):
        img, pre = image_table(f), preimage_table(f)
        assert all(img[a] == f.image(a) for a in range(8))
        assert all(pre[b] == f.preimage(b) for b in range(4))


def test_classify_identity_on_sierpinski(sierp):
    prof = classify(identity_map(2), sierp, sierp)
    assert prof.continuous and prof.open_map and prof.closed_map
    assert prof.homeomorphism


def test_classify_identity_into_finer_codomain(sierp):
    prof = classify(identity_map(2), sierp, discrete(2))
    assert not prof.continuous  # {0} opens up in the codomain only
    assert prof.open_map


def test_classify_constant_map(sierp):
    prof = classify(constant_map(2, 2, 0), sierp, discrete(2))
    assert prof.continuous
    assert not prof.surjective


def test_classify_dimension_mismatch(sierp):
    with pytest.raises(DimensionMismatch):
        classify(identity_map(3), sierp, sierp)


def test_profile_derived_flags(sierp):
    prof = classify(identity_map(2), sierp, sierp)
    assert prof.bijective and prof.homeomorphism
    prof = classify(constant_map(2, 2, 1), sierp, sierp)
    assert not prof.bijective and not prof.homeomorphism


@pytest.mark.parametrize("n_dom,n_cod", [(1, 1), (1, 2), (2, 1), (2, 2),
                                         (2, 3), (3, 2), (3, 3)])
def test_five_continuity_characterizations_agree(n_dom, n_cod):
    for t_dom in enumerate_topologies(n_dom):
        for t_cod in enumerate_topologies(n_cod):
            for f in enumerate_maps(n_dom, n_cod):
                chars = continuity_characterizations(f, t_dom, t_cod)
                assert len(set(chars.values())) == 1, (t_dom, t_cod, f, chars)


def test_paranoid_classify_runs_the_cross_check(sierp):
    prof = classify(identity_map(2), sierp, discrete(2), paranoid=True)
    assert not prof.continuous


def test_composition_preserves_continuity():
    for t1 in enumerate_topologies(2):
        for t2 in enumerate_topologies(2):
            for t3 in enumerate_topologies(2):
                for f in enumerate_maps(2, 2):
                    for g in enumerate_maps(2, 2):
                        if (classify(f, t1, t2).continuous
                                and classify(g, t2, t3).continuous):
                            assert classify(compose(g, f), t1, t3).continuous


@pytest.mark.parametrize("n", [1, 2, 3])
def test_bijections_open_iff_closed(n):
    for t_dom in enumerate_topologies(n):
        for t_cod in enumerate_topologies(n):
            for f in enumerate_maps(n, n):
                if not f.bijective:
                    continue
                prof = classify(f, t_dom, t_cod)
                assert prof.open_map == prof.closed_map
