import math
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mbti_szondi import Box, Factor, GrammarError, Profile, ProfileSet, Signature
from mbti_szondi.boxes import FULL_FACTOR_MASK
from mbti_szondi.enumeration import restricted_universe

# Two-factor universe: 144 assignments to (h, k), all other factors free.
UNIVERSE_FACTORS = (Factor.H, Factor.K)
UNIVERSE = restricted_universe(UNIVERSE_FACTORS)
FREE_WEIGHT = 12 ** 6

nonzero_mask = st.integers(min_value=1, max_value=FULL_FACTOR_MASK)


@st.composite
def boxes_on_universe(draw):
    """Boxes constrained only on the two universe factors."""
    masks = [FULL_FACTOR_MASK] * 8
    masks[Factor.H] = draw(nonzero_mask)
    masks[Factor.K] = draw(nonzero_mask)
    return Box(tuple(masks))


@st.composite
def sets_on_universe(draw):
    return ProfileSet.from_overlapping(
        draw(st.lists(boxes_on_universe(), max_size=4))
    )


def vector_of(profile_set: ProfileSet) -> np.ndarray:
    return profile_set.membership_vector(UNIVERSE)


class TestBox:
    def test_arity_and_mask_validation(self):
        with pytest.raises(ValueError):
            Box((FULL_FACTOR_MASK,) * 7)
        with pytest.raises(ValueError):
            Box((0,) + (FULL_FACTOR_MASK,) * 7)
        with pytest.raises(ValueError):
            Box((1 << 12,) + (FULL_FACTOR_MASK,) * 7)

    def test_full_box_counts_whole_space(self):
        assert Box.full().count() == 12 ** 8

    def test_atom_box(self):
        box = Box.for_atom(Factor.HY, Signature.POS)
        assert box.count() == 12 ** 7
        assert box.contains(Profile.from_mapping(
            {f: (Signature.POS if f is Factor.HY else Signature.ZERO) for f in Factor}
        ))

    def test_count_is_product_of_popcounts(self):
        masks = [FULL_FACTOR_MASK] * 8
        masks[Factor.H] = 0b101          # 2 signatures
        masks[Factor.M] = 0b111000       # 3 signatures
        assert Box(tuple(masks)).count() == 2 * 3 * 12 ** 6

    def test_intersect_disjoint_is_none(self):
        a = Box.for_atom(Factor.H, Signature.POS)
        b = Box.for_atom(Factor.H, Signature.NEG)
        assert a.intersect(b) is None

    def test_subtract_splits_into_disjoint_pieces(self):
        a = Box.full()
        b = Box.for_atom(Factor.H, Signature.POS)
        pieces = a.subtract(b)
        assert sum(p.count() for p in pieces) == a.count() - b.count()
        for i, p in enumerate(pieces):
            assert p.intersect(b) is None
            for q in pieces[i + 1:]:
                assert p.intersect(q) is None

    def test_subtract_non_overlapping_returns_self(self):
        a = Box.for_atom(Factor.H, Signature.POS)
        b = Box.for_atom(Factor.H, Signature.NEG)
        assert a.subtract(b) == [a]

    def test_fuse_one_factor_apart(self):
        a = Box.for_atom(Factor.H, Signature.POS)
        b = Box.for_atom(Factor.H, Signature.NEG)
        fused = a.fuse(b)
        assert fused is not None
        assert fused.masks[Factor.H] == (1 << Signature.POS) | (1 << Signature.NEG)

    def test_fuse_two_factors_apart_fails(self):
        a = Box.for_atom(Factor.H, Signature.POS)
        b = Box.for_atom(Factor.K, Signature.NEG)
        assert a.fuse(b) is None

    def test_iter_profiles_enumerates_exactly(self):
        masks = [1 << Signature.ZERO] * 8
        masks[Factor.H] = (1 << Signature.POS) | (1 << Signature.NEG)
        masks[Factor.M] = (1 << Signature.AMBI) | (1 << Signature.ZERO)
        box = Box(tuple(masks))
        profiles = list(box.iter_profiles())
        assert len(profiles) == box.count() == 4
        assert len(set(profiles)) == 4
        assert all(box.contains(p) for p in profiles)

    def test_token_round_trip(self):
        box = Box.for_atom(Factor.HY, Signature.AMBI_LOW)
        assert Box.from_tokens(box.to_tokens()) == box
        with pytest.raises(GrammarError):
            Box.from_tokens(["+"] * 7)

    @given(boxes_on_universe(), boxes_on_universe())
    def test_intersect_matches_vectors(self, a, b):
        va, vb = vector_of(ProfileSet((a,))), vector_of(ProfileSet((b,)))
        common = a.intersect(b)
        expected = va & vb
        if common is None:
            assert not expected.any()
        else:
            assert np.array_equal(vector_of(ProfileSet((common,))), expected)

    @given(boxes_on_universe(), boxes_on_universe())
    def test_subtract_matches_vectors(self, a, b):
        pieces = a.subtract(b)
        got = np.zeros(len(vector_of(ProfileSet((a,)))), dtype=bool)
        for piece in pieces:
            piece_vec = vector_of(ProfileSet((piece,)))
            assert not (got & piece_vec).any()  # pieces pairwise disjoint
            got |= piece_vec
        assert np.array_equal(
            got, vector_of(ProfileSet((a,))) & ~vector_of(ProfileSet((b,)))
        )


class TestProfileSet:
    def test_empty_and_full(self):
        assert ProfileSet.empty().count() == 0
        assert not ProfileSet.empty()
        assert ProfileSet.full().count() == 12 ** 8
        assert ProfileSet.full().complement() == ProfileSet.empty()

    def test_immutable(self):
        s = ProfileSet.full()
        with pytest.raises(AttributeError):
            s.boxes = ()
        with pytest.raises(TypeError):
            hash(s)

    def test_membership(self):
        h_pos = ProfileSet((Box.for_atom(Factor.H, Signature.POS),))
        inside = Profile.from_mapping({f: Signature.POS for f in Factor})
        outside = Profile.from_mapping({f: Signature.NEG for f in Factor})
        assert inside in h_pos and outside not in h_pos

    def test_coalescing_rebuilds_families(self):
        singles = [Box.for_atom(Factor.H, s) for s in Signature]
        rebuilt = ProfileSet.from_overlapping(singles)
        assert rebuilt == ProfileSet.full()
        assert len(rebuilt.boxes) == 1

    def test_from_overlapping_counts_once(self):
        box = Box.for_atom(Factor.H, Signature.POS)
        assert ProfileSet.from_overlapping([box, box]).count() == box.count()

    @given(sets_on_universe(), sets_on_universe())
    @settings(max_examples=60)
    def test_union_intersect_subtract_match_vectors(self, a, b):
        va, vb = vector_of(a), vector_of(b)
        assert np.array_equal(vector_of(a.union(b)), va | vb)
        assert np.array_equal(vector_of(a.intersect(b)), va & vb)
        assert np.array_equal(vector_of(a.subtract(b)), va & ~vb)
        for result in (a.union(b), a.intersect(b), a.subtract(b)):
            assert result.pairwise_disjoint()

    @given(sets_on_universe())
    @settings(max_examples=60)
    def test_complement_and_count(self, a):
        va = vector_of(a)
        assert np.array_equal(vector_of(a.complement()), ~va)
        assert a.count() == int(va.sum()) * FREE_WEIGHT
        assert a.complement().complement() == a

    @given(sets_on_universe(), sets_on_universe())
    @settings(max_examples=60)
    def test_issubset_and_equality_match_vectors(self, a, b):
        va, vb = vector_of(a), vector_of(b)
        assert a.issubset(b) == bool((va <= vb).all())
        assert (a == b) == bool((va == vb).all())

    def test_equality_is_semantic(self):
        # Same set, structurally different boxes.
        family = ProfileSet.from_overlapping(
            [Box.for_atom(Factor.H, Signature.POS), Box.for_atom(Factor.K, Signature.NEG)]
        )
        reversed_family = ProfileSet.from_overlapping(
            [Box.for_atom(Factor.K, Signature.NEG), Box.for_atom(Factor.H, Signature.POS)]
        )
        assert family == reversed_family

    def test_sample_deterministic_and_inside(self):
        target = ProfileSet.from_overlapping(
            [Box.for_atom(Factor.H, Signature.POS), Box.for_atom(Factor.K, Signature.NEG)]
        )
        first = target.sample(random.Random(99), 24)
        second = target.sample(random.Random(99), 24)
        assert first == second
        assert all(p in target for p in first)
        with pytest.raises(ValueError):
            ProfileSet.empty().sample(random.Random(0), 1)

    def test_iter_profiles_matches_count(self):
        masks = [1 << Signature.ZERO] * 8
        masks[Factor.D] = 0b11
        masks[Factor.M] = 0b111
        tiny = ProfileSet((Box(tuple(masks)),))
        profiles = list(tiny.iter_profiles())
        assert len(profiles) == tiny.count() == 6
        assert all(p in tiny for p in profiles)

    def test_payload_round_trip(self):
        target = ProfileSet.from_overlapping(
            [Box.for_atom(Factor.HY, Signature.AMBI_HIGH), Box.for_atom(Factor.E, Signature.NEG1)]
        )
        payload = target.to_payload()
        assert ProfileSet.from_payload(payload) == target

    def test_payload_count_tamper_detected(self):
        payload = ProfileSet.full().to_payload()
        payload["count"] += 1
        with pytest.raises(GrammarError):
            ProfileSet.from_payload(payload)

    def test_payload_bad_tokens_detected(self):
        payload = ProfileSet.full().to_payload()
        payload["boxes"][0] = ["bogus"] * 8
        with pytest.raises(GrammarError):
            ProfileSet.from_payload(payload)

    def test_membership_vector_rejects_outside_constraints(self):
        constrained = ProfileSet((Box.for_atom(Factor.M, Signature.POS),))
        with pytest.raises(ValueError):
            constrained.membership_vector(UNIVERSE)
