import json
import random

import pytest

from mbti_szondi import (
    NORM_PROFILE,
    Profile,
    ProfileSet,
    TypeIndicator,
    all_right_polarities,
    closure_left,
    closure_right,
    disj,
    kernel_classes,
    kernel_equivalent,
    left_polarity,
    load_interpretation,
    models,
    profiles_formula,
    right_polarity,
    run_verification,
    verify_facts,
    verify_lemma,
    verify_theorem,
)

import pinned

ALL_INDICATORS = frozenset(TypeIndicator)


class TestRightPolarity:
    def test_empty_set_maps_to_full_space(self, interp):
        assert right_polarity(interp, []) == ProfileSet.full()

    def test_singleton_counts_pinned(self, interp):
        for indicator in TypeIndicator:
            count = right_polarity(interp, [indicator]).count()
            assert count == pinned.SINGLETON_COUNTS[indicator.name], indicator.name

    def test_conflicting_pair_is_empty(self, interp):
        pair = [TypeIndicator.ISTJ, TypeIndicator.ESTP]
        assert right_polarity(interp, pair).count() == pinned.PAIR_ISTJ_ESTP_COUNT

    def test_norm_profile_satisfies_no_row(self, interp):
        for indicator in TypeIndicator:
            assert NORM_PROFILE not in right_polarity(interp, [indicator])


class TestLeftPolarity:
    def test_empty_profile_set_maps_to_all_indicators(self, interp):
        assert left_polarity(interp, ProfileSet.empty()) == ALL_INDICATORS
        assert left_polarity(interp, []) == ALL_INDICATORS

    def test_norm_profile_maps_to_empty(self, interp):
        assert left_polarity(interp, [NORM_PROFILE]) == frozenset()

    def test_routes_agree(self, interp):
        # Pointwise evaluation over a list vs subset tests on the symbolic set.
        rng = random.Random(99)
        for _ in range(25):
            ind_set = frozenset(i for i in TypeIndicator if rng.random() < 0.4)
            steer = right_polarity(interp, ind_set)
            profiles = steer.sample(rng, 8) if steer else []
            profiles += [Profile.from_index(rng.randrange(12**8)) for _ in range(4)]
            symbolic = models(profiles_formula(profiles))
            assert left_polarity(interp, profiles) == left_polarity(interp, symbolic)

    def test_members_of_singleton_polarity_map_back(self, interp):
        rng = random.Random(3)
        for indicator in (TypeIndicator.INFJ, TypeIndicator.ESTJ):
            for p in right_polarity(interp, [indicator]).sample(rng, 10):
                assert indicator in left_polarity(interp, [p])


class TestClosures:
    def test_left_closure_inflationary(self, interp):
        rng = random.Random(17)
        for _ in range(20):
            ind_set = frozenset(i for i in TypeIndicator if rng.random() < 0.5)
            assert ind_set <= closure_left(interp, ind_set)

    def test_right_closure_inflationary(self, interp):
        rng = random.Random(18)
        steer = right_polarity(interp, [TypeIndicator.ENTP])
        profiles = steer.sample(rng, 6)
        closed = closure_right(interp, profiles)
        for p in profiles:
            assert p in closed

    def test_triple_application_collapses(self, interp):
        # The closure law: right of the closed set equals right of the set.
        rng = random.Random(19)
        for _ in range(10):
            ind_set = frozenset(i for i in TypeIndicator if rng.random() < 0.5)
            closed = closure_left(interp, ind_set)
            assert right_polarity(interp, closed) == right_polarity(interp, ind_set)


class TestKernel:
    def test_closure_never_changes_polarity(self, interp):
        for ind_set in ([], [TypeIndicator.ISTJ], list(TypeIndicator)[:4]):
            assert kernel_equivalent(interp, ind_set, closure_left(interp, ind_set))

    def test_distinct_singletons_not_equivalent(self, interp):
        assert not kernel_equivalent(
            interp, [TypeIndicator.ISTJ], [TypeIndicator.ESTP]
        )

    def test_empty_polarity_sets_equivalent(self, interp):
        pair = [TypeIndicator.ISTJ, TypeIndicator.ESTP]
        assert kernel_equivalent(interp, pair, ALL_INDICATORS)

    def test_table_matches_direct_computation(self, interp):
        table = all_right_polarities(interp)
        assert len(table) == 65536
        assert table[0] == ProfileSet.full()
        rng = random.Random(23)
        for mask in [1 << i for i in range(16)] + [rng.randrange(65536) for _ in range(20)]:
            members = [ind for ind in TypeIndicator if mask >> ind & 1]
            assert table[mask] == right_polarity(interp, members), mask

    def test_nonempty_polarity_count_pinned(self, interp):
        table = all_right_polarities(interp)
        assert sum(1 for ps in table if ps) == pinned.NONEMPTY_POLARITY_COUNT

    def test_kernel_partition(self, interp):
        classes = kernel_classes(interp)
        assert len(classes) == pinned.KERNEL_CLASS_COUNT
        sizes = sorted(len(c) for c in classes)
        assert sum(sizes) == 65536
        # one class holds every mask with empty polarity
        assert sizes[-1] == 65536 - pinned.NONEMPTY_POLARITY_COUNT
        flat = sorted(m for c in classes for m in c)
        assert flat == list(range(65536))
        # rows are pairwise distinct, so the 16 singleton masks spread over
        # 16 different classes
        of_mask = {}
        for class_id, members in enumerate(classes):
            for m in members:
                of_mask[m] = class_id
        assert len({of_mask[1 << i] for i in range(16)}) == 16
        assert classes[0] == [0]


def check_names(results):
    return [c.name for c in results]


class TestVerification:
    def test_all_suites_pass_builtin(self, interp):
        report = run_verification(interp, "all", trials=40, seed=7)
        assert report.passed
        assert check_names(report.checks) == [
            "facts.pairwise-consistency",
            "facts.set-translation-antitone",
            "facts.profile-translation-monotone",
            "facts.rows-distinct",
            "lemma.antitone-right",
            "lemma.antitone-left",
            "lemma.closure-indicators",
            "lemma.closure-profiles",
            "theorem.biconditional",
        ]

    def test_theorem_passes_alternative_interpretation(self, alt_interp):
        results = verify_theorem(alt_interp, trials=40, seed=11)
        assert all(c.passed for c in results)

    def test_rows_only_document_skips_pairwise(self, interp):
        rows_only = load_interpretation(interp.document())
        results = verify_facts(rows_only, trials=20, seed=5)
        pairwise = results[0]
        assert pairwise.name == "facts.pairwise-consistency"
        assert pairwise.passed and "skipped" in pairwise.detail

    def test_broken_lift_fails_theorem(self, interp):
        def disjunctive_lift(indicators):
            return disj(interp.row(i) for i in sorted(set(indicators)))

        # Detection is probabilistic; failure odds at 1000 trials are ~1e-8.
        results = verify_theorem(interp, trials=1000, seed=2, lift=disjunctive_lift)
        (check,) = results
        assert not check.passed
        assert check.witness is not None
        assert "P⊆→I" in check.witness

    def test_broken_lift_fails_antitone(self, interp):
        def disjunctive_lift(indicators):
            return disj(interp.row(i) for i in sorted(set(indicators)))

        results = verify_lemma(interp, trials=60, seed=2, lift=disjunctive_lift)
        by_name = {c.name: c for c in results}
        assert not by_name["lemma.antitone-right"].passed
        assert by_name["lemma.antitone-right"].witness is not None

    def test_report_rendering(self, interp):
        report = run_verification(interp, "theorem", trials=5, seed=1)
        text = report.render()
        assert "verification suite: theorem" in text
        assert "PASS  theorem.biconditional" in text
        assert text.endswith("all checks passed")

    def test_report_payload_serializable_and_deterministic(self, interp):
        a = run_verification(interp, "lemma", trials=10, seed=42)
        b = run_verification(interp, "lemma", trials=10, seed=42)
        payload = a.to_payload()
        json.dumps(payload)

        def stable(report):
            return [
                (c.name, c.passed, c.trials, c.witness) for c in report.checks
            ]

        assert stable(a) == stable(b)
        assert payload["fingerprint"] == interp.fingerprint()
        assert payload["passed"] is True

    def test_unknown_suite_rejected(self, interp):
        with pytest.raises(ValueError, match="unknown suite"):
            run_verification(interp, "everything")

    def test_failing_report_renders_fail(self, interp):
        def broken_lift(indicators):
            return disj(interp.row(i) for i in sorted(set(indicators)))

        report = run_verification(interp, "theorem", trials=1000, seed=2, lift=broken_lift)
        assert not report.passed
        text = report.render()
        assert "FAIL  theorem.biconditional" in text
        assert "witness:" in text
        assert text.endswith("result: FAILED")
