import pytest

from chomplab.iso import (
    exchange_swap,
    is_standard,
    iso_check,
    max_ordinal_witness,
    reduce_rule,
    separation_survey,
    signature,
    thin_iso,
)
from chomplab.positions import enumerate_positions
from chomplab.rules import NormalizedRule, normalize, standard_rule

S2 = standard_rule(2)
S4 = standard_rule(4)
BIG = normalize((6, 8, 7, 3, 5, 1, 0, 2, 4))


class TestSignature:
    def test_tiny(self):
        assert signature(S2, 1) == (0, 1)

    def test_equal_for_swap_isomorphs(self):
        assert signature(NormalizedRule((0, 1, 3, 2)), 12) == \
            signature(NormalizedRule((0, 2, 3, 1)), 12)

    def test_differs_on_early_descent(self):
        assert signature(NormalizedRule((0, 1, 2)), 3) != \
            signature(NormalizedRule((0, 2, 1)), 3)


class TestIsoCheck:
    def test_three_player_counterexample(self):
        v = iso_check(NormalizedRule((0, 1, 2)), NormalizedRule((0, 2, 1)), 5)
        assert v.outcome == "counterexample"
        assert v.witness == (3,)
        assert v.ordinals == (3, 2)
        assert v.min_volume == 3

    def test_four_player_counterexample(self):
        v = iso_check(S4, NormalizedRule((0, 1, 3, 2)), 5)
        assert v.witness == (4,) and v.ordinals == (4, 3) and v.min_volume == 4

    def test_agreeing_pair(self):
        v = iso_check(NormalizedRule((0, 2, 1, 3)), NormalizedRule((0, 3, 1, 2)), 12)
        assert v.agrees and v.witness is None and v.min_volume is None

    def test_cross_player_counts(self):
        v = iso_check(NormalizedRule((1, 0)), NormalizedRule((0,)), 8)
        assert v.agrees

    def test_symmetric_and_reflexive(self):
        f, g = NormalizedRule((0, 1, 2)), NormalizedRule((0, 2, 1))
        a, b = iso_check(f, g, 6), iso_check(g, f, 6)
        assert a.witness == b.witness and a.ordinals == (b.ordinals[1], b.ordinals[0])
        assert iso_check(f, f, 6).agrees

    def test_witness_minimality(self):
        f, g = S4, NormalizedRule((0, 1, 3, 2))
        v = iso_check(f, g, 8)
        sf, sg = signature(f, 8), signature(g, 8)
        index = list(enumerate_positions(8))
        for i, p in enumerate(index):
            if sum(p) < v.min_volume:
                assert sf[i] == sg[i]

    def test_json_fields(self):
        v = iso_check(NormalizedRule((0, 1, 2)), NormalizedRule((0, 2, 1)), 5)
        doc = v.to_json_dict()
        assert doc == {"outcome": "counterexample", "witness": [3],
                       "minVolume": 3, "bound": 5}


class TestThinIso:
    def test_matching_descents(self):
        assert thin_iso(NormalizedRule((0, 1, 2, 4, 3)), S4)

    def test_differing_descents(self):
        assert not thin_iso(NormalizedRule((0, 1, 2)), NormalizedRule((0, 2, 1)))

    def test_reflexive(self):
        assert thin_iso(S4, S4)


class TestMaxOrdinal:
    def test_nine_player_rule_stays_low(self):
        top, _ = max_ordinal_witness(BIG, 12)
        assert top == 3

    def test_descending_tail_rule(self):
        top, _ = max_ordinal_witness(NormalizedRule((0, 3, 2, 1)), 12)
        assert top == 3

    def test_ascending_rule_reaches_top(self):
        top, witness = max_ordinal_witness(S4, 6)
        assert top == 4 and witness == (4,)

    def test_volume_zero(self):
        assert max_ordinal_witness(S2, 0) == (0, ())


class TestReduce:
    def test_descending_tail(self):
        result = reduce_rule(NormalizedRule((0, 3, 2, 1)), 12)
        assert not result.simple
        assert result.rule.perm == (0, 2, 1)

    def test_simple_rule_unchanged(self):
        result = reduce_rule(S4, 12)
        assert result.simple and result.rule == S4

    def test_nine_player_collapse(self):
        result = reduce_rule(BIG, 12)
        assert result.rule.perm == (0, 2, 1)

    def test_reversed_two_player(self):
        result = reduce_rule(NormalizedRule((1, 0)), 4)
        assert result.rule.perm == (0,)

    def test_signature_preserved(self):
        for perm in [(0, 3, 2, 1), (1, 0), (2, 0, 1)]:
            rule = NormalizedRule(perm)
            result = reduce_rule(rule, 10)
            assert signature(result.rule, 10) == signature(rule, 10)

    def test_needs_positive_bound(self):
        with pytest.raises(ValueError):
            reduce_rule(S2, 0)


class TestStandardness:
    def test_ascending_four(self):
        report = is_standard(S4, 12)
        assert report.outcome == "standard"
        assert report.witness == (4, 1, 1, 1)
        assert report.iso.agrees

    def test_mid_descent_three(self):
        report = is_standard(NormalizedRule((0, 2, 1)), 12)
        assert report.outcome == "non_standard"
        assert report.witness is None

    def test_two_player(self):
        report = is_standard(S2, 12)
        assert report.outcome == "standard"

    def test_wide_rule_stays_open(self):
        # the smallest witness for 7 players has volume 13 > 12
        report = is_standard(standard_rule(7), 12)
        assert report.outcome == "undecided"
        assert report.iso.agrees


class TestExchange:
    def test_three_player_violation(self):
        report = exchange_swap(NormalizedRule((0, 2, 1)), 2, 3, 10)
        assert report.precondition == "violated"
        assert report.witness == (3,)

    def test_four_player_verified(self):
        report = exchange_swap(NormalizedRule((0, 2, 1, 3)), 2, 4, 12)
        assert report.verified
        assert report.swapped_rule.perm == (0, 3, 1, 2)

    def test_verified_swap_agrees(self):
        f = NormalizedRule((0, 2, 1, 3))
        report = exchange_swap(f, 2, 4, 12)
        assert iso_check(f, report.swapped_rule, 12).agrees

    def test_violated_yet_still_isomorphic_pair(self):
        # the precondition is sufficient only: this swap fails it but the
        # swapped rule still agrees to volume 12
        f = NormalizedRule((0, 1, 3, 2))
        report = exchange_swap(f, 2, 4, 10)
        assert report.precondition == "violated"
        assert report.witness == (4,)
        assert report.swapped_rule.perm == (0, 2, 3, 1)
        assert iso_check(f, report.swapped_rule, 12).agrees

    def test_rejects_wide_gap(self):
        with pytest.raises(ValueError):
            exchange_swap(S4, 1, 3, 6)  # scores 0 and 2

    def test_rejects_bad_seats(self):
        with pytest.raises(ValueError):
            exchange_swap(S4, 2, 2, 6)
        with pytest.raises(ValueError):
            exchange_swap(S4, 0, 1, 6)


class TestSeparationSurvey:
    def test_two_player_universe(self):
        # rules (0), (01), (10): two pairs split at volume 2, (10) ~ (0) open
        survey = separation_survey(2, 4)
        assert survey.rule_count == 3 and survey.pair_count == 3
        assert survey.distinguished == 2
        assert survey.max_min_volume == 2
        assert survey.undistinguished == ((NormalizedRule((0,)),
                                           NormalizedRule((1, 0))),)

    def test_three_player_cap_six(self):
        survey = separation_survey(3, 6)
        assert survey.max_min_volume == 3
        pairs = {(f.perm, g.perm, w) for f, g, w in survey.extremal_pairs}
        assert ((0, 1, 2), (0, 2, 1), (3,)) in pairs

    def test_four_player_cap_twelve(self):
        survey = separation_survey(4, 12)
        # the worst pair needs volume 5: a hook separates (012) from (0132)
        assert survey.max_min_volume == 5
        pairs = {(f.perm, g.perm, w) for f, g, w in survey.extremal_pairs}
        assert ((0, 1, 2), (0, 1, 3, 2), (3, 1, 1)) in pairs
        # open pairs are exactly the same-class ones: C(17,2)+C(6,2)+1+1+3+1
        assert len(survey.undistinguished) == 157

    def test_four_player_includes_known_minimal_pairs(self):
        survey = separation_survey(4, 12)
        assert survey.cap == 12 and survey.players == 4
        f, g = NormalizedRule((0, 1, 2)), NormalizedRule((0, 2, 1))
        assert iso_check(f, g, 12).min_volume == 3
        assert iso_check(S4, NormalizedRule((0, 1, 3, 2)), 12).min_volume == 4

    def test_single_player_rejected(self):
        with pytest.raises(ValueError):
            separation_survey(1, 4)
