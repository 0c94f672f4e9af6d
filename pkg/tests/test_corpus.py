"""Model fixtures and the worked-example corpus."""

import time
from fractions import Fraction

import pytest

from weinkit import corpus, models
from weinkit.graded import GradedGroup
from weinkit.handles import intersection_form_rank
from weinkit.surgery import adc_check


class TestModels:
    def test_ball_homology(self):
        h = models.ball(4).homology()
        assert h == GradedGroup.from_dict({0: (1, ())})

    def test_t_star_sphere_homology(self):
        for n in (2, 3, 4, 5):
            h = models.t_star_sphere(n).homology()
            assert h == GradedGroup.from_dict({0: (1, ()), n: (1, ())})

    def test_t_star_sphere_form_parity(self):
        # the form is 2 in even dimensions (self-intersection chi-like
        # count) and 0 in odd ones
        assert intersection_form_rank(models.t_star_sphere(4)) == 1
        assert intersection_form_rank(models.t_star_sphere(3)) == 0

    def test_middle_rank_family_ranks(self):
        for i in (1, 3, 6):
            p = models.middle_rank_family(3, i)
            assert p.homology().rank(3) == i

    def test_middle_rank_family_euler_pairing(self):
        p = models.middle_rank_family(4, 2, euler_pairing=True)
        assert intersection_form_rank(p) == 2

    def test_wedge_thickening_counts(self):
        chain, rep = models.wedge_thickening(4)
        assert chain.dims == {0: 1, 2: 4, 3: 4}
        assert rep.boundary_dim == 6
        assert rep.euler == 2

    def test_wedge_spheres_boundary_counts(self):
        chain, rep = models.wedge_spheres_boundary(5)
        assert chain.dims == {0: 1, 2: 5}
        assert rep.dim(2) == 5 and rep.dim(3) == 5
        assert rep.euler == 0

    def test_two_letter_table_window(self):
        s = models.two_letter_table()
        assert s.bound == 4
        assert sorted(c.id for c in s.chords) == ["a", "b"]

    def test_mixed_sign_spectrum_needs_three(self):
        from weinkit.chords import min_positive_N
        assert min_positive_N(models.mixed_sign_spectrum()) == 3

    def test_sample_certificate_valid(self):
        for stages in (1, 2, 3, 4):
            assert adc_check(models.sample_certificate(3, stages)).fired

    def test_sample_certificate_bounds_geometric(self):
        cert = models.sample_certificate(3, 3)
        assert [st.bound for st in cert.stages] == [5, 40, 320]

    def test_degree_zero_fixture_fails_at_record(self):
        verdict = adc_check(models.degree_zero_orbit_fixture())
        assert not verdict.fired
        assert verdict.witness["stage"] == 1
        assert verdict.witness["record"] == 1

    def test_empty_certificate_passes(self):
        assert adc_check(models.empty_certificate()).fired


class TestCorpus:
    def test_every_entry_passes(self):
        report = corpus.examples_corpus()
        failing = [r["name"] for r in report["results"] if not r["ok"]]
        assert failing == []
        assert report["ok"] is True

    def test_batch_report_shape(self):
        report = corpus.examples_corpus(["words-table"])
        assert report["schema"] == 1
        assert report["command"] == "examples"
        assert len(report["results"]) == 1
        assert report["results"][0]["name"] == "words-table"
        assert "formula" in report["results"][0]

    def test_unknown_name_rejected(self):
        with pytest.raises(ValueError, match="unknown example"):
            corpus.run_example("no-such-example")

    @pytest.mark.parametrize("i", [1, 2, 7, 10])
    def test_wedge_family_parameter(self, i):
        r = corpus.run_example("wedge-family", i=i)
        assert r["ok"]
        assert r["checks"][0]["got"] == i

    def test_injected_failure_is_detected(self):
        # the corpus entry is "ok" exactly because the planted degree-0
        # orbit makes the convexity check fail at the predicted record
        r = corpus.run_example("injected-degree-zero")
        assert r["ok"]

    def test_corpus_is_fast(self):
        start = time.perf_counter()
        corpus.examples_corpus()
        assert time.perf_counter() - start < 60.0

    def test_options_ignored_by_other_entries(self):
        r = corpus.run_example("belt-chords", i=3)
        assert r["ok"]
