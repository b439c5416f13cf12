import pytest

from foldcc.errors import NotDim3, NotFCC
from foldcc.folding import coloring_from, find_folding
from foldcc.generators import (cycle_graph, davis_X, hemispherex, product,
                               torus_grid)
from foldcc.geodesic import rank_one_certificate
from foldcc.rank import (_bounded_search, _step_d_search, detect_rank3,
                         detect_rank_general, splitting_bipartitions,
                         verify_bipartition)


class TestSplittingBipartitions:
    def test_torus_accepts_all_three(self, corpus3):
        entry = corpus3[0]  # torus(4, 4, 4)
        bips = splitting_bipartitions(entry.complex, entry.coloring)
        assert len(bips) == 3
        for T, S in bips:
            assert verify_bipartition(entry.complex, entry.coloring, T, S)
            assert verify_bipartition(entry.complex, entry.coloring, S, T)

    def test_hemispherex_accepts_none(self, x_hemispherex):
        assert splitting_bipartitions(
            x_hemispherex.complex, x_hemispherex.coloring) == []

    def test_product_separates_cycle_factor(self, double_arc_meta):
        X = double_arc_meta[1].complex
        prod = product(X, cycle_graph(4))
        coloring = coloring_from(find_folding(prod))
        cyc_color = coloring.of_pair(0, 1)
        bips = splitting_bipartitions(prod, coloring)
        assert len(bips) == 1
        T, S = bips[0]
        assert (set(T) == {cyc_color}) or (set(S) == {cyc_color})

    def test_rejected_bipartition_fails_verification(self, x_hemispherex):
        assert not verify_bipartition(
            x_hemispherex.complex, x_hemispherex.coloring, {1}, {2, 3})


class TestDetectRank3:
    def test_torus_splits(self, corpus3):
        entry = corpus3[0]
        report = detect_rank3(entry.complex, folding=entry.folding,
                              assume_fcc=True)
        assert report.verdict == "split"
        assert len(report.all_bipartitions) == 3
        assert report.exit_code() == 0

    def test_hemispherex_rank_one(self, x_hemispherex):
        report = detect_rank3(x_hemispherex.complex,
                              folding=x_hemispherex.folding, assume_fcc=True)
        assert report.verdict == "rank-one"
        assert rank_one_certificate(x_hemispherex.complex,
                                    x_hemispherex.coloring,
                                    report.witness_path)
        assert report.exit_code() == 1

    def test_product_splits(self, corpus3):
        entry = next(e for e in corpus3 if "x_C" in e.name)
        report = detect_rank3(entry.complex, folding=entry.folding,
                              assume_fcc=True)
        assert report.verdict == "split"

    def test_wrong_dimension(self, torus44):
        with pytest.raises(NotDim3):
            detect_rank3(torus44.complex)

    def test_non_fcc_rejected(self):
        with pytest.raises(NotFCC):
            detect_rank3(torus_grid((5, 4, 4)))

    def test_diagnostics_fields(self, corpus3):
        entry = corpus3[0]
        report = detect_rank3(entry.complex, folding=entry.folding,
                              assume_fcc=True, diagnostics=True)
        assert report.simv_summary is not None
        assert set(report.covering_table) == {1, 2, 3}
        text = report.render()
        assert text.startswith("rank-report v1\n")
        assert "verdict = split" in text


class TestStepD:
    def test_direct_construction_on_hemispherex(self, x_hemispherex):
        path = _step_d_search(x_hemispherex.complex, x_hemispherex.coloring)
        assert path is not None
        assert rank_one_certificate(x_hemispherex.complex,
                                    x_hemispherex.coloring, path)


class TestDetectGeneral:
    def test_dimension_one_graph(self, corpus1):
        for entry in corpus1:
            report = detect_rank_general(entry.complex, folding=entry.folding,
                                         assume_fcc=True)
            assert report.verdict == "rank-one"
            assert rank_one_certificate(entry.complex, entry.coloring,
                                        report.witness_path)

    def test_dimension_two_strict_pi(self, x_double_arc):
        report = detect_rank_general(x_double_arc.complex,
                                     folding=x_double_arc.folding,
                                     assume_fcc=True)
        assert report.verdict == "rank-one"
        assert report.certificate == "strict-pi"

    def test_torus_any_dimension_splits(self, corpus2):
        entry = corpus2[0]
        report = detect_rank_general(entry.complex, folding=entry.folding,
                                     assume_fcc=True)
        assert report.verdict == "split"
        report4 = detect_rank_general(torus_grid((4, 4, 4, 4)))
        assert report4.verdict == "split"
        assert len(report4.all_bipartitions) == 7

    def test_bounded_search_finds_graph_loop(self, corpus1):
        entry = corpus1[1]  # C6
        path = _bounded_search(entry.complex, entry.coloring, cap=12)
        assert path is not None
        assert rank_one_certificate(entry.complex, entry.coloring, path)

    def test_bounded_search_exhausts_on_flat_torus(self, torus44):
        # straight lines are the only local geodesics in a grid torus, so
        # no closed path covers both colors
        assert _bounded_search(torus44.complex, torus44.coloring, cap=16) is None


class TestWitnessSoundness:
    def test_rank_one_witnesses_certify(self, corpus3):
        for entry in corpus3:
            if entry.expect != "rank-one":
                continue
            report = detect_rank3(entry.complex, folding=entry.folding,
                                  assume_fcc=True)
            assert rank_one_certificate(entry.complex, entry.coloring,
                                        report.witness_path)

    def test_split_witnesses_reverify(self, corpus3):
        for entry in corpus3:
            if entry.expect != "split":
                continue
            report = detect_rank3(entry.complex, folding=entry.folding,
                                  assume_fcc=True)
            T, S = report.bipartition
            assert verify_bipartition(entry.complex, entry.coloring, T, S)
