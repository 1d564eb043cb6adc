from __future__ import annotations

import random
from collections import Counter
from fractions import Fraction

import pytest

from _suite import random_mst_instance
from bicrit.core import CostPair, SolutionRecord
from bicrit.errors import CapExceeded
from bicrit.oracle import (
    EnumerationCap,
    enumerate_all,
    exact_opt_budget,
    exact_pareto,
    verify_budget,
    verify_pareto_coverage,
)
from bicrit.pareto import ParetoSet
from bicrit.problems import BiweightedGraph, VertexWeightedGraph, adapter_for


def images_of(records):
    return Counter((r.image.f1, r.image.f2) for r in records)


class TestEnumerate:
    def test_tree_images(self, ex1, ex2, single_edge):
        assert images_of(enumerate_all(ex1)) == Counter({(4, 2): 1, (2, 4): 1, (4, 4): 1})
        assert images_of(enumerate_all(ex2)) == Counter({(4, 2): 1, (3, 3): 2})
        assert len(enumerate_all(single_edge)) == 1

    def test_path_enumeration(self):
        graph = BiweightedGraph(
            4,
            [(0, 1, (1, 1)), (1, 3, (1, 1)), (0, 2, (2, 3)), (2, 3, (1, 2)), (0, 3, (3, 1))],
            kind="path",
            source=0,
            sink=3,
        )
        tokens = {r.token for r in enumerate_all(graph)}
        assert tokens == {(0, 1), (2, 3), (4,)}

    def test_cut_enumeration(self):
        graph = BiweightedGraph(
            3, [(0, 1, (1, 4)), (1, 2, (4, 1))], kind="cut", source=0, sink=2
        )
        tokens = {r.token for r in enumerate_all(graph)}
        assert tokens == {frozenset({0}), frozenset({0, 1})}

    def test_cover_enumeration(self):
        graph = VertexWeightedGraph(2, ((0, 1),), ((1, 1), (2, 2)))
        tokens = {r.token for r in enumerate_all(graph)}
        assert tokens == {frozenset({0}), frozenset({1}), frozenset({0, 1})}

    def test_no_duplicates_and_tokens_evaluate(self):
        rng = random.Random(19)
        inst = random_mst_instance(rng, 5, extra=2)
        records = enumerate_all(inst)
        tokens = [r.token for r in records]
        assert len(tokens) == len(set(tokens))
        adapter = adapter_for(inst)
        for rec in records:
            assert adapter.evaluate(inst, rec.token) == rec.image
            assert rec.produced_at is None

    def test_caps(self, ex1):
        with pytest.raises(CapExceeded):
            enumerate_all(ex1, EnumerationCap(max_nodes=2))
        with pytest.raises(CapExceeded):
            enumerate_all(ex1, EnumerationCap(max_solutions=2))


class TestOptBudget:
    def test_examples(self, ex2):
        assert exact_opt_budget(ex2, Fraction(3)) == 3
        assert exact_opt_budget(ex2, Fraction(4)) == 2
        assert exact_opt_budget(ex2, Fraction(1)) is None

    def test_monotone_nonincreasing_in_budget(self, ex1):
        budgets = sorted({r.image.f1 for r in enumerate_all(ex1)})
        values = [exact_opt_budget(ex1, b) for b in budgets]
        for earlier, later in zip(values, values[1:]):
            assert later <= earlier


class TestExactPareto:
    def test_examples(self, ex1, ex2, single_edge):
        assert set(images_of(exact_pareto(ex1).records)) == {(4, 2), (2, 4)}
        assert set(images_of(exact_pareto(ex2).records)) == {(4, 2), (3, 3)}
        assert len(exact_pareto(single_edge).records) == 1

    def test_pareto_covers_everything_at_unit_factors(self, ex1):
        records = enumerate_all(ex1)
        assert verify_pareto_coverage(exact_pareto(ex1), records, 1, 1)


def _record(f1, f2):
    return SolutionRecord(token=(f1, f2), image=CostPair(f1, f2))


class TestVerifyBudget:
    def test_examples(self):
        assert verify_budget(_record(4, 2), 4, Fraction(1), 1, 2)
        assert not verify_budget(_record(4, 2), 1, Fraction(1), 1, 2)
        assert verify_budget(_record(3, 3), 3, Fraction(1), 1, 3)

    def test_variant_factors(self):
        rec = _record(4, 2)
        assert verify_budget(rec, 4, Fraction(1), 1, 2, factors=(1, 1))
        assert not verify_budget(rec, 4, Fraction(1), 1, 2, factors=(Fraction(1, 2), 1))


class TestVerifyCoverage:
    def test_examples(self, ex2):
        records = enumerate_all(ex2)
        exact = exact_pareto(ex2)
        assert verify_pareto_coverage(exact, records, 1, 1)
        only_heavy = ParetoSet((_record(4, 2),), 1, 1)
        assert not verify_pareto_coverage(only_heavy, records, 1, 1)
        assert verify_pareto_coverage(records, records, 1, 1)
