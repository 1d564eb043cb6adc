"""Adversarial wrapper turning an exact oracle into a worst-case legal one.

Used to reproduce documented failures of approximation-oracle-driven
search and for negative tests: the wrapper answers every weighted-sum
query with the worst solution that an alpha-approximation contract still
permits, or with a scripted per-weight answer validated against that
contract.
"""

from __future__ import annotations

from dataclasses import replace
from fractions import Fraction

from ..core import ProblemAdapter, SolutionRecord, check_weight, rational


def adversarial_wrap(inner: ProblemAdapter, alpha, instance, script=None) -> ProblemAdapter:
    """Wrap ``inner`` as an alpha-approximate adversary bound to ``instance``.

    The default policy returns, among all feasible solutions whose
    weighted value is within alpha of the optimum, the one maximizing f1
    (ties by maximal f2, then enumeration order).  ``script`` maps a
    weight gamma to a forced token; scripted answers are validated to be
    alpha-legal.  The instance must be small enough to enumerate.
    """
    alpha = rational(alpha)
    if alpha < 1:
        raise ValueError("adversary factor must be >= 1")
    from ..oracle import enumerate_all  # local import: oracle depends on problems

    candidates = enumerate_all(instance)
    return _AdversarialAdapter(inner, alpha, instance, candidates, dict(script or {}))


class _AdversarialAdapter(ProblemAdapter):
    def __init__(self, inner, alpha, instance, candidates, script):
        self._inner = inner
        self._alpha = alpha
        self._instance = instance
        self._candidates = candidates
        self._script = {rational(g): token for g, token in script.items()}

    def alpha(self) -> Fraction:
        return self._alpha

    def evaluate(self, instance, token):
        return self._inner.evaluate(instance, token)

    def bounds(self, instance):
        return self._inner.bounds(instance)

    def solve_weighted_sum(self, instance, gamma) -> SolutionRecord:
        if instance != self._instance:
            raise ValueError("adversary is bound to the instance it was built for")
        gamma = check_weight(gamma)
        best = min(r.image.weighted(gamma) for r in self._candidates)
        legal = [r for r in self._candidates if r.image.weighted(gamma) <= self._alpha * best]
        forced = self._script.get(gamma)
        if forced is not None:
            chosen = next((r for r in legal if r.token == forced), None)
            if chosen is None:
                raise ValueError(f"scripted answer at gamma={gamma} is not alpha-legal")
        else:
            chosen = max(legal, key=lambda r: (r.image.f1, r.image.f2))
        return replace(chosen, produced_at=gamma)
