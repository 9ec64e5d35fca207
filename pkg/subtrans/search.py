"""
subtrans/search.py
==================

TupleSearcher  –  decides every tuple of a group against one configuration,
                  keeping α fixed and caching per-element work.

search_tuples  –  functional wrapper returning the witnessing tuples.

The fast path compares rank M(α) with rank of the stacked (g_k − I), which
equals n − dim Fix. Only tuples that drop rank are decided in full, and
each of those is verified on the original coordinates before it is kept.
"""

from core.entities import OUTSIDE_HULL, AlphaCoordinates, PointConfiguration, SubtransDecision
from core.errors import CertificateFailure, OutsideHullError
from core.exactlin import RationalMatrix, rank, vstack
from core.log import log
from core.settings import SEARCH_REPORT_INTERVAL, TUPLE_SPACE_CAP
from geometry.configuration import phi
from symmetry.matrix_group import ElementTuple, FiniteMatrixGroup
from symmetry.tuples import TupleMode, enumerate_tuples

from .decision import decide_configuration, verify_witness


class TupleSearcher:
    """
    Hunts for element tuples that make ``config`` affinely subtransitive.

    For each new tuple:
        * assemble M(α) from pre-scaled α_k (g − I) blocks
        * compare its rank with the cached rank of the fixed-point stack
        * on a rank drop, run the full decision and re-verify it
    """

    def __init__(self, config: PointConfiguration, group: FiniteMatrixGroup,
                 report_interval: int = SEARCH_REPORT_INTERVAL):
        alpha = phi(config)
        if alpha is OUTSIDE_HULL:
            raise OutsideHullError()
        self.config = config
        self.group = group
        self.alpha: AlphaCoordinates = alpha
        self.report_interval = report_interval

        identity = RationalMatrix.identity(group.ambient_dim)
        self._shifted = [g.matrix - identity for g in group.elements]
        # _scaled[k][i] = α_k (g_i − I)
        self._scaled = [[D.scale(a) for D in self._shifted] for a in alpha]
        self._fix_rank: dict[tuple, int] = {}
        self.checked = 0

    @property
    def arity(self) -> int:
        return self.alpha.d + 1

    def log(self, msg: str):
        log(msg, tag="SEARCH")

    def fix_rank(self, indices: tuple) -> int:
        """rank of the stacked (g − I) = n − dim Fix; depends only on the index set."""
        key = tuple(sorted(set(indices)))
        if key not in self._fix_rank:
            self._fix_rank[key] = rank(vstack([self._shifted[i] for i in key]))
        return self._fix_rank[key]

    def system_rank(self, indices: tuple) -> int:
        M = -self._shifted[indices[-1]]
        for k, i in enumerate(indices[:-1]):
            M = M + self._scaled[k][i]
        return rank(M)

    def drops_rank(self, t: ElementTuple) -> bool:
        return self.system_rank(t.indices) < self.fix_rank(t.indices)

    def decide(self, t: ElementTuple) -> SubtransDecision:
        decision = decide_configuration(self.config, t)
        if decision.is_witness and not verify_witness(decision.instance, decision.b, decision.A):
            raise CertificateFailure(decision.instance.describe(), "witness failed verification")
        return decision

    def run(self, mode: TupleMode = TupleMode(), first_only: bool = False,
            cap: int = TUPLE_SPACE_CAP, start: int = 0, stop: int | None = None
            ) -> list[tuple[ElementTuple, SubtransDecision]]:
        witnesses = []
        tuples = enumerate_tuples(self.group, self.arity, mode, cap=cap, start=start, stop=stop)
        for t in tuples:
            self.checked += 1
            if self.drops_rank(t):
                decision = self.decide(t)
                if decision.is_witness:
                    witnesses.append((t, decision))
                    self.log(f"✅  witness at tuple {list(t.indices)} ({self.group.label})")
                    if first_only:
                        break
            if self.checked % self.report_interval == 0:
                self.log(f"🟢  {self.checked} tuples checked, {len(witnesses)} witnesses")
        return witnesses


def search_tuples(
    config: PointConfiguration,
    group: FiniteMatrixGroup,
    mode: TupleMode = TupleMode(),
    first_only: bool = False,
    cap: int = TUPLE_SPACE_CAP,
) -> list[tuple[ElementTuple, SubtransDecision]]:
    """All witnessing tuples in enumeration order (or just the first)."""
    return TupleSearcher(config, group).run(mode, first_only=first_only, cap=cap)
