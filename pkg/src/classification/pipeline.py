"""
Shared obstruction -> Gröbner pipeline for one relation matrix.
"""
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from loguru import logger

from config.settings import GROEBNER
from src.algebra import MonomialOrder, OrderKind, Polynomial, VariableSet, dedupe_up_to_scalar
from src.groebner import GroebnerResult, groebner_basis, sort_ascending
from src.linalg import PolyMatrix
from src.operads import QuadraticSpace, self_dual_obstruction
from src.storage import Verdict


@dataclass(frozen=True)
class PipelineConfig:
    """Gröbner configuration of a classification run"""
    order: str = GROEBNER["order"]
    ranking: str = GROEBNER["ranking"]
    strategy: str = GROEBNER["strategy"]
    workers: int = 1
    verify_signatures: bool = True
    verify_families: bool = True

    def make_order(self, variables: VariableSet) -> MonomialOrder:
        """
        Ranking schemes: "column-major" keeps the ring order (first variable
        greatest), "reverse" flips it; anything else is a comma-separated list.
        """
        if self.ranking == "column-major":
            ranking: Sequence[str] = variables.names
        elif self.ranking == "reverse":
            ranking = tuple(reversed(variables.names))
        else:
            listed = [n.strip() for n in self.ranking.split(",") if n.strip()]
            ranking = [n for n in listed if n in variables] + [n for n in variables.names if n not in listed]
        return MonomialOrder(OrderKind(self.order), variables, tuple(ranking))

    def describe(self) -> dict:
        return {"order": self.order, "ranking": self.ranking, "strategy": self.strategy}


def obstruction_generators(T: PolyMatrix, order: MonomialOrder) -> List[Polynomial]:
    """Distinct nonzero entries of T up to scalar, monic and ascending"""
    return sort_ascending(dedupe_up_to_scalar(T.entries(), order), order)


@dataclass
class PipelineOutcome:
    obstruction: PolyMatrix
    verdict: Verdict
    order: MonomialOrder
    groebner: Optional[GroebnerResult] = None
    constants: List[Tuple[int, int, object]] = field(default_factory=list)


def run_obstruction_pipeline(R: PolyMatrix, config: PipelineConfig, label: str = "") -> PipelineOutcome:
    """
    Build T for a rank-4 relation matrix, reject on a nonzero constant entry,
    otherwise decide the obstruction ideal with a Gröbner basis.
    """
    order = config.make_order(R.variables)
    T = self_dual_obstruction(QuadraticSpace(R, canonical=True))
    constants = T.constant_entries()
    if constants:
        i, j, c = constants[0]
        logger.info(f"[Classifier] {label}: constant {c} at ({i},{j}) in T, structurally rejected")
        return PipelineOutcome(T, Verdict.STRUCTURALLY_REJECTED, order, None, constants)

    generators = obstruction_generators(T, order)
    result = groebner_basis(generators, order, config.strategy, config.workers)
    verdict = Verdict.UNIT_IDEAL if result.is_unit() else Verdict.SELF_DUAL_FAMILY
    logger.info(f"[Classifier] {label}: {verdict.value}, |GB| = {result.size}")
    return PipelineOutcome(T, verdict, order, result)
