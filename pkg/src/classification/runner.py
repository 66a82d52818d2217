"""
Fan-out of classification cases over a process pool, merged by case id.
"""
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Callable, Dict, List, Optional, Sequence

from loguru import logger
from tqdm import tqdm

from src.errors import UnknownNameError
from src.storage import CaseReport, ClassificationSummary, Mode
from .associative import assoc_case, assoc_subsets
from .nonassociative import ALL_CASES, nonassoc_case
from .one_operation import one_operation_classification
from .pipeline import PipelineConfig

_CASE_RUNNERS: Dict[Mode, Callable[[int, PipelineConfig], CaseReport]] = {
    Mode.NONASSOC: nonassoc_case,
    Mode.ASSOC: assoc_case,
}


def case_ids_for(mode: Mode) -> List[int]:
    if mode is Mode.NONASSOC:
        return list(range(1, ALL_CASES + 1))
    if mode is Mode.ASSOC:
        return [s.case_number for s in assoc_subsets()]
    return []


def _run_case(mode: Mode, case_id: int, config: PipelineConfig) -> CaseReport:
    return _CASE_RUNNERS[mode](case_id, config)


def run_cases(
    mode: Mode,
    case_ids: Sequence[int],
    config: PipelineConfig,
    jobs: int = 1,
    progress: bool = True,
) -> List[CaseReport]:
    """Run cases, in-process or over `jobs` worker processes; sorted by case id"""
    reports: Dict[int, CaseReport] = {}
    failures: Dict[int, Exception] = {}
    bar = tqdm(total=len(case_ids), desc=f"classify {mode.value}", disable=not progress, leave=False)

    if jobs <= 1 or len(case_ids) <= 1:
        for case_id in case_ids:
            reports[case_id] = _run_case(mode, case_id, config)
            bar.update(1)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            futures = {executor.submit(_run_case, mode, cid, config): cid for cid in case_ids}
            for future in as_completed(futures):
                cid = futures[future]
                try:
                    reports[cid] = future.result()
                except Exception as e:
                    logger.error(f"[Runner] {mode.value} case {cid} failed: {e}")
                    failures[cid] = e
                bar.update(1)
    bar.close()

    if failures:
        first = min(failures)
        raise failures[first]
    return [reports[cid] for cid in sorted(reports)]


def run_classification(
    mode: Mode,
    case_id: Optional[int] = None,
    config: Optional[PipelineConfig] = None,
    jobs: int = 1,
    progress: bool = True,
) -> ClassificationSummary:
    config = config or PipelineConfig()
    summary = ClassificationSummary(mode, config.describe())
    if mode is Mode.ONE_OP:
        summary.solutions = one_operation_classification()
        return summary

    ids = case_ids_for(mode)
    if case_id is not None:
        if case_id not in ids:
            raise UnknownNameError(f"no {mode.value} case {case_id} (expected 1..{len(ids)})")
        ids = [case_id]
    logger.info(f"[Runner] {mode.value}: {len(ids)} cases on {max(jobs, 1)} workers")
    summary.cases = run_cases(mode, ids, config, jobs, progress)
    logger.info(f"[Runner] {mode.value}: {summary.counts()}")
    return summary
