"""
Fixed-width text rendering of reports
"""
from typing import List, Optional, Sequence

from src.algebra import MonomialOrder
from src.groebner import GroebnerResult
from src.linalg import PolyMatrix
from src.operads import DualPairCheck, NamedOperadEntry, QuadraticSpace
from src.storage import CaseReport, ClassificationSummary, Mode, Verdict


def render_case_table(reports: Sequence[CaseReport]) -> str:
    lines = [f"{'case':>4}  {'pivots':<11}  {'params':>6}  {'verdict':<21}  {'|GB|':>5}"]
    for r in reports:
        gb = str(r.gb_size) if r.gb_size is not None else "-"
        lines.append(
            f"{r.case_id:>4}  {r.pivots_label():<11}  {r.parameter_count:>6}  {r.verdict.value:<21}  {gb:>5}"
        )
    return "\n".join(lines)


def render_summary_footer(summary: ClassificationSummary) -> str:
    counts = summary.counts()
    lines = ["  ".join(f"{v.value}: {counts[v.value]}" for v in Verdict)]

    checked = [r for r in summary.cases if r.signature_verified is not None]
    if checked:
        ok = sum(1 for r in checked if r.signature_verified)
        line = f"signatures verified: {ok}/{len(checked)}"
        from_proof = [str(r.case_id) for r in checked if r.signature_source == "proof"]
        if from_proof:
            line += f" (from the proof: case {', '.join(from_proof)})"
        lines.append(line)

    families = [(r.case_id, f) for r in summary.cases for f in r.families]
    if families:
        ok = sum(1 for _, f in families if f.verified and f.operad_level is not False)
        lines.append(f"families verified: {ok}/{len(families)}")
        for case_id, f in families:
            displayed = "" if f.displayed_matrix is None else f"  displayed matrix: {'match' if f.displayed_matrix else 'MISMATCH'}"
            status = "verified" if f.verified else "FAILED"
            lines.append(f"  case {case_id:>2}  {f.name:<28}  {status}{displayed}")
    return "\n".join(lines)


def render_one_operation(summary: ClassificationSummary) -> str:
    lines = [f"{'a':>3} {'b':>3}  {'relation':<18}  unital"]
    for s in summary.solutions:
        lines.append(f"{s.a:>3} {s.b:>3}  {s.relation:<18}  {'yes' if s.unital else 'no'}")
    return "\n".join(lines)


def render_classification(summary: ClassificationSummary) -> str:
    if summary.mode is Mode.ONE_OP:
        return render_one_operation(summary)
    return render_case_table(summary.cases) + "\n\n" + render_summary_footer(summary)


def render_matrix(M: PolyMatrix, order: MonomialOrder, labels: Optional[Sequence[str]] = None) -> str:
    lines = []
    if labels:
        lines.append("# " + ", ".join(labels))
    if M.nrows:
        lines.append(M.to_text(order))
    else:
        lines.append("(zero space)")
    return "\n".join(lines)


def render_dual(R: QuadraticSpace, dual: QuadraticSpace, order: MonomialOrder) -> str:
    header = f"rank: {R.rank} -> dual rank: {dual.rank}"
    return header + "\n" + render_matrix(dual.matrix, order, dual.labels)


def render_groebner(result: GroebnerResult) -> str:
    order = result.order
    lines = [
        f"order: {order.kind.value}  ranking: {' > '.join(order.ranking)}",
        f"basis ({result.size} elements):",
    ]
    lines.extend(f"  {g}" for g in result.formatted())
    data = result.to_dict()
    lines.append(f"greatest: {data['greatest']}")
    lines.append(f"greatest (lex): {data['greatestLex']}")
    if result.trace:
        lines.append(f"{'stage':>5}  {'before':>6}  {'eliminated':>10}  {'surviving':>9}  {'s-polys':>7}")
        for rec in result.trace:
            lines.append(
                f"{rec.stage:>5}  {rec.elements_before_self_reduce:>6}  {rec.eliminated_by_self_reduce:>10}  "
                f"{rec.surviving_generators:>9}  {rec.nonzero_s_polynomials:>7}"
            )
    return "\n".join(lines)


def render_catalog_entry(entry: NamedOperadEntry, dual_verified: Optional[bool], order: MonomialOrder) -> str:
    lines = [
        f"name: {entry.name}",
        f"description: {entry.description}",
        f"rank: {entry.rank}",
    ]
    if entry.expected_dual_name:
        status = "verified" if dual_verified else "NOT verified"
        lines.append(f"expected dual: {entry.expected_dual_name} ({status})")
    lines.append("relations:")
    lines.append(render_matrix(entry.relations.matrix, order, entry.relations.labels))
    lines.append("coefficient sums: " + ", ".join(str(s) for s in entry.unital_sums()))
    return "\n".join(lines)


def render_dual_checks(checks: List[DualPairCheck]) -> str:
    width = max((len(c.first) for c in checks), default=0)
    return "\n".join(
        f"{c.first:<{width}}  ->  {c.second}: {'verified' if c.verified else 'FAILED'}" for c in checks
    )
