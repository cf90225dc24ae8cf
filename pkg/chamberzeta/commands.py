import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .algebra.qfrac import QFraction
from .algebra.qmode import QMode, SYMBOLIC
from .algebra.qpoly import ZERO, QPoly
from .algebra.ratfn import RationalFn
from .algebra.series import Series, series_from_ratfn, series_log_derivative
from .algebra.upoly import UPoly
from .closed_form import (closed_count, count_generating_function, inverse_zeta, one_minus,
                          zeta_closed_form)
from .determinant import (ASource, assemble_M, det_A_k0, det_exact, det_of_IminusuT, det_series,
                          direct_matrix, schur_matrix)
from .errors import InexactDivisionError, InvalidGalleryError, MismatchError
from .galleries import GalleryClass, classify, enumerate_closed, euler_product_series
from .quotient import (Box, enumerate_box, gallery_panel_types, is_type_one, out_transitions,
                       out_weight, steps_coherent)
from .report import Report
from .transfer import trace_stabilized

logger = logging.getLogger(__name__)

DEFAULT_DET_ORDER = 6
STABILIZATION_SIZES = ((4, 5), (5, 6))
STABILIZATION_ORDER = 9
ENCODING_MAX_SYMBOLIC = 4
ENCODING_MAX_NUMERIC = 6
FIXED_POINT_MAX_K = 4
LOCAL_BOX = Box(8, 8)


@dataclass
class RunConfig:
    """Validated command-line options of one invocation."""
    command: str
    q_modes: List[QMode] = field(default_factory=lambda: [SYMBOLIC])
    order: Optional[int] = None
    max_n: int = 6
    length: int = 6
    k: int = 1
    width: int = 1
    format: str = 'json'
    list_classes: bool = False
    workers: int = 1
    block_max_symbolic: int = 2
    block_max_numeric: int = 3
    euler_max_length: int = 12

    @property
    def q_mode(self) -> QMode:
        return self.q_modes[0]


def _inputs(cfg: RunConfig, **extra) -> Dict[str, object]:
    inputs = {"q": ",".join(m.label for m in cfg.q_modes)}
    inputs.update(extra)
    return inputs


def trace_exp_series(traces: Dict[int, QPoly], order: int) -> Series:
    """exp(sum_n Tr(T^n)/n u^n) truncated after u^order."""
    coeffs = [QFraction()] + [QFraction(traces[n], n) for n in range(1, order + 1)]
    return Series(coeffs, order).exp()


def factor_display(p: UPoly, q_mode: QMode) -> str:
    """Split off the factors of the closed form that divide p exactly."""
    q = q_mode.q()
    parts = []
    rest = p
    for coeff, exponent in ((q ** 2, 3), (q ** 3, 3), (q ** 3, 6), (q ** 4, 6)):
        factor = one_minus(coeff, exponent)
        power = 0
        while not rest.is_constant():
            try:
                rest = rest.exact_div(factor)
            except InexactDivisionError:
                break
            power += 1
        if power:
            parts.append(f"({factor})" + (f"^{power}" if power > 1 else ""))
    if rest != UPoly.one() or not parts:
        parts.append(f"({rest})")
    return " * ".join(parts)


def cmd_counts(cfg: RunConfig) -> Report:
    """N_n three ways: gallery enumeration, stabilized trace and the closed form."""
    q = cfg.q_mode
    report = Report("counts", _inputs(cfg, max_n=cfg.max_n))
    report.columns = ["n", "enum", "trace", "closed_form", "agree"]

    for n in range(1, cfg.max_n + 1):
        classes = classify(enumerate_closed(n, cfg.workers), q)
        enum = _weighted(classes)
        trace = trace_stabilized(n, q, cfg.workers)
        closed = closed_count(n, q)
        agree = enum == trace == closed
        report.rows.append([n, str(enum), str(trace), str(closed), agree])
        report.check(f"N_{n} enum = trace", enum, trace)
        report.check(f"N_{n} trace = closed form", trace, closed)
        logger.debug(f"N_{n} at {q}: {enum}")

    return report


def _weighted(classes: List[GalleryClass]) -> QPoly:
    total = ZERO
    for cls in classes:
        total = total + cls.weight * cls.period
    return total


def cmd_zeta(cfg: RunConfig) -> Report:
    q = cfg.q_mode
    order = 6 if cfg.order is None else cfg.order
    report = Report("zeta", _inputs(cfg, order=order))

    zeta = zeta_closed_form(q)
    series = series_from_ratfn(zeta, order)
    traces = {n: trace_stabilized(n, q, cfg.workers) for n in range(1, order + 1)}
    from_traces = trace_exp_series(traces, order)

    report.results = {
        "closed_form": str(zeta),
        "rational_function": zeta.to_json(),
        "series": str(series),
        "coefficients": [str(c) for c in series.coeffs],
        "traces": {str(n): str(t) for n, t in traces.items()},
    }
    report.check("closed form = exp(sum Tr(T^n)/n u^n)", series, from_traces)
    report.check("coefficients lie in Z[q]", series.is_integral(), True)
    return report


def cmd_det(cfg: RunConfig) -> Report:
    q, k, width = cfg.q_mode, cfg.k, cfg.width
    order = DEFAULT_DET_ORDER if cfg.order is None else cfg.order
    report = Report("det", _inputs(cfg, k=k, width=width, order=order))

    blocks = assemble_M(k, width, q)
    via_blocks = det_exact(blocks.assembled)
    via_direct = det_exact(direct_matrix(k, width, q))
    via_schur = det_exact(schur_matrix(k, width, q))
    inverse = series_from_ratfn(inverse_zeta(q), order).to_upoly()

    report.results = {
        "size": blocks.size,
        "nonzero": blocks.nonzero_count(),
        "determinant": str(via_blocks),
        "polynomial": via_blocks.to_json(),
        "degree": via_blocks.degree,
        "factored": factor_display(via_blocks, q),
        "truncated": str(via_blocks.truncate(order)),
        "inverse_zeta_truncated": str(inverse),
    }
    report.check("block matrix = I - uT from the weight table", via_blocks, via_direct)
    report.check("Schur complement A_{k,N} = M_{k,N}", via_schur, via_blocks)
    report.check(f"agrees with 1/Z up to u^{order}", via_blocks.truncate(order), inverse)
    return report


def cmd_euler(cfg: RunConfig) -> Report:
    q = cfg.q_mode
    length = cfg.length
    order = length if cfg.order is None else cfg.order
    report = Report("euler", _inputs(cfg, length=length, order=order))

    product = euler_product_series(length, q, order, cfg.workers)
    expected = series_from_ratfn(zeta_closed_form(q), order)
    report.results = {"series": str(product), "closed_form_series": str(expected)}
    report.check(f"Euler product = Z up to u^{order}", product, expected)
    return report


def cmd_galleries(cfg: RunConfig) -> Report:
    q = cfg.q_mode
    n = cfg.length
    report = Report("galleries", _inputs(cfg, length=n))

    walks = enumerate_closed(n, cfg.workers)
    classes = classify(walks, q)
    weighted = _weighted(classes)
    report.results = {
        "walks": len(walks),
        "classes": len(classes),
        "primitive": sum(1 for c in classes if c.is_primitive),
        "weighted_count": str(weighted),
    }
    if cfg.list_classes:
        report.results["list"] = [c.to_json() for c in classes]
        report.lines = [c.describe() for c in classes]
    report.check(f"N_{n} enum = trace", weighted, trace_stabilized(n, q, cfg.workers))
    return report


def _verify_counts(report: Report, q: QMode, order: int, workers: int) -> Dict[int, QPoly]:
    traces = {}
    for n in range(1, order + 1):
        classes = classify(enumerate_closed(n, workers), q)
        trace = trace_stabilized(n, q, workers)
        traces[n] = trace
        report.check(f"{q} N_{n} enum = trace = closed", (_weighted(classes), trace),
                     (closed_count(n, q), closed_count(n, q)))
        _verify_panels(report, q, n, classes)
    return traces


def _verify_panels(report: Report, q: QMode, n: int, classes: List[GalleryClass]):
    for cls in classes:
        cycle = list(cls.canonical)
        try:
            types = gallery_panel_types(cycle + cycle[:1])
        except InvalidGalleryError as e:
            report.fail(f"{q} panel types at length {n}", str(e))
            return
        steps = [(types[(j + 1) % n] - types[j]) % 3 for j in range(n)]
        if any(s != 1 for s in steps):
            report.fail(f"{q} panel types at length {n}", cls.describe())
            return
    report.check(f"{q} panel types cycle at length {n}", True, True)


def _verify_local(report: Report, q: QMode):
    qp = q.q()
    bad = []
    for c in enumerate_box(LOCAL_BOX):
        if q.specialize(out_weight(c)) != qp or not is_type_one(c):
            bad.append(str(c))
        elif not all(steps_coherent(c, target) for target, _ in out_transitions(c)):
            bad.append(str(c))
    report.check(f"{q} out-weight q and coherent steps on {LOCAL_BOX}", bad, [])


def _verify_series(report: Report, q: QMode, order: int, traces: Dict[int, QPoly], euler_max: int):
    zeta = zeta_closed_form(q)
    series = series_from_ratfn(zeta, order)
    report.check(f"{q} Z = exp(sum Tr/n u^n) to u^{order}", series, trace_exp_series(traces, order))
    report.check(f"{q} Z has coefficients in Z[q]", series.is_integral(), True)
    report.check(f"{q} u Z'/Z = counting function",
                 series_log_derivative(zeta, order),
                 series_from_ratfn(count_generating_function(q), order))

    length = min(order, euler_max)
    report.check(f"{q} Euler product to u^{length}",
                 euler_product_series(length, q, length),
                 series_from_ratfn(zeta, length))


def _verify_blocks(report: Report, q: QMode, det_limit: int):
    encoding_limit = ENCODING_MAX_SYMBOLIC if q.is_symbolic else ENCODING_MAX_NUMERIC
    mismatched = []
    for k in range(1, encoding_limit + 1):
        for width in range(1, encoding_limit + 1):
            if assemble_M(k, width, q).assembled != direct_matrix(k, width, q):
                mismatched.append((k, width))
    report.check(f"{q} M_{{k,N}} = I - uT entrywise for k, N <= {encoding_limit}", mismatched, [])

    # exact determinants by all three routes up to det_limit
    for k in range(1, det_limit + 1):
        for width in range(1, det_limit + 1):
            via_blocks = det_exact(assemble_M(k, width, q).assembled)
            report.check(f"{q} det M_{{{k},{width}}} = det(I - uT)",
                         via_blocks, det_exact(direct_matrix(k, width, q)))
            report.check(f"{q} det A_{{{k},{width}}} = det M_{{{k},{width}}}",
                         det_exact(schur_matrix(k, width, q)), via_blocks)
            if k == 1:
                report.check(f"{q} A_(1,0) formula at level {width}",
                             det_A_k0(1, q, ASource.LEVEL, width), RationalFn(via_blocks))


def _verify_limits(report: Report, q: QMode, order: int):
    try:
        det_of_IminusuT(q)
        report.check(f"{q} limit pipeline = 1/Z", True, True)
    except MismatchError as e:
        report.fail(f"{q} limit pipeline = 1/Z", str(e))

    if q.is_symbolic:
        return
    depth_order = min(order, STABILIZATION_ORDER)
    for k in range(1, FIXED_POINT_MAX_K + 1):
        width = depth_order // 3 + 2
        truncated = det_series(direct_matrix(k, width, q), depth_order)
        fixed = series_from_ratfn(det_A_k0(k, q, ASource.FIXED_POINT), depth_order).to_upoly()
        report.check(f"{q} fixed-point det(I - uT_{k}) to u^{depth_order}", fixed, truncated)

    inverse = series_from_ratfn(inverse_zeta(q), depth_order).to_upoly()
    for k, width in STABILIZATION_SIZES:
        report.check(f"{q} det M_{{{k},{width}}} = 1/Z to u^{depth_order}",
                     det_series(assemble_M(k, width, q).assembled, depth_order), inverse)


def cmd_verify(cfg: RunConfig) -> Report:
    """Run every cross-check for each configured q."""
    order = 9 if cfg.order is None else cfg.order
    report = Report("verify", _inputs(cfg, order=order))

    for q in cfg.q_modes:
        logger.info(f"Verifying at {q} up to order {order}")
        traces = _verify_counts(report, q, order, cfg.workers)
        _verify_series(report, q, order, traces, cfg.euler_max_length)
        _verify_local(report, q)
        limit = cfg.block_max_symbolic if q.is_symbolic else cfg.block_max_numeric
        _verify_blocks(report, q, limit)
        _verify_limits(report, q, order)

    passed = sum(1 for c in report.checks if c.passed)
    report.results = {"checks": len(report.checks), "passed": passed}
    return report


COMMANDS = {
    "counts": cmd_counts,
    "zeta": cmd_zeta,
    "det": cmd_det,
    "euler": cmd_euler,
    "galleries": cmd_galleries,
    "verify": cmd_verify,
}
