"""Weight functions for tableaux, U-turn ASMs (via compass codes), and
Gelfand-Tsetlin patterns, all producing exact Laurent polynomials.

Scheme ids (the CLI speaks these names):

  T_DEFORMED   ordinary tableau, k -> x_k, k' -> t^2/x_k
  QT_DEFORMED  primed shifted tableau, k/k'/kbar/kbar' -> x, y, t^2/x, t^2/y
  ST_XY        shifted tableau, three-case row/column rule over x_k, y_k
  CPM_XY       compass matrix, WE -> x_k+y_k, NW -> y_k, SW -> x_k (bars inverted)
  CPM_XY_ALT   compass matrix, the sum factor moved from WE to NS plus a
               first-column correction factor
  GT_XY        pattern, saturation-mark factors times x-exponent differences
  ST_Q         ST_XY specialised along y_k = q x_k
  CPM_Q_PLAIN  CPM_XY specialised along y_k = q x_k (prefactor 1)
  CPM_Q_NORM   rebalanced q-weighting with prefactor (1+q)^n / q^(n(n+1)/2)
  GT_Q         GT_XY specialised along y_k = q x_k
  GT_QX        the statistics form (1+q)^B q^(Ro+Le) x^xwgt

The two q-weighting ambiguities keep switchable variants: wgt_st_q takes the
neighbour convention ("below" is the specialisation-consistent default,
"above" the rejected alternative) and wgt_cpm takes the CPM_Q_NORM prefactor
mode ("full" default, "literal" the rejected (1+q)/q^(n(n+1)/2)).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List

from .algebra import QVAR, TVAR, LaurentPoly, xvar, yvar
from .matrices import (
    CompassPointMatrix,
    SympGTPattern,
    UTurnASM,
    classify_blr,
)
from .tableaux import PrimedShiftedTableau, ShiftedTableau, SymplecticTableau, cell_cases

SCHEMES = (
    "T_DEFORMED", "QT_DEFORMED", "ST_XY", "CPM_XY", "CPM_XY_ALT", "GT_XY",
    "ST_Q", "CPM_Q_PLAIN", "CPM_Q_NORM", "GT_Q", "GT_QX",
)


class UnknownSchemeError(ValueError):
    pass


class LemmaViolationError(ValueError):
    """A compass-row counting identity failed (signals a bug upstream)."""


def _x(k: int, e: int = 1) -> LaurentPoly:
    return LaurentPoly.variable(xvar(k), e)


def _y(k: int, e: int = 1) -> LaurentPoly:
    return LaurentPoly.variable(yvar(k), e)


def _q(e: int = 1) -> LaurentPoly:
    return LaurentPoly.variable(QVAR, e)


def _t2() -> LaurentPoly:
    return LaurentPoly.variable(TVAR, 2)


ONE = LaurentPoly.const(1)


# -- tableau weights ----------------------------------------------------------


def wgt_t(t: SymplecticTableau, deformed: bool = False) -> LaurentPoly:
    """Product over cells: k -> x_k, kbar -> t^2 x_k^-1 (t = 1 if undeformed)."""
    out = ONE
    for _, _, code in t.cells():
        k = (code + 1) // 2
        if code % 2:
            out = out * _x(k)
        else:
            out = out * (_t2() * _x(k, -1) if deformed else _x(k, -1))
    return out


def wgt_qt(qt: PrimedShiftedTableau, deformed: bool = False) -> LaurentPoly:
    """Product over cells: k, k', kbar, kbar' -> x_k, y_k, t^2/x_k, t^2/y_k."""
    out = ONE
    for _, _, code, primed in qt.cells():
        k = (code + 1) // 2
        base = _y(k, 1) if primed else _x(k, 1)
        if code % 2 == 0:  # barred: invert, and deform by t^2
            base = _y(k, -1) if primed else _x(k, -1)
            if deformed:
                base = _t2() * base
        out = out * base
    return out


def _st_case_factor_xy(code: int, case: str) -> LaurentPoly:
    k = (code + 1) // 2
    e = 1 if code % 2 else -1
    if case == "left":
        return _x(k, e)
    if case == "below":
        return _y(k, e)
    return _x(k, e) + _y(k, e)


def wgt_st(st: ShiftedTableau) -> LaurentPoly:
    """Three-case rule: equal-left keeps x, equal-below keeps y, free cells
    take x + y; barred letters use the inverted variables."""
    out = ONE
    for code, case in cell_cases(st):
        out = out * _st_case_factor_xy(code, case)
    return out


def primed_weight_sum(st: ShiftedTableau, deformed: bool = False) -> LaurentPoly:
    """Sum of wgt_qt over all primings of st, computed cell by cell.

    A free cell contributes x + y (times t^2 when barred and deformed);
    forced cells contribute their single weight.  Equals wgt_st at t = 1.
    """
    out = ONE
    for code, case in cell_cases(st):
        factor = _st_case_factor_xy(code, case)
        if deformed and code % 2 == 0:
            factor = _t2() * factor
        out = out * factor
    return out


def _st_case_factor_q(code: int, case: str) -> LaurentPoly:
    k = (code + 1) // 2
    e = 1 if code % 2 else -1
    qe = _q(e)
    if case == "left":
        return _x(k, e)
    if case in ("below", "above"):
        return qe * _x(k, e)
    return (ONE + qe) * _x(k, e)


def wgt_st_q(st: ShiftedTableau, neighbour: str = "below") -> LaurentPoly:
    """The y_k = q x_k specialisation of wgt_st.

    neighbour="below" matches that substitution cell for cell; "above" is the
    alternative reading (the doubled factor moves to the lower cell of each
    vertical pair) kept only so reports can evaluate it.
    """
    if neighbour == "below":
        cases = cell_cases(st)
    elif neighbour == "above":
        cases = []
        for i, col, code in st.cells():
            if st.at(i, col - 1) == code:
                cases.append((code, "left"))
            elif st.at(i - 1, col) == code:
                cases.append((code, "above"))
            else:
                cases.append((code, "free"))
    else:
        raise ValueError(f"unknown neighbour convention {neighbour!r}")
    out = ONE
    for code, case in cases:
        out = out * _st_case_factor_q(code, case)
    return out


# -- compass-point weights ------------------------------------------------------

_TURN_START = frozenset(("WE", "SW", "NW"))


def chi_turn(c: CompassPointMatrix, i: int) -> int:
    """1 if row i starts a horizontal strip: c_(i,1) in {WE, SW, NW}."""
    return 1 if c.entries[i - 1][0] in _TURN_START else 0


def _cpm_entry_factor(scheme: str, code: str, k: int, barred: bool) -> LaurentPoly:
    e = -1 if barred else 1
    if scheme == "CPM_XY":
        table = {"WE": _x(k, e) + _y(k, e), "NW": _y(k, e), "SW": _x(k, e)}
    elif scheme == "CPM_XY_ALT":
        table = {"NS": _x(k, e) + _y(k, e), "NW": _y(k, e), "SW": _x(k, e)}
    elif scheme == "CPM_Q_PLAIN":
        table = {"WE": (ONE + _q(e)) * _x(k, e), "NW": _q(e) * _x(k, e),
                 "SW": _x(k, e)}
    elif scheme == "CPM_Q_NORM":
        if barred:
            table = {"WE": _x(k, e), "NS": ONE + _q(), "NE": _q(), "NW": _x(k, e),
                     "SW": _x(k, e)}
        else:
            table = {"WE": _x(k, e), "NS": ONE + _q(), "NW": _q() * _x(k, e),
                     "SW": _x(k, e)}
    else:
        raise UnknownSchemeError(scheme)
    return table.get(code, ONE)


def cpm_q_norm_prefactor(n: int, c0_mode: str = "full") -> LaurentPoly:
    """(1+q)^n / q^(n(n+1)/2), or the rejected literal (1+q) / q^(n(n+1)/2)."""
    exponent = n if c0_mode == "full" else 1
    if c0_mode not in ("full", "literal"):
        raise ValueError(f"unknown c0 mode {c0_mode!r}")
    return (ONE + _q()) ** exponent * _q(-(n * (n + 1)) // 2)


def wgt_cpm(a: UTurnASM, scheme: str, c0_mode: str = "full") -> LaurentPoly:
    """Weight of a U-turn ASM through its compass-point recoding."""
    from .bijections import uasm_to_cpm

    if scheme not in ("CPM_XY", "CPM_XY_ALT", "CPM_Q_PLAIN", "CPM_Q_NORM"):
        raise UnknownSchemeError(scheme)
    c = uasm_to_cpm(a)
    out = cpm_q_norm_prefactor(a.n, c0_mode) if scheme == "CPM_Q_NORM" else ONE
    for i, row in enumerate(c.entries, start=1):
        k = (i + 1) // 2
        barred = i % 2 == 0
        for code in row:
            out = out * _cpm_entry_factor(scheme, code, k, barred)
        if scheme == "CPM_XY_ALT" and row[0] in _TURN_START:
            out = out * (_x(k, -1 if barred else 1) + _y(k, -1 if barred else 1))
    return out


# -- pattern weights --------------------------------------------------------------


def wgt_gtp(g: SympGTPattern, scheme: str) -> LaurentPoly:
    """Saturation-mark weighting of a pattern (xy or q-specialised form)."""
    if scheme not in ("GT_XY", "GT_Q"):
        raise UnknownSchemeError(scheme)
    marks = classify_blr(g)
    out = ONE
    for k in range(1, g.n + 1):
        for j in range(1, k + 1):
            u = marks.unbarred[(k, j)]
            b = marks.barred[(k, j)]
            eu = g.m(k, j) - g.mb(k - 1, j) - 1
            eb = g.mb(k, j) - g.m(k, j) - 1
            if scheme == "GT_XY":
                uf = {"B": _x(k) + _y(k), "L": _x(k), "R": _y(k)}[u]
                bf = {"B": _x(k, -1) + _y(k, -1), "L": _x(k, -1), "R": _y(k, -1)}[b]
                out = out * uf * _x(k, eu) * bf * _x(k, -eb)
            else:
                qpow = (1 if u == "R" else 0) + (1 if b == "L" else 0) - 1
                factor = _q(qpow)
                if u == "B":
                    factor = factor * (ONE + _q())
                if b == "B":
                    factor = factor * (ONE + _q())
                out = out * factor * _x(k, eu - eb)
    return out


@dataclass(frozen=True)
class GTStatistics:
    """The counting statistics of a pattern and its x-exponent vector."""

    b: int
    r_odd: int
    l_even: int
    x_exponents: Dict[int, int]


def gt_statistics(g: SympGTPattern) -> GTStatistics:
    """B counts doubly-strict positions (diagonal pairs jointly), R_o counts
    unbarred right-saturations, L_e barred left-saturations; exponents are
    sum_j (2 m(k,j) - mb(k,j) - mb(k-1,j)) per level."""
    marks = classify_blr(g)
    b = r_odd = l_even = 0
    exps: Dict[int, int] = {}
    for k in range(1, g.n + 1):
        for j in range(1, k):
            b += (marks.unbarred[(k, j)] == "B") + (marks.barred[(k, j)] == "B")
        b += (marks.unbarred[(k, k)] == "B") and (marks.barred[(k, k)] == "B")
        for j in range(1, k + 1):
            r_odd += marks.unbarred[(k, j)] == "R"
            l_even += marks.barred[(k, j)] == "L"
        exps[k] = sum(
            2 * g.m(k, j) - g.mb(k, j) - g.mb(k - 1, j) for j in range(1, k + 1)
        )
    return GTStatistics(b, r_odd, l_even, exps)


def le_statistic_setbuilder(g: SympGTPattern) -> int:
    """The narrower L_e that stops at j = k-1 (evaluated for reports only)."""
    marks = classify_blr(g)
    return sum(
        marks.barred[(k, j)] == "L" for k in range(1, g.n + 1) for j in range(1, k)
    )


def qx_weight(g: SympGTPattern) -> LaurentPoly:
    """(1+q)^B q^(Ro+Le) x^xwgt as an expanded polynomial."""
    s = gt_statistics(g)
    mono = LaurentPoly.monomial({xvar(k): e for k, e in s.x_exponents.items() if e})
    return (ONE + _q()) ** s.b * _q(s.r_odd + s.l_even) * mono


def qx_weight_factored(g: SympGTPattern) -> str:
    """Display form like ``(1+q)^7 * q^7 * x2 * x4^-4``."""
    s = gt_statistics(g)
    parts: List[str] = []
    if s.b == 1:
        parts.append("(1+q)")
    elif s.b > 1:
        parts.append(f"(1+q)^{s.b}")
    e = s.r_odd + s.l_even
    if e == 1:
        parts.append("q")
    elif e > 1:
        parts.append(f"q^{e}")
    for k in sorted(s.x_exponents):
        exp = s.x_exponents[k]
        if exp == 1:
            parts.append(f"x{k}")
        elif exp:
            parts.append(f"x{k}^{exp}")
    return " * ".join(parts) if parts else "1"


# -- compass-row counting identities ------------------------------------------


def lemma_counts(c: CompassPointMatrix) -> List[Dict[str, int]]:
    """Per-level compass-row counts with their four identities asserted:

    #NS_k + #NW_k + #NE_k = k-1,          #WE_k' + #NW_k' + #NE_k' = k,
    #WE_i = #NS_i + chi(P_i) for every row i,   chi(P_k) + chi(P_k') = 1.
    """
    report: List[Dict[str, int]] = []
    for k in range(1, c.n + 1):
        plain, bar = 2 * k - 1, 2 * k
        entry = {
            "k": k,
            "ns_plain": c.row_count(plain, "NS"),
            "nw_plain": c.row_count(plain, "NW"),
            "ne_plain": c.row_count(plain, "NE"),
            "we_plain": c.row_count(plain, "WE"),
            "ns_bar": c.row_count(bar, "NS"),
            "nw_bar": c.row_count(bar, "NW"),
            "ne_bar": c.row_count(bar, "NE"),
            "we_bar": c.row_count(bar, "WE"),
            "chi_plain": chi_turn(c, plain),
            "chi_bar": chi_turn(c, bar),
        }
        if entry["ns_plain"] + entry["nw_plain"] + entry["ne_plain"] != k - 1:
            raise LemmaViolationError(f"level {k}: unbarred north-count != k-1")
        if entry["we_bar"] + entry["nw_bar"] + entry["ne_bar"] != k:
            raise LemmaViolationError(f"level {k}: barred west/north-count != k")
        if entry["we_plain"] != entry["ns_plain"] + entry["chi_plain"]:
            raise LemmaViolationError(f"row {plain}: #WE != #NS + chi(P)")
        if entry["we_bar"] != entry["ns_bar"] + entry["chi_bar"]:
            raise LemmaViolationError(f"row {bar}: #WE != #NS + chi(P)")
        if entry["chi_plain"] + entry["chi_bar"] != 1:
            raise LemmaViolationError(f"level {k}: chi(P_k) + chi(P_k') != 1")
        report.append(entry)
    return report
