"""Command-line scenario runner with text and deterministic JSON reports.

Each subcommand assembles one of the packaged scenarios (or a user-supplied
presentation), runs the selected structural checks and center computations,
and emits a report. Reports carry a versioned ``schema`` field; JSON output
is canonically ordered so identical configurations produce byte-identical
bytes. The exit status is 0 when every selected check passes, 1 when any
check fails, and 2 for invalid configurations or rejected input data.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .algebra import HopfAlgebra, check_associativity, check_hopf
from .braid import (
    QuasiTriangular,
    braid,
    check_braiding_invertible,
    check_hexagons,
    check_module_algebra,
    cyclic_qt,
    tensor_module,
)
from .braided_hopf import (
    check_braided_hopf,
    nilpotent_line_hopf,
    trivial_braided_hopf,
)
from .centers import (
    CenterError,
    b_center,
    centralizer,
    compare_centers,
    cross_check_smash,
    element_degree,
    left_center,
    oracle_elements,
    recurrence_oracle,
    restrict_span,
    verify_on_tests,
)
from .constructions import (
    line_module_algebra,
    rb_algebra,
    smash_product,
    sweep_associativity,
    trivial_module_algebra,
)
from .doubles import (
    check_pairing,
    double_iso_uqsl2,
    drinfeld_double,
    heisenberg_mul_oracle,
    line_pairing,
    phi_functor,
)
from .linspace import spans_equal
from .scalars import CycField, format_scalar, parse_scalar, q_root
from .scenarios import sweedler_setup, uq_center_element, uqsl2_setup, weyl_setup
from .yd import adjoint_yd, check_braided_commutative, check_yd

REPORT_SCHEMA = "braidcenters.report/1"
SCENARIO_SCHEMA = "braidcenters.scenario/1"

MORITA_NOTE = (
    "distinguishable centers certify that the two module algebras are not "
    "Morita equivalent; any other verdict proves nothing in either direction"
)

CHECK_NAMES = {
    "uqsl2": ["axioms", "center", "center_yd", "closed_form", "compare",
              "cross_check", "oracle"],
    "sweedler": ["actions", "axioms", "center", "expected", "family"],
    "weyl": ["axioms", "center", "expected", "oracle"],
    "double": ["actions", "hopf_axioms", "iso"],
    "axioms": ["double_n3", "sweedler", "uqsl2_n3", "uqsl2_n5",
               "weyl_1var", "weyl_2var"],
    "custom": [],
}


class InputDataError(Exception):
    """User-supplied data rejected by a structural check."""

    def __init__(self, stage: str, witness: list[str]):
        super().__init__("%s: %s" % (stage, "; ".join(witness)))
        self.stage = stage
        self.witness = witness


# -- configuration -----------------------------------------------------------------


@dataclass
class ScenarioConfig:
    scenario: str
    n: int = 3
    q_spec: tuple[int, int] | None = None
    gamma: str = "1"
    xi: str = "1"
    degree: int | None = None
    nvars: int = 1
    output: str = "text"
    checks: list[str] | None = None
    jobs: int = 1
    input_path: str | None = None
    emit_presentation: str | None = None

    def validate(self) -> None:
        if self.scenario not in CHECK_NAMES:
            raise ValueError("unknown scenario %r" % self.scenario)
        if self.scenario in ("uqsl2", "double"):
            if self.n < 3:
                raise ValueError(
                    "n must be at least 3 for the nilpotent-line family "
                    "(got %d): smaller n has no invertible q^2 of order n"
                    % self.n)
            deg = self.degree if self.degree is not None else 2 * self.n + 2
            if deg < self.n + 2:
                raise ValueError(
                    "degree must be at least n + 2 = %d (got %d) so that at "
                    "least one central power is certifiable inside the "
                    "truncation window" % (self.n + 2, deg))
        if self.degree is not None and self.degree < 0:
            raise ValueError("degree must be nonnegative, got %d" % self.degree)
        if self.nvars < 1:
            raise ValueError("--vars must be at least 1, got %d" % self.nvars)
        if self.jobs < 1:
            raise ValueError("--jobs must be at least 1, got %d" % self.jobs)
        if self.q_spec is not None and self.q_spec[0] < 1:
            raise ValueError("the root-of-unity order in --q must be positive")
        if self.checks is not None:
            valid = set(CHECK_NAMES[self.scenario])
            bad = sorted(set(self.checks) - valid)
            if bad:
                raise ValueError(
                    "unknown checks for %s: %s (valid: %s)"
                    % (self.scenario, ", ".join(bad),
                       ", ".join(CHECK_NAMES[self.scenario])))
        if self.scenario == "custom" and not self.input_path:
            raise ValueError("custom requires --input FILE")

    def selected(self) -> set[str]:
        if self.checks is None:
            return set(CHECK_NAMES[self.scenario])
        return set(self.checks)


# -- rendering ---------------------------------------------------------------------


def _element_json(space, elem) -> list:
    return [[space.name(pos), format_scalar(elem.comps[pos])]
            for pos in sorted(elem.comps)]


def _terms_text(terms: list) -> str:
    if not terms:
        return "0"
    parts = []
    for name, coeff in terms:
        parts.append(name if coeff == "1" else "(%s)*%s" % (coeff, name))
    return " + ".join(parts)


def _linmap_json(f) -> dict:
    out = {}
    for j in sorted(f.cols):
        col = f.cols[j]
        if not col:
            continue
        out[f.domain.name(j)] = [[f.codomain.name(i), format_scalar(col[i])]
                                 for i in sorted(col)]
    return out


def _render_center(res) -> dict:
    space = res.ambient.space
    out = {
        "ambient": getattr(res.ambient, "name", type(res.ambient).__name__),
        "dim": res.dim,
        "side": res.side,
        "window": res.window,
        "safe_degree": res.safe_degree,
        "algebra_closed": res.algebra_closed,
        "commutative": res.commutative,
        "basis": [_element_json(space, b) for b in res.basis],
        "generators": [_element_json(space, g) for g in res.generators],
    }
    if res.center_yd is not None:
        yd = res.center_yd
        out["yd"] = {
            "k_actions": {g: _linmap_json(m)
                          for g, m in sorted(yd.kmod.gen_actions.items())},
            "h_actions": {g: _linmap_json(m)
                          for g, m in sorted(yd.gen_actions.items())},
            "coaction": _linmap_json(yd.coaction),
        }
    return out


def _leaf_bools(d: dict, prefix: str = "") -> dict:
    """Flatten a (possibly nested) check report to {path: bool}."""
    out = {}
    for k in sorted(d, key=str):
        v = d[k]
        key = "%s.%s" % (prefix, k) if prefix else str(k)
        if isinstance(v, bool):
            out[key] = v
        elif isinstance(v, dict):
            out.update(_leaf_bools(v, key))
    return out


def _failing(leafs: dict) -> list[str]:
    return sorted(k for k, v in leafs.items() if not v)


# -- presentation files (custom scenario) --------------------------------------------


def _mono_json(alg, pos: int) -> dict:
    return {g: e for g, e in zip(alg.gens, alg.basis[pos]) if e}


def _element_terms(alg, elem) -> list:
    return [[format_scalar(elem.comps[pos]), _mono_json(alg, pos)]
            for pos in sorted(elem.comps)]


def _tensor_terms(alg, elem) -> list:
    d = alg.dim
    out = []
    for pos in sorted(elem.comps):
        l, r = divmod(pos, d)
        out.append([format_scalar(elem.comps[pos]),
                    _mono_json(alg, l), _mono_json(alg, r)])
    return out


def _terms_element(alg, terms, field, q):
    acc = alg.space.zero()
    for coeff, mono in terms:
        c = parse_scalar(field, coeff, q=q)
        acc = acc + alg.monomial_element(
            {g: int(e) for g, e in mono.items()}).scale(c)
    return acc


def _terms_tensor(alg, terms, field, q):
    acc = alg.space2.zero()
    for coeff, left, right in terms:
        c = parse_scalar(field, coeff, q=q)
        el = alg.monomial_element({g: int(e) for g, e in left.items()})
        er = alg.monomial_element({g: int(e) for g, e in right.items()})
        acc = acc + el.tensor(er).scale(c)
    return acc


def presentation_of(scn) -> dict:
    """Serialize a nilpotent-line scenario's input data to the file schema."""
    K = scn.qt.K
    powers = {}
    for g, rule in zip(K.gens, K.powers):
        powers[g] = [rule[0]] if rule[0] == "free" else [rule[0], rule[1]]
    swaps = {}
    for (hi, lo), rules in K._swaps.items():
        key = "%s|%s" % (K.gens[hi], K.gens[lo])
        swaps[key] = [[format_scalar(c),
                       {g: e for g, e in zip(K.gens, vec) if e}]
                      for c, vec in rules]
    return {
        "schema": SCENARIO_SCHEMA,
        "field": K.field.m,
        "q": format_scalar(scn.q),
        "K": {
            "generators": list(K.gens),
            "powers": powers,
            "swaps": swaps,
            "coproducts": {g: _tensor_terms(K, K._cop_gen[g]) for g in K.gens},
            "counits": {g: format_scalar(K._counit_gen[g]) for g in K.gens},
            "antipodes": {g: _element_terms(K, K._anti_gen[g]) for g in K.gens},
        },
        "R": _tensor_terms(K, scn.qt.R),
        "H": {"kind": "nilpotent_line", "generator": scn.H.alg.gens[0],
              "n": scn.n, "weight": -1},
        "A": {"kind": "line", "gamma": format_scalar(scn.gamma)},
        "degree": scn.trunc,
    }


def load_presentation(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, ValueError) as exc:
        raise InputDataError("input", [str(exc)])
    if data.get("schema") != SCENARIO_SCHEMA:
        raise InputDataError(
            "input", ["expected schema %r, got %r"
                      % (SCENARIO_SCHEMA, data.get("schema"))])
    for key in ("field", "K", "H", "A", "degree"):
        if key not in data:
            raise InputDataError("input", ["missing top-level key %r" % key])
    return data


def build_custom(data: dict):
    """Rebuild (qt, H, A, degree) from a presentation file, checking axioms.

    Raises InputDataError with the failing witnesses as soon as any
    structural check rejects the data.
    """
    field = CycField(int(data["field"]))
    q = parse_scalar(field, data["q"]) if data.get("q") else None

    kd = data["K"]
    gens = [str(g) for g in kd.get("generators", [])]
    powers = {}
    for g, rule in kd.get("powers", {}).items():
        powers[g] = ("free",) if rule[0] == "free" else (rule[0], int(rule[1]))
    swaps = {}
    for key, rules in kd.get("swaps", {}).items():
        hi, _, lo = key.partition("|")
        swaps[(hi, lo)] = [
            (parse_scalar(field, c, q=q), {g: int(e) for g, e in mono.items()})
            for c, mono in rules]
    try:
        K = HopfAlgebra(field, gens, powers, swaps, {}, {}, {}, name="K")
        K._cop_gen = {g: _terms_tensor(K, kd["coproducts"][g], field, q)
                      for g in gens}
        K._counit_gen = {g: parse_scalar(field, kd["counits"][g], q=q)
                         for g in gens}
        K._anti_gen = {g: _terms_element(K, kd["antipodes"][g], field, q)
                       for g in gens}
    except (KeyError, ValueError) as exc:
        raise InputDataError("base_hopf_presentation", [repr(exc)])
    try:
        check_associativity(K)
    except AssertionError as exc:
        raise InputDataError("base_hopf_associativity", [str(exc)])
    hopf_report = _leaf_bools(check_hopf(K, full_pairs=K.dim <= 32))
    if not all(hopf_report.values()):
        raise InputDataError("base_hopf_axioms", _failing(hopf_report))

    try:
        R = _terms_tensor(K, data.get("R", []), field, q)
        qt = QuasiTriangular(K, R)
    except (KeyError, ValueError) as exc:
        raise InputDataError("r_matrix", [str(exc)])
    qt_report = _leaf_bools(qt.check())
    if not all(qt_report.values()):
        raise InputDataError("r_matrix_axioms", _failing(qt_report))

    hd = data["H"]
    if hd.get("kind") == "nilpotent_line":
        if q is None:
            raise InputDataError("braided_hopf", ["nilpotent_line needs a q literal"])
        if K.gens != ["g"]:
            raise InputDataError(
                "braided_hopf",
                ["nilpotent_line expects the base Hopf algebra to have the "
                 "single generator 'g', got %r" % (K.gens,)])
        H = nilpotent_line_hopf(qt, q, int(hd["n"]),
                                gen=str(hd.get("generator", "x")),
                                weight=int(hd.get("weight", -1)))
    elif hd.get("kind") == "trivial":
        H = trivial_braided_hopf(qt)
    else:
        raise InputDataError("braided_hopf", ["unknown H kind %r" % hd.get("kind")])
    h_report = _leaf_bools(check_braided_hopf(H))
    if not all(h_report.values()):
        raise InputDataError("braided_hopf_axioms", _failing(h_report))

    degree = int(data["degree"])
    ad = data["A"]
    if ad.get("kind") == "line":
        if q is None:
            raise InputDataError("module_algebra", ["line needs a q literal"])
        gamma = parse_scalar(field, ad.get("gamma", "0"), q=q)
        A = line_module_algebra(H, q, gamma, degree)
    elif ad.get("kind") == "trivial":
        A = trivial_module_algebra(H)
    else:
        raise InputDataError("module_algebra", ["unknown A kind %r" % ad.get("kind")])
    a_report = _leaf_bools(A.check())
    if not all(a_report.values()):
        raise InputDataError("module_algebra_axioms", _failing(a_report))

    return qt, H, A, degree


# -- scenario runners ---------------------------------------------------------------


def _uqsl2_field(cfg: ScenarioConfig):
    if cfg.q_spec is not None:
        field = CycField(cfg.q_spec[0])
        q = field.zeta ** cfg.q_spec[1]
        if q ** cfg.n != field.one or any(
                q ** k == field.one for k in range(1, cfg.n)):
            raise ValueError(
                "--q %d:%d is not a primitive root of unity of order n=%d"
                % (cfg.q_spec[0], cfg.q_spec[1], cfg.n))
        return field, q
    return q_root(cfg.n)


def _representable_powers(scn, window: int) -> dict:
    """All center powers from the closed form that fit inside the window."""
    out = {}
    for ell in range(scn.trunc + 1):
        try:
            z = uq_center_element(scn, ell)
        except ValueError:
            continue
        if window is not None and element_degree(scn.rb.alg, z) > window:
            continue
        out[ell] = z
    return out


def run_uqsl2(cfg: ScenarioConfig) -> dict:
    field, q = _uqsl2_field(cfg)
    gamma = parse_scalar(field, cfg.gamma, q=q)
    deg = cfg.degree if cfg.degree is not None else 2 * cfg.n + 2
    scn = uqsl2_setup(cfg.n, gamma, trunc=deg, q=q)
    selected = cfg.selected()
    checks: dict = {}
    data: dict = {}
    notes: list[str] = []

    if "axioms" in selected:
        ax = {}
        ax.update(_leaf_bools(scn.qt.check(), "quasi_triangular"))
        ax.update(_leaf_bools(check_braided_hopf(scn.H), "braided_hopf"))
        ax.update(_leaf_bools(scn.A.check(), "module_algebra"))
        ax.update(_leaf_bools(check_yd(scn.rb.yd), "yd"))
        ax["braiding_invertible"] = (
            check_braiding_invertible(scn.H.mod, scn.A.kmod)
            and check_braiding_invertible(scn.A.kmod, scn.H.mod))
        ax["hexagons"] = (
            check_hexagons(scn.H.mod, scn.A.kmod, scn.H.mod)
            and check_hexagons(scn.A.kmod, scn.H.mod, scn.A.kmod))
        ax["associativity"] = sweep_associativity(scn.rb.alg) == scn.rb.alg.dim ** 3
        checks["axioms"] = all(ax.values())
        data["axioms"] = ax

    res = None
    need_center = selected & {"center", "center_yd", "closed_form",
                              "compare", "oracle"}
    if need_center:
        res = b_center(scn.A, scn.H, deg)
        data["center"] = _render_center(res)
    if "center" in selected:
        checks["center"] = (res.dim >= 1 and res.algebra_closed
                            and res.commutative)
    if "center_yd" in selected:
        checks["center_yd"] = all(_leaf_bools(check_yd(res.center_yd)).values())
    if "oracle" in selected:
        sols = recurrence_oracle(cfg.n, q, gamma, deg)
        elems = oracle_elements(scn, sols)
        ok = spans_equal(elems, res.basis)
        checks["oracle"] = ok
        data["oracle"] = {"solutions": len(sols), "matches_center": ok}
    if "closed_form" in selected:
        if gamma:
            zs = _representable_powers(scn, res.window)
            ok_span = spans_equal(res.basis, list(zs.values()))
            ok_pow = True
            pairs = 0
            for a in sorted(zs):
                for b in sorted(zs):
                    if not a or not b or a + b not in zs:
                        continue
                    prod, clipped = scn.rb.alg.product(zs[a], zs[b])
                    if clipped or element_degree(scn.rb.alg, prod) > res.window:
                        continue
                    pairs += 1
                    if prod != zs[a + b]:
                        ok_pow = False
            checks["closed_form"] = ok_span and ok_pow
            data["closed_form"] = {
                "representable_powers": sorted(zs),
                "span_matches_center": ok_span,
                "power_law_pairs": pairs,
                "power_law_holds": ok_pow,
            }
        else:
            expected = []
            H, A = scn.H.alg, scn.A.alg
            for i in range(cfg.n):
                for j in range(0, deg + 1, cfg.n):
                    if i + j <= res.window:
                        expected.append(H.monomial_element({"x": i}).tensor(
                            A.monomial_element({"u": j})))
            ok = spans_equal(res.basis, expected)
            checks["closed_form"] = ok
            data["closed_form"] = {
                "expected": "monomials x^i (x) u^(k n) inside the window",
                "span_matches_center": ok,
            }
    if "compare" in selected:
        other = field.zero if gamma else field.one
        scn2 = uqsl2_setup(cfg.n, other, trunc=deg, q=q)
        res2 = b_center(scn2.A, scn2.H, deg)
        verdict = compare_centers(res, res2)
        checks["compare"] = verdict == "distinguishable"
        data["compare"] = {
            "against_gamma": format_scalar(other),
            "verdict": verdict,
            "dims": [res.dim, res2.dim],
        }
        notes.append("comparison verdict %r: %s" % (verdict, MORITA_NOTE))
    if "cross_check" in selected:
        cc = cross_check_smash(scn.A, scn.H, deg)
        checks["cross_check"] = cc["agree"]
        data["cross_check"] = {
            k: cc[k] for k in ("centralizer_dim", "center_dim",
                               "subspaces_equal", "products_match",
                               "pairs_checked", "agree")}

    report = _report("uqsl2", {
        "n": cfg.n, "degree": deg, "gamma": format_scalar(gamma),
        "field": field.m, "q": format_scalar(q),
    }, checks, data, notes)
    if cfg.emit_presentation:
        pres = presentation_of(scn)
        with open(cfg.emit_presentation, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(pres, indent=2, sort_keys=True) + "\n")
        report["notes"].append("presentation written to %s"
                               % cfg.emit_presentation)
    return report


def run_sweedler(cfg: ScenarioConfig) -> dict:
    field = CycField(4)
    xi = parse_scalar(field, cfg.xi)
    gamma = parse_scalar(field, cfg.gamma)
    deg = cfg.degree if cfg.degree is not None else 8
    scn = sweedler_setup(xi, gamma, deg, field=field)
    selected = cfg.selected()
    checks: dict = {}
    data: dict = {}

    if "axioms" in selected:
        ax = {}
        ax.update(_leaf_bools(scn.qt.check(), "quasi_triangular"))
        ax["module_algebra"] = check_module_algebra(scn.kmod, scn.alg)
        ax["associativity"] = check_associativity(scn.alg) > 0
        checks["axioms"] = all(ax.values())
        data["axioms"] = ax

    res = None
    if selected & {"center", "expected", "family"}:
        res = left_center(scn.alg, scn.kmod)
        data["center"] = _render_center(res)
    if "center" in selected:
        checks["center"] = (res.dim >= 1 and res.algebra_closed
                            and res.commutative)
    if "expected" in selected:
        expected = [scn.alg.monomial_element({"u": 2 * k})
                    for k in range(deg // 2 + 1) if 2 * k <= res.window]
        checks["expected"] = spans_equal(res.basis, expected)
    if "actions" in selected:
        u2 = scn.alg.monomial_element({"u": 2})
        ok_g = scn.kmod.gen_actions["g"](u2) == u2
        ok_x = scn.kmod.gen_actions["x"](u2).is_zero()
        checks["actions"] = ok_g and ok_x
        data["actions"] = {"g_fixes_u2": ok_g, "x_kills_u2": ok_x}
    if "family" in selected:
        ok = True
        dims = {}
        for xv in range(3):
            for gv in range(3):
                s2 = sweedler_setup(xv, gv, deg, field=field)
                r2 = left_center(s2.alg, s2.kmod)
                dims["xi%d_gamma%d" % (xv, gv)] = r2.dim
                if r2.basis != res.basis:
                    ok = False
        checks["family"] = ok
        data["family"] = {"identical_bases": ok, "dims": dims}

    return _report("sweedler", {
        "xi": format_scalar(xi), "gamma": format_scalar(gamma),
        "degree": deg, "field": field.m,
    }, checks, data, [])


def run_weyl(cfg: ScenarioConfig) -> dict:
    deg = cfg.degree if cfg.degree is not None else 8
    w = weyl_setup(cfg.nvars, deg)
    heis = w.heis
    selected = cfg.selected()
    checks: dict = {}
    data: dict = {}

    if "axioms" in selected:
        ax = {}
        ax.update(_leaf_bools(check_braided_hopf(w.H), "polynomials"))
        ax.update(_leaf_bools(check_braided_hopf(w.dual), "dual_polynomials"))
        ax.update(_leaf_bools(check_pairing(w.pairing), "pairing"))
        if cfg.nvars == 1:
            ax["associativity"] = sweep_associativity(heis) == heis.dim ** 3
        else:
            small = weyl_setup(cfg.nvars, 3)
            ax["associativity"] = (
                sweep_associativity(small.heis) == small.heis.dim ** 3)
            data["associativity_note"] = (
                "full basis-triple sweep done at truncation 3; the working "
                "truncation %d has %d^3 triples" % (deg, heis.dim))
        checks["axioms"] = all(ax.values())
        data["axioms"] = ax

    res = None
    if selected & {"center", "expected"}:
        skmod = tensor_module(heis.amod.kmod, heis.hopf.mod)
        psi = lambda e: braid(skmod, skmod, e)
        psi_inv = lambda e: braid(skmod, skmod, e, inverse=True)
        gens = heis.generators()
        tests = [gens["d%d" % (i + 1)] for i in range(cfg.nvars)]
        res = centralizer(heis, tests, psi, psi_inverse=psi_inv, kmod=skmod)
        data["center"] = _render_center(res)
    if "center" in selected:
        amod = heis.amod
        hone = heis.hopf.alg.one
        full = [amod.space.basis(t).tensor(hone) for t in range(amod.alg.dim)]
        checked = verify_on_tests(res, full)
        checks["center"] = (checked > 0 and res.algebra_closed
                            and res.commutative)
    if "expected" in selected:
        amod = heis.amod
        hone = heis.hopf.alg.one
        expected = [amod.space.basis(t).tensor(hone)
                    for t in range(amod.alg.dim)
                    if amod.alg.degree(t) <= res.window]
        checks["expected"] = spans_equal(res.basis, expected)
    if "oracle" in selected:
        ok = True
        pairs = 0
        for gname in sorted(heis.generators()):
            gel = heis.generators()[gname]
            for b in range(heis.dim):
                if heis.degree(b) > 3:
                    continue
                got, clipped = heis.product(gel, heis.space.basis(b))
                if clipped:
                    continue
                pairs += 1
                if got != heisenberg_mul_oracle(w.pairing, gel,
                                                heis.space.basis(b)):
                    ok = False
        checks["oracle"] = ok
        data["oracle"] = {"pairs_checked": pairs, "matches": ok}

    return _report("weyl", {"vars": cfg.nvars, "degree": deg}, checks, data, [])


def run_double(cfg: ScenarioConfig) -> dict:
    field, q = _uqsl2_field(cfg)
    gamma = parse_scalar(field, cfg.gamma, q=q)
    deg = cfg.degree if cfg.degree is not None else 2 * cfg.n + 2
    selected = cfg.selected()
    checks: dict = {}
    data: dict = {}

    qt = cyclic_qt(field, q, cfg.n)
    H = nilpotent_line_hopf(qt, q, cfg.n, gen="x", weight=-1)
    dual = nilpotent_line_hopf(qt, q, cfg.n, gen="xs", weight=1)
    p = line_pairing(dual, H, q)

    if "hopf_axioms" in selected:
        dbl = drinfeld_double(qt, p)
        rep = _leaf_bools(check_hopf(dbl, full_pairs=dbl.dim <= 32))
        checks["hopf_axioms"] = all(rep.values())
        data["hopf_axioms"] = rep
    if "iso" in selected:
        iso = double_iso_uqsl2(cfg.n, q)
        checks["iso"] = iso["all"]
        data["iso"] = {k: v for k, v in sorted(iso.items())
                       if isinstance(v, (bool, int))}
    if "actions" in selected:
        if not gamma:
            raise ValueError(
                "the actions check needs an invertible gamma (got 0): the "
                "closed-form central element is undefined at gamma = 0")
        scn = uqsl2_setup(cfg.n, gamma, trunc=deg, q=q)
        acts = phi_functor(scn.rb.yd, p)
        z = uq_center_element(scn, 1)
        z2 = uq_center_element(scn, 2)
        ok_e = acts["g"](acts["xs"](z)) == z2.scale(-q * gamma.inverse())
        ok_f = acts["x"](z) == scn.rb.alg.one.scale(gamma)
        ok_k = acts["g"](z) == z.scale(q * q)
        checks["actions"] = ok_e and ok_f and ok_k
        data["actions"] = {"e_sends_z_to_-q/gamma_z^2": ok_e,
                           "f_sends_z_to_gamma": ok_f,
                           "k_scales_z_by_q^2": ok_k}

    return _report("double", {
        "n": cfg.n, "degree": deg, "gamma": format_scalar(gamma),
        "field": field.m, "q": format_scalar(q),
    }, checks, data, [])


# -- axiom sweep tasks (top-level, picklable) -----------------------------------------


def _ax_uqsl2(n: int) -> dict:
    scn = uqsl2_setup(n, gamma=1)
    ad = adjoint_yd(scn.H)
    out = {}
    out.update(_leaf_bools(scn.qt.check(), "quasi_triangular"))
    out.update(_leaf_bools(check_braided_hopf(scn.H), "braided_hopf"))
    out.update(_leaf_bools(scn.A.check(), "module_algebra"))
    out.update(_leaf_bools(check_yd(scn.rb.yd), "yd"))
    out.update(_leaf_bools(check_yd(ad), "adjoint_yd"))
    out["adjoint_braided_commutative"] = check_braided_commutative(scn.H.alg, ad)
    out["braiding_invertible"] = (
        check_braiding_invertible(scn.H.mod, scn.A.kmod)
        and check_braiding_invertible(scn.A.kmod, scn.H.mod))
    out["hexagons"] = (
        check_hexagons(scn.H.mod, scn.A.kmod, scn.H.mod)
        and check_hexagons(scn.A.kmod, scn.H.mod, scn.A.kmod))
    out["associativity_yd_algebra"] = (
        sweep_associativity(scn.rb.alg) == scn.rb.alg.dim ** 3)
    smash = smash_product(scn.A, scn.H)
    out["associativity_smash"] = sweep_associativity(smash) == smash.dim ** 3
    return out


def _ax_sweedler() -> dict:
    field = CycField(4)
    out = {}
    for xv in range(3):
        for gv in range(3):
            s = sweedler_setup(xv, gv, field=field)
            ok = (all(_leaf_bools(s.qt.check()).values())
                  and check_module_algebra(s.kmod, s.alg)
                  and check_associativity(s.alg) > 0)
            out["xi%d_gamma%d" % (xv, gv)] = ok
    return out


def _ax_weyl(nvars: int, trunc: int) -> dict:
    w = weyl_setup(nvars, trunc)
    out = {}
    out.update(_leaf_bools(check_braided_hopf(w.H), "polynomials"))
    out.update(_leaf_bools(check_braided_hopf(w.dual), "dual_polynomials"))
    out.update(_leaf_bools(check_pairing(w.pairing), "pairing"))
    out["associativity"] = sweep_associativity(w.heis) == w.heis.dim ** 3
    return out


def _ax_double(n: int) -> dict:
    field, q = q_root(n)
    qt = cyclic_qt(field, q, n)
    H = nilpotent_line_hopf(qt, q, n, gen="x", weight=-1)
    dual = nilpotent_line_hopf(qt, q, n, gen="xs", weight=1)
    p = line_pairing(dual, H, q)
    dbl = drinfeld_double(qt, p)
    out = _leaf_bools(check_hopf(dbl, full_pairs=dbl.dim <= 32), "hopf")
    out["iso_uqsl2"] = double_iso_uqsl2(n, q)["all"]
    return out


def _run_axiom_task(name: str) -> dict:
    if name == "uqsl2_n3":
        return _ax_uqsl2(3)
    if name == "uqsl2_n5":
        return _ax_uqsl2(5)
    if name == "sweedler":
        return _ax_sweedler()
    if name == "weyl_1var":
        return _ax_weyl(1, 8)
    if name == "weyl_2var":
        return _ax_weyl(2, 3)
    if name == "double_n3":
        return _ax_double(3)
    raise ValueError("unknown axiom task %r" % name)


def run_axioms(cfg: ScenarioConfig) -> dict:
    names = sorted(cfg.selected())
    if cfg.jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_run_axiom_task, names))
    else:
        results = [_run_axiom_task(n) for n in names]
    checks = {}
    data = {}
    for name, rep in zip(names, results):
        checks[name] = all(rep.values())
        data[name] = rep
    return _report("axioms", {"jobs": cfg.jobs}, checks, data, [])


def run_custom(cfg: ScenarioConfig) -> dict:
    data_in = load_presentation(cfg.input_path)
    qt, H, A, degree = build_custom(data_in)
    if A.alg.truncation is not None:
        res = b_center(A, H, degree)
    else:
        res = left_center(rb_algebra(A, H))
    checks = {
        "axioms": True,  # build_custom aborts otherwise
        "center": res.dim >= 1 and res.algebra_closed and res.commutative,
    }
    data = {"center": _render_center(res)}
    if res.center_yd is not None:
        checks["center_yd"] = all(_leaf_bools(check_yd(res.center_yd)).values())
    return _report("custom", {
        "input": cfg.input_path, "degree": degree,
        "field": qt.K.field.m,
    }, checks, data, [])


# -- report assembly and emission ------------------------------------------------------


def _report(scenario: str, config: dict, checks: dict, data: dict,
            notes: list[str]) -> dict:
    return {
        "schema": REPORT_SCHEMA,
        "scenario": scenario,
        "config": config,
        "checks": checks,
        "all_passed": all(checks.values()) if checks else True,
        "data": data,
        "notes": notes,
    }


def _emit(report: dict, as_json: bool, stream=None) -> None:
    stream = stream or sys.stdout
    if as_json:
        stream.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
        return
    w = stream.write
    w("scenario: %s\n" % report["scenario"])
    cfg = report.get("config", {})
    if cfg:
        w("config: %s\n" % "  ".join(
            "%s=%s" % (k, cfg[k]) for k in sorted(cfg)))
    if "error" in report:
        err = report["error"]
        w("rejected at stage: %s\n" % err["stage"])
        for item in err["witness"]:
            w("  witness: %s\n" % item)
        return
    for name in sorted(report["checks"]):
        w("check %-12s %s\n" % (name, "PASS" if report["checks"][name]
                                else "FAIL"))
    data = report.get("data", {})
    center = data.get("center")
    if center:
        w("center: dim %d  window %s  safe_degree %s  closed %s  "
          "commutative %s\n"
          % (center["dim"], center["window"], center["safe_degree"],
             center["algebra_closed"], center["commutative"]))
        for i, terms in enumerate(center["basis"]):
            w("  c%d = %s\n" % (i, _terms_text(terms)))
        if center["generators"]:
            w("generators:\n")
            for terms in center["generators"]:
                w("  %s\n" % _terms_text(terms))
    cmp_data = data.get("compare")
    if cmp_data:
        w("comparison (gamma vs %s): %s\n"
          % (cmp_data["against_gamma"], cmp_data["verdict"]))
    for note in report.get("notes", []):
        w("note: %s\n" % note)
    w("result: %s\n" % ("PASS" if report["all_passed"] else "FAIL"))


RUNNERS = {
    "uqsl2": run_uqsl2,
    "sweedler": run_sweedler,
    "weyl": run_weyl,
    "double": run_double,
    "axioms": run_axioms,
    "custom": run_custom,
}


# -- argument parsing -----------------------------------------------------------------


def _parse_q(text: str) -> tuple[int, int]:
    m, _, e = text.partition(":")
    try:
        return int(m), int(e)
    except ValueError:
        raise argparse.ArgumentTypeError(
            "--q expects M:E for zeta_M^E, got %r" % text)


def _parse_checks(text: str) -> list[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidcenters",
        description="Centers and centralizers of module algebras in braided "
                    "categories: scenario runner and axiom suites.")
    sub = parser.add_subparsers(dest="scenario", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit the report as canonical JSON")
    common.add_argument("--checks", type=_parse_checks, default=None,
                        metavar="LIST",
                        help="comma-separated subset of checks to run")
    common.add_argument("--jobs", type=int, default=1, metavar="N",
                        help="parallel workers for independent sweeps")

    p = sub.add_parser("uqsl2", parents=[common],
                       help="nilpotent line over a cyclic group: center of "
                            "k[u] under g.u = q^2 u, x.u = gamma")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--q", type=_parse_q, default=None, metavar="M:E",
                   help="use q = zeta_M^E instead of the default root")
    p.add_argument("--gamma", default="1", metavar="EXPR")
    p.add_argument("--degree", type=int, default=None, metavar="D")
    p.add_argument("--emit-presentation", default=None, metavar="FILE",
                   help="also write the scenario's input data as a "
                        "presentation file for the custom subcommand")

    p = sub.add_parser("sweedler", parents=[common],
                       help="k[u] over the 4-dimensional Hopf algebra with "
                            "its xi-family of R-matrices")
    p.add_argument("--xi", default="1", metavar="EXPR")
    p.add_argument("--gamma", default="1", metavar="EXPR")
    p.add_argument("--degree", type=int, default=None, metavar="D")

    p = sub.add_parser("weyl", parents=[common],
                       help="truncated Weyl algebra: centralizer of the "
                            "derivative subalgebra")
    p.add_argument("--vars", type=int, default=1, dest="nvars", metavar="V")
    p.add_argument("--degree", type=int, default=None, metavar="D")

    p = sub.add_parser("double", parents=[common],
                       help="Drinfeld double of the nilpotent line and its "
                            "identification with u_q(sl2)")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--q", type=_parse_q, default=None, metavar="M:E")
    p.add_argument("--gamma", default="1", metavar="EXPR")
    p.add_argument("--degree", type=int, default=None, metavar="D")

    sub.add_parser("axioms", parents=[common],
                   help="structural axiom sweeps across all packaged "
                        "scenarios")

    p = sub.add_parser("custom", parents=[common],
                       help="run the center pipeline on a user-supplied "
                            "presentation file")
    p.add_argument("--input", required=True, dest="input_path",
                   metavar="FILE")

    return parser


def _config_from_args(args: argparse.Namespace) -> ScenarioConfig:
    return ScenarioConfig(
        scenario=args.scenario,
        n=getattr(args, "n", 3),
        q_spec=getattr(args, "q", None),
        gamma=getattr(args, "gamma", "1"),
        xi=getattr(args, "xi", "1"),
        degree=getattr(args, "degree", None),
        nvars=getattr(args, "nvars", 1),
        output="json" if args.json else "text",
        checks=args.checks,
        jobs=args.jobs,
        input_path=getattr(args, "input_path", None),
        emit_presentation=getattr(args, "emit_presentation", None),
    )


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
        cfg.validate()
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    try:
        report = RUNNERS[cfg.scenario](cfg)
    except InputDataError as exc:
        report = {
            "schema": REPORT_SCHEMA,
            "scenario": cfg.scenario,
            "config": {"input": cfg.input_path},
            "all_passed": False,
            "error": {"stage": exc.stage, "witness": exc.witness},
        }
        _emit(report, cfg.output == "json")
        return 2
    except (CenterError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    _emit(report, cfg.output == "json")
    return 0 if report["all_passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
