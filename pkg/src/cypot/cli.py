"""Command-line front end: parse a potential, run the checks, write a report."""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

from . import __version__
from .catalog import example
from .complexes import PotentialComplex, duality_maps, exactness_report, hochschild_dims
from .criterion import PotentialError, check_potential, cy3_report
from .grading import GradedQuotient
from .ncpoly import GenSet, NcPoly, cyclic_derivative
from .quadric import (DegenerateQuadric, as_matrix, gamma_complex_check, matrix_of_quadratic,
                      nakayama_check, ore_check, quadric_algebra, sigma_of, uz_potential)

SCHEMA_VERSION = "1"
CHECKS = ("criterion", "complexes", "hochschild", "quadric")

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 2, 3


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__("%s at position %d" % (message, position))
        self.message = message
        self.position = position


# -- expression parser --------------------------------------------------------

_PIECE = re.compile(r"[A-Za-z_]\d*")
_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str):
    toks = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            toks.append(("num", m.group(1), start))
        elif m.group(2) is not None:
            toks.append(("id", m.group(2), start))
        else:
            toks.append(("op", m.group(3), start))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, gens: GenSet):
        self.toks = _tokenize(text)
        self.i = 0
        self.gens = gens

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, op):
        t = self.take()
        if t[1] != op or t[0] != "op":
            raise ParseError("expected %r" % op, t[2])
        return t

    def parse(self) -> NcPoly:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        p = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise ParseError("unexpected %r" % t[1], t[2])
        return p

    def expr(self) -> NcPoly:
        sign = 1
        t = self.peek()
        if t[0] == "op" and t[1] in "+-":
            self.take()
            sign = -1 if t[1] == "-" else 1
        p = self.term() * sign
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "+-":
                self.take()
                q = self.term()
                p = p + q if t[1] == "+" else p - q
            else:
                return p

    def _starts_factor(self, t) -> bool:
        return t[0] in ("num", "id") or (t[0] == "op" and t[1] == "(")

    def term(self) -> NcPoly:
        p = self.factor()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] == "*":
                self.take()
                p = p * self.factor()
            elif self._starts_factor(t):
                p = p * self.factor()
            else:
                return p

    def factor(self) -> NcPoly:
        p = self.atom()
        t = self.peek()
        if t[0] == "op" and t[1] == "^":
            self.take()
            e = self.take()
            if e[0] != "num":
                raise ParseError("exponent must be a non-negative integer", e[2])
            p = p ** int(e[1])
        return p

    def atom(self) -> NcPoly:
        t = self.take()
        kind, val, pos = t
        if kind == "num":
            num = int(val)
            nt = self.peek()
            if nt[0] == "op" and nt[1] == "/":
                self.take()
                d = self.take()
                if d[0] != "num":
                    raise ParseError("malformed rational", d[2])
                if int(d[1]) == 0:
                    raise ParseError("zero denominator", d[2])
                return NcPoly.one() * Fraction(num, int(d[1]))
            return NcPoly.one() * num
        if kind == "id":
            return self.identifier(val, pos)
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect(")")
            return p
        if kind == "op" and val == "-":
            return self.factor() * -1
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError("unexpected %r" % val, pos)

    def identifier(self, name, pos) -> NcPoly:
        g = self.gens
        if name in g:
            return NcPoly.gen(g.index(name))
        # "xyz" or "x1x2" as a juxtaposition of short generator names
        parts = _PIECE.findall(name)
        if "".join(parts) == name and all(s in g for s in parts):
            return NcPoly.word([g.index(s) for s in parts])
        raise ParseError("unknown identifier %r" % name, pos)


def parse_poly(text: str, gens: GenSet) -> NcPoly:
    return _Parser(text, gens).parse()


def parse_potential(text: str, gens: GenSet) -> NcPoly:
    """Parse and validate a homogeneous potential of degree >= 3."""
    p = parse_poly(text, gens)
    if not p.is_homogeneous():
        raise ParseError("potential is not homogeneous (degrees %s)" % sorted(p.degrees()), 0)
    check_potential(p, gens.n)
    return p


def identifiers(text: str) -> List[str]:
    """Variable names in text; undeclared words split into letter+digits pieces."""
    names = set()
    for k, v, _ in _tokenize(text):
        if k == "id":
            names.update(_PIECE.findall(v))
    return sorted(names,
                  key=lambda s: [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", s)])


def parse_vars(spec: Optional[str], text: str = "") -> GenSet:
    if spec is None:
        names = identifiers(text)
        if not names:
            raise ValueError("no variables")
        return GenSet(names)
    spec = spec.strip()
    if spec.isdigit():
        return GenSet.numbered(int(spec))
    return GenSet([s for s in re.split(r"[\s,]+", spec) if s])


def parse_matrix(text: str):
    text = text.strip()
    if text.startswith("["):
        rows = json.loads(text)
    else:
        rows = [line.split() for line in text.splitlines() if line.strip()]
    try:
        return as_matrix([[Fraction(str(v)) for v in r] for r in rows])
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError("bad matrix: %s" % e) from None


def _read_arg(value: str) -> str:
    if value.startswith("@"):
        with open(value[1:], encoding="utf-8") as fh:
            return fh.read()
    return value


# -- run ------------------------------------------------------------------------

@dataclass
class RunConfig:
    potential: Optional[str] = None
    catalog: Optional[List[str]] = None
    vars: Optional[str] = None
    max_degree: Optional[int] = None
    checks: List[str] = field(default_factory=lambda: ["criterion", "complexes"])
    format: str = "json"
    out: Optional[str] = None
    matrix: Optional[str] = None


def _rat(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)


def _mat(M):
    return [[_rat(v) for v in r] for r in M]


def _jsonable(v):
    if isinstance(v, Fraction):
        return _rat(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def _catalog_params(name, params, matrix):
    if name == "steiner":
        return [[tuple(int(a) for a in p.split(",")) for p in params]], {}
    if name == "quadric_uz":
        if matrix is None:
            raise ValueError("quadric_uz needs --matrix")
        return [matrix], {}
    if name == "yang_mills" and matrix is not None:
        return list(params), {"g": matrix}
    return list(params), {}


def resolve_input(cfg: RunConfig):
    """(w, gens, input echo, parameters, U)"""
    U = parse_matrix(_read_arg(cfg.matrix)) if cfg.matrix else None
    if cfg.catalog:
        name, params = cfg.catalog[0], cfg.catalog[1:]
        args, kw = _catalog_params(name, params, U)
        w, spec = example(name, *args, **kw)
        gens = GenSet(spec.gens)
        echo = {"catalog": name, "params": list(params), "tag": spec.tag, "note": spec.note}
        if name == "quadric_uz":
            U = spec.params["U"]
        return w, gens, echo, spec, U
    if cfg.potential is not None:
        text = _read_arg(cfg.potential).strip()
        gens = parse_vars(cfg.vars, text)
        w = parse_potential(text, gens)
        return w, gens, {"potential": text, "vars": list(gens.names)}, None, U
    if U is not None:
        w = uz_potential(U)
        gens = GenSet.numbered(len(U) + 1)
        return w, gens, {"matrix": _mat(U)}, None, U
    raise ValueError("give --potential, --catalog or --matrix")


def _quadric_section(w, gens, U, D):
    n = gens.n - 1
    if U is None:
        u = cyclic_derivative(w, n)
        try:
            U = matrix_of_quadratic(u, n)
        except ValueError:
            return {"hypothesis_ok": False, "reason": "w is not of the form u z"}
    Dq = min(D, 5)
    try:
        qa = quadric_algebra(U, Dq)
    except DegenerateQuadric as e:
        return {"hypothesis_ok": False, "reason": str(e), "U": _mat(U)}
    sg = sigma_of(U)
    nk = nakayama_check(U, min(Dq, 4))
    gc = gamma_complex_check(U, Dq)
    ore = ore_check(w, n, Dq, U)
    return {
        "hypothesis_ok": ore.hypothesis_ok,
        "reason": ore.reason,
        "U": _mat(U),
        "S": _mat(qa.S),
        "sigma_verified": sg.relations_hold,
        "gamma_dims": qa.dims,
        "gamma_target": qa.target,
        "gamma_hilbert_ok": qa.hilbert_ok,
        "U_plus_UtS_zero": nk.x_vanishes,
        "StUS_equals_U": nk.sigma_preserves_u,
        "ker_mu_equals_im_d2star": nk.kernel_equals_image,
        "mu_d2star_zero": nk.mu_kills_image,
        "nakayama_ok": nk.ok,
        "gamma_koszul_exact": gc.koszul_exact,
        "gamma_coker_matches": gc.coker_matches,
        "ore_hilbert": ore.hilbert,
        "ore_prefix_sums": ore.prefix_sums,
        "ore_hilbert_factorizes": ore.hilbert_factorizes,
        "ore_delta": [d.format(gens) for d in ore.delta],
        "ore_relations_hold": ore.ore_relations_hold,
        "ore_verdict": str(ore.criterion.verdict) if ore.criterion else None,
    }


def run(cfg: RunConfig) -> dict:
    checks = list(CHECKS) if "all" in cfg.checks else list(cfg.checks)
    bad = [c for c in checks if c not in CHECKS]
    if bad:
        raise ValueError("unknown check(s): %s" % ", ".join(bad))
    w, gens, echo, spec, U = resolve_input(cfg)
    n = gens.n
    N = check_potential(w, n)
    D = cfg.max_degree
    if D is None:
        D = spec.recommended_D if spec is not None else 2 * (N + 1) + 2
    if D < 0:
        raise ValueError("max degree must be >= 0")
    if ("complexes" in checks or "hochschild" in checks) and D < N + 1:
        raise ValueError("complex checks need max degree >= N+1 = %d" % (N + 1))
    echo["w"] = w.format(gens)
    report = {
        "input": echo,
        "parameters": {"n": n, "N": N, "D": D, "checks": checks},
        "criterion": None, "hilbert": None, "exactness": None,
        "hochschild": None, "quadric": None, "verdict": None,
        "version": {"schema": SCHEMA_VERSION, "package": __version__},
    }
    gq = GradedQuotient.from_potential(w, n, D)
    rep = cy3_report(w, n, D, gq=gq, exactness="complexes" in checks)
    report["criterion"] = {
        "dim_R": rep.dim_R,
        "dim_R_N1": rep.dim_R_N1,
        "c_in_R_N1": rep.c_in_R_N1,
        "c_spans_R_N1": rep.c_spans_R_N1,
        "checks_run": rep.checks_run,
    }
    report["hilbert"] = {
        "dims": gq.dims,
        "target": list(rep.target) or None,
        "first_mismatch": rep.first_mismatch,
    }
    report["verdict"] = str(rep.verdict)
    pc = None
    if "complexes" in checks:
        pc = PotentialComplex(w, n)
        ex = rep.exactness or exactness_report(w, gq, D, pc)
        squares = []
        for d in range(D + 1):
            dm = duality_maps(w, gq, d, pc)
            squares.append({"degree": d, "left": dm.left, "central": dm.central, "right": dm.right})
        report["exactness"] = {
            "is_complex": ex.is_complex,
            "homology": ex.table(),
            "first_failure": list(ex.first_failure) if ex.first_failure else None,
            "J": list(pc.J),
            "squares": squares,
        }
    if "hochschild" in checks:
        hh = hochschild_dims(w, gq, D, pc)
        report["hochschild"] = {
            "homology": [[hh.homology[(p, d)] for p in range(4)] for d in range(D + 1)],
            "dual_homology": [[hh.dual_homology[(p, d - N - 1)] for p in range(4)]
                              for d in range(D + 1)],
            "complete": hh.complete,
            "shifted_duality": hh.shifted_duality_holds(),
        }
    if "quadric" in checks:
        report["quadric"] = _quadric_section(w, gens, U, D)
    return report


def render_text(rep: dict) -> str:
    lines = ["w = %s" % rep["input"]["w"]]
    p = rep["parameters"]
    lines.append("n = %d, N = %d, D = %d" % (p["n"], p["N"], p["D"]))
    c = rep["criterion"]
    lines.append("dim R = %s, dim R_{N+1} = %s, c(w) spans: %s"
                 % (c["dim_R"], c["dim_R_N1"], c["c_spans_R_N1"]))
    h = rep["hilbert"]
    lines.append("hilbert %s" % h["dims"])
    if h["target"]:
        lines.append("target  %s" % h["target"])
    if rep["exactness"]:
        e = rep["exactness"]
        lines.append("homology by degree (positions 0..3):")
        for d, row in enumerate(e["homology"]):
            lines.append("  %2d: %s" % (d, row))
        ok = all(s["left"] and s["central"] and s["right"] for s in e["squares"])
        lines.append("duality squares commute: %s" % ok)
    if rep["hochschild"]:
        lines.append("hochschild shifted duality: %s" % rep["hochschild"]["shifted_duality"])
    if rep["quadric"]:
        q = rep["quadric"]
        for k in ("hypothesis_ok", "reason", "S", "nakayama_ok", "gamma_koszul_exact",
                  "ore_hilbert_factorizes", "ore_relations_hold"):
            if k in q:
                lines.append("%s: %s" % (k, q[k]))
    lines.append("verdict: %s" % rep["verdict"])
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cypot", description="3-Calabi-Yau checks for potentials")
    src = ap.add_mutually_exclusive_group()
    src.add_argument("--potential", help="expression, or @file")
    src.add_argument("--catalog", nargs="+", metavar="NAME", help="family name and parameters")
    ap.add_argument("--vars", help="comma or space separated names, or a count")
    ap.add_argument("--max-degree", type=int, dest="max_degree")
    ap.add_argument("--checks", default="criterion,complexes",
                    help="comma list from %s, or all" % ", ".join(CHECKS))
    ap.add_argument("--format", choices=("json", "text"), default="json")
    ap.add_argument("--out")
    ap.add_argument("--matrix", help="quadric matrix U: @file, or inline JSON")
    return ap


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    cfg = RunConfig(args.potential, args.catalog, args.vars, args.max_degree,
                    [c.strip() for c in args.checks.split(",") if c.strip()],
                    args.format, args.out, args.matrix)
    try:
        rep = run(cfg)
    except (ParseError, PotentialError, DegenerateQuadric, ValueError, OSError,
            json.JSONDecodeError) as e:
        err = {"error": {"kind": "input", "type": type(e).__name__, "message": str(e)}}
        if isinstance(e, ParseError):
            err["error"]["position"] = e.position
        sys.stderr.write(json.dumps(err) + "\n")
        return EXIT_INPUT
    except Exception as e:  # invariant violations and bugs
        err = {"error": {"kind": "internal", "type": type(e).__name__, "message": str(e)}}
        sys.stderr.write(json.dumps(err) + "\n")
        return EXIT_INTERNAL
    if cfg.format == "json":
        text = json.dumps(_jsonable(rep), indent=2, sort_keys=False) + "\n"
    else:
        text = render_text(rep)
    _emit(text, cfg.out)
    return EXIT_OK


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
