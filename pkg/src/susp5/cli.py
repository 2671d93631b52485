"""Command-line front end.

Reads descriptor files (or standard input), validates them, computes the
suspension splittings, homology sections, K-theory, and cohomotopy, runs
the built-in consistency checks, and prints either a human-readable or a
machine-readable report.

Descriptor files are line-oriented.  Scalar lines look like ``key = value``
with keys l, d, H, T, spin, smooth, pd_mode and, for the invariant-level
route, c1, c2, consumed, case.  Alternatively an ``[h_matrix]`` block gives
the incidence matrix row by row (``sphere = eta 0``, ``moore r=2 = 0 i3eta``)
and an optional ``[phi]`` block gives the top-attachment components as bit
rows (x, y, z, eps, w) relative to the reduced matrix; the normal form is
then computed.  ``#`` starts a comment.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from typing import NoReturn

from susp5.abgroup import FgAbGroup
from susp5.decompose import (
    DecompositionError,
    DescriptorError,
    ManifoldDescriptor,
    double_suspension_decomposition,
    homology_section,
    manifold_homology,
    resolve_attaching_data,
    suspension_decomposition,
)
from susp5.invariants import (
    hurewicz_cohomotopy,
    k_closed_form,
    k_group,
    ko_closed_form,
    ko_group,
    pi3,
    pi4_sigma_crosscheck,
)
from susp5.reduction import (
    AttachCase,
    AttachingDataError,
    HMatrix,
    PhiVector,
    reduce_h_matrix,
)

_0 = FgAbGroup.trivial()


class ParseError(ValueError):
    """Rejected input; kind is 'syntax', 'range', or 'consistency'."""

    def __init__(self, kind, message, source="<input>", line=0, column=0):
        super().__init__(message)
        self.kind = kind
        self.message = message
        self.source = source
        self.line = line
        self.column = column

    def __str__(self):
        where = self.source
        if self.line:
            where += f":{self.line}"
            if self.column:
                where += f":{self.column}"
        return f"{where}: {self.kind} error: {self.message}"


_SCALAR_KEYS = (
    "l",
    "d",
    "H",
    "T",
    "spin",
    "smooth",
    "pd_mode",
    "c1",
    "c2",
    "consumed",
    "case",
)
_INVARIANT_ROUTE_KEYS = ("c1", "c2", "consumed", "case")
_CASE_RE = re.compile(r"(ip_tilde_eta|tilde_eta|i_eta_sq|eta_sq|eta|null)(?:\((\d+)\))?")
_MOORE_ROW_RE = re.compile(r"moore\s+r=(\d+)\s*=\s*(.*)")
_CONSUMED_RE = re.compile(r"\[\s*((?:\d+\s*(?:,\s*\d+\s*)*)?)\]")


class _Parser:
    def __init__(self, text: str, source: str):
        self.source = source
        self.scalars: dict[str, tuple[str, int, int]] = {}
        self.sphere_rows: list[tuple[tuple[int, ...], int]] = []
        self.moore_rows: list[tuple[int, tuple[int, ...], int]] = []
        self.phi_rows: dict[str, tuple[tuple[int, ...], int]] = {}
        self.saw_matrix = False
        self.saw_phi = False
        self._scan(text)

    def error(self, kind: str, msg: str, line: int = 0, col: int = 0) -> NoReturn:
        raise ParseError(kind, msg, self.source, line, col)

    # -- scanning ------------------------------------------------------------

    def _scan(self, text: str) -> None:
        section = None
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].rstrip()
            stripped = line.strip()
            if not stripped:
                continue
            if stripped.startswith("["):
                if stripped == "[h_matrix]":
                    if self.saw_matrix:
                        self.error("consistency", "duplicate [h_matrix] block", lineno, 1)
                    self.saw_matrix = True
                    section = "h_matrix"
                elif stripped == "[phi]":
                    if self.saw_phi:
                        self.error("consistency", "duplicate [phi] block", lineno, 1)
                    self.saw_phi = True
                    section = "phi"
                else:
                    self.error("syntax", f"unknown block {stripped}", lineno, 1)
                continue
            if section == "h_matrix":
                self._scan_matrix_row(stripped, lineno)
            elif section == "phi":
                self._scan_phi_row(stripped, lineno)
            else:
                self._scan_scalar(line, lineno)

    def _scan_scalar(self, line: str, lineno: int) -> None:
        if "=" not in line:
            self.error("syntax", "expected 'key = value'", lineno, 1)
        eq = line.index("=")
        key = line[:eq].strip()
        rest = line[eq + 1 :]
        col = eq + 2 + (len(rest) - len(rest.lstrip()))
        value = rest.strip()
        if key not in _SCALAR_KEYS:
            self.error("syntax", f"unknown key {key!r}", lineno, 1)
        if key in self.scalars:
            self.error("consistency", f"duplicate key {key!r}", lineno, 1)
        if not value:
            self.error("syntax", f"missing value for {key!r}", lineno, col)
        self.scalars[key] = (value, lineno, col)

    def _scan_matrix_row(self, line: str, lineno: int) -> None:
        if line.startswith("sphere"):
            rest = line[len("sphere") :].lstrip()
            if not rest.startswith("="):
                self.error("syntax", "expected 'sphere = entries'", lineno, 1)
            bits = self._entries(rest[1:], {"0": 0, "eta": 1}, lineno)
            self.sphere_rows.append((bits, lineno))
            return
        if line.startswith("moore"):
            m = _MOORE_ROW_RE.fullmatch(line)
            if not m:
                self.error("syntax", "expected 'moore r=<exp> = entries'", lineno, 1)
            r = int(m.group(1))
            if r < 1:
                self.error("range", "moore exponent must be at least 1", lineno, 1)
            bits = self._entries(m.group(2), {"0": 0, "i3eta": 1}, lineno)
            self.moore_rows.append((r, bits, lineno))
            return
        self.error("syntax", "matrix rows start with 'sphere' or 'moore'", lineno, 1)

    def _scan_phi_row(self, line: str, lineno: int) -> None:
        key, eq, rest = line.partition("=")
        key = key.strip()
        if key not in ("x", "y", "z", "eps", "w") or not eq:
            self.error("syntax", "expected 'x|y|z|eps|w = bits'", lineno, 1)
        if key in self.phi_rows:
            self.error("consistency", f"duplicate phi component {key!r}", lineno, 1)
        bits = self._entries(rest, {"0": 0, "1": 1}, lineno, allow_empty=True)
        self.phi_rows[key] = (bits, lineno)

    def _entries(self, text, vocab, lineno, allow_empty=False):
        out = []
        allowed = "/".join(vocab)
        for tok in text.split():
            if tok in vocab:
                out.append(vocab[tok])
            elif re.fullmatch(r"-?\d+", tok):
                self.error("range", f"entry {tok!r} not allowed here (use {allowed})", lineno, 1)
            else:
                self.error("syntax", f"unknown entry {tok!r} (use {allowed})", lineno, 1)
        if not out and not allow_empty:
            self.error("syntax", "empty row", lineno, 1)
        return tuple(out)

    # -- typed scalar access ---------------------------------------------------

    def _int(self, key: str) -> int:
        value, line, col = self.scalars[key]
        if re.fullmatch(r"-?\d+", value) is None:
            self.error("syntax", f"{key} must be an integer", line, col)
        n = int(value)
        if n < 0:
            self.error("range", f"{key} must be nonnegative", line, col)
        return n

    def _bool(self, key: str) -> bool:
        value, line, col = self.scalars[key]
        if value == "true":
            return True
        if value == "false":
            return False
        self.error("syntax", f"{key} must be true or false", line, col)

    def _group(self, key: str) -> FgAbGroup:
        value, line, col = self.scalars[key]
        try:
            return FgAbGroup.from_string(value)
        except ValueError as exc:
            self.error("syntax", f"bad group literal for {key}: {exc}", line, col)

    def _case(self) -> AttachCase:
        value, line, col = self.scalars["case"]
        m = _CASE_RE.fullmatch(value)
        if not m:
            self.error(
                "syntax",
                "case must be null, eta, eta_sq, tilde_eta(j), ip_tilde_eta(j), or i_eta_sq(j)",
                line,
                col,
            )
        kind, idx = m.group(1), m.group(2)
        if kind in ("null", "eta", "eta_sq"):
            if idx is not None:
                self.error("consistency", f"case {kind} takes no index", line, col)
            return AttachCase(kind)
        if idx is None:
            self.error("consistency", f"case {kind} needs a summand index", line, col)
        return AttachCase(kind, int(idx))

    def _consumed(self) -> tuple[int, ...]:
        value, line, col = self.scalars["consumed"]
        m = _CONSUMED_RE.fullmatch(value)
        if not m:
            self.error("syntax", "consumed must look like [0, 2]", line, col)
        inner = m.group(1).strip()
        if not inner:
            return ()
        return tuple(int(tok) for tok in inner.replace(",", " ").split())

    # -- assembly ----------------------------------------------------------------

    def build(self) -> ManifoldDescriptor:
        for key in ("l", "d", "spin"):
            if key not in self.scalars:
                self.error("consistency", f"missing required key {key!r}")
        l = self._int("l")
        d = self._int("d")
        spin = self._bool("spin")
        h1 = self._group("H") if "H" in self.scalars else _0
        h2 = self._group("T") if "T" in self.scalars else _0
        smooth_given = "smooth" in self.scalars
        pd_given = "pd_mode" in self.scalars
        smooth = self._bool("smooth") if smooth_given else True
        pd_mode = self._bool("pd_mode") if pd_given else False
        if pd_given and not smooth_given:
            smooth = not pd_mode
        if smooth_given and not pd_given:
            pd_mode = not smooth

        inv_given = [k for k in _INVARIANT_ROUTE_KEYS if k in self.scalars]
        if inv_given and self.saw_matrix:
            self.error(
                "consistency",
                "give invariant-level attaching data or an [h_matrix] block, not both",
            )
        if self.saw_phi and not self.saw_matrix:
            self.error("consistency", "a [phi] block needs an [h_matrix] block")

        common = dict(
            l=l, d=d, h1_torsion=h1, h2_torsion=h2,
            spin=spin, smooth=smooth, pd_mode=pd_mode,
        )
        if self.saw_matrix:
            return self._build_from_matrix(common)
        try:
            return ManifoldDescriptor(
                c1=self._int("c1") if "c1" in self.scalars else 0,
                c2=self._int("c2") if "c2" in self.scalars else 0,
                consumed=self._consumed() if "consumed" in self.scalars else (),
                case=self._case() if "case" in self.scalars else AttachCase("null"),
                **common,
            )
        except DescriptorError as exc:
            self.error("consistency", str(exc))

    def _build_from_matrix(self, common) -> ManifoldDescriptor:
        try:
            h = HMatrix(
                sphere_rows=tuple(bits for bits, _ in self.sphere_rows),
                moore_rows=tuple(bits for _, bits, _ in self.moore_rows),
                moore_exponents=tuple(r for r, _, _ in self.moore_rows),
            )
        except AttachingDataError as exc:
            self.error("consistency", str(exc))
        phi = None
        if self.saw_phi:
            red = reduce_h_matrix(h)
            exps = h.moore_exponents
            unconsumed = [j for j in range(len(exps)) if j not in red.consumed]

            def bits_for(name, nslots):
                if name in self.phi_rows:
                    bits, line = self.phi_rows[name]
                    if len(bits) != nslots:
                        self.error(
                            "consistency",
                            f"phi component {name!r} needs {nslots} entries here",
                            line,
                            1,
                        )
                    return bits
                return (0,) * nslots

            z = bits_for("z", len(unconsumed))
            eps = bits_for("eps", len(unconsumed))
            phi = PhiVector(
                x=bits_for("x", common["d"] - red.c1),
                y=bits_for("y", common["d"]),
                moore=tuple(zb + 2 * eb for zb, eb in zip(z, eps)),
                moore_exponents=tuple(exps[j] for j in unconsumed),
                w=bits_for("w", len(red.consumed)),
                consumed_exponents=tuple(exps[j] for j in red.consumed),
            )
        try:
            return resolve_attaching_data(h_matrix=h, phi=phi, **common)
        except (AttachingDataError, DescriptorError) as exc:
            self.error("consistency", str(exc))


def parse_descriptor_text(text: str, source: str = "<input>") -> ManifoldDescriptor:
    """Parse one descriptor file into a validated descriptor."""
    return _Parser(text, source).build()


def _render_case(case: AttachCase) -> str:
    if case.index is None:
        return case.kind
    return f"{case.kind}({case.index})"


def render_descriptor(desc: ManifoldDescriptor) -> str:
    """Canonical invariant-route text for a descriptor; parses back equal."""
    lines = [
        f"l = {desc.l}",
        f"d = {desc.d}",
        f"H = {desc.h1_torsion.render()}",
        f"T = {desc.h2_torsion.render()}",
        f"spin = {str(desc.spin).lower()}",
        f"smooth = {str(desc.smooth).lower()}",
        f"pd_mode = {str(desc.pd_mode).lower()}",
        f"c1 = {desc.c1}",
        f"c2 = {desc.c2}",
        f"consumed = [{', '.join(str(j) for j in desc.consumed)}]",
        f"case = {_render_case(desc.case)}",
    ]
    return "\n".join(lines) + "\n"


# -- reports -------------------------------------------------------------------

_CASE_PHRASES = {
    "null": "trivial top attachment; the top cell splits off as a sphere",
    "eta": "top cell attached by a suspended Hopf map into a two-sphere summand",
    "tilde_eta": "top cell attached by a lifted Hopf map into a two-primary Moore summand",
    "ip_tilde_eta": "top cell attached by a lifted Hopf map carried into an absorbed two-stage piece",
    "eta_sq": "top cell attached by a doubly suspended squared Hopf map into a three-sphere summand",
    "i_eta_sq": "top cell attached by a squared Hopf map carried into a two-primary Moore summand",
}


def _trace_row(contribution):
    row = [contribution.summand.render(), contribution.group.render()]
    if contribution.implied:
        row.append("implied")
    return row


def _expected_shift(hm, i, shift):
    j = i - shift
    return hm[j] if 1 <= j <= 5 else _0


def build_report(desc, mode="single", run_checks=True, inject_fault=False):
    """Compute everything for one descriptor; returns a JSON-ready dict.

    In single mode a first homology with three-torsion is an error; in
    double mode the single suspension is simply reported as not split.
    """
    single = None
    single_reason = None
    try:
        single = suspension_decomposition(desc)
    except DecompositionError as exc:
        single_reason = str(exc)
        if mode == "single":
            raise
    double = double_suspension_decomposition(desc)
    hm = manifold_homology(desc)

    try:
        k_comp, k_ok = k_group(desc), True
    except AssertionError:
        k_comp, k_ok = None, False
    try:
        ko_comp, ko_ok = ko_group(desc), True
    except AssertionError:
        ko_comp, ko_ok = None, False
    p3 = pi3(desc)
    cross = pi4_sigma_crosscheck(desc) if single is not None else None

    report = {
        "input": {
            "l": desc.l,
            "d": desc.d,
            "h1_torsion": desc.h1_torsion.render(),
            "h2_torsion": desc.h2_torsion.render(),
            "spin": desc.spin,
            "smooth": desc.smooth,
            "pd_mode": desc.pd_mode,
            "c1": desc.c1,
            "c2": desc.c2,
            "consumed": list(desc.consumed),
            "case": _render_case(desc.case),
        },
        "mode": mode,
        "case": {"tag": desc.case.kind, "phrase": _CASE_PHRASES[desc.case.kind]},
        "single_suspension": single.render() if single is not None else None,
        "double_suspension": double.render(),
        "sections": {f"w{k}": homology_section(desc, k).render() for k in (3, 4, 5)},
        "homology": {str(i): hm[i].render() for i in range(6)},
        "invariants": {
            "k": k_closed_form(desc).render(),
            "ko": ko_closed_form(desc).render(),
            "pi1": hurewicz_cohomotopy(desc, 1).render(),
            "pi3": p3.render(),
            "pi5": hurewicz_cohomotopy(desc, 5).render(),
        },
    }
    if single is None:
        report["single_suspension_note"] = single_reason
    traces = {}
    if k_comp is not None:
        traces["k"] = [_trace_row(c) for c in k_comp.contributions]
    if ko_comp is not None:
        traces["ko"] = [_trace_row(c) for c in ko_comp.contributions]
    if cross is not None:
        traces["pi4_sigma"] = [_trace_row(c) for c in cross.contributions]
    report["traces"] = traces

    checks = {}
    if run_checks:
        if inject_fault:
            checks["homology_shift"] = "fail (injected fault)"
        else:
            w, shift = (single, 1) if single is not None else (double, 2)
            top = w.top_dim()
            ok = all(
                w.homology_in(i) == _expected_shift(hm, i, shift)
                for i in range(0, top + 2)
            )
            checks["homology_shift"] = "ok" if ok else "fail"
        h = desc.h1_torsion.num_torsion_summands()
        t = desc.h2_torsion.num_torsion_summands()
        want = 2 * desc.l + 2 * desc.d + 2 * h + t + 1
        checks["weight_count"] = "ok" if (single or double).weight() == want else "fail"
        checks["complex_k_balance"] = "ok" if k_ok else "fail"
        checks["real_k_balance"] = "ok" if ko_ok else "fail"
        if cross is None:
            checks["cohomotopy_crosscheck"] = "skipped (single suspension not split)"
        else:
            checks["cohomotopy_crosscheck"] = "ok" if cross.group == p3 else "fail"
    report["checks"] = checks
    return report


def render_human(report) -> str:
    inp = report["input"]
    geometry = "smooth" if inp["smooth"] else "pd complex"
    lines = [
        f"descriptor: l={inp['l']} d={inp['d']} H={inp['h1_torsion']} "
        f"T={inp['h2_torsion']} spin={str(inp['spin']).lower()} ({geometry})",
        f"attachment: c1={inp['c1']} c2={inp['c2']} consumed={inp['consumed']} "
        f"case={inp['case']}",
        f"case {report['case']['tag']}: {report['case']['phrase']}",
        "",
    ]
    if report["single_suspension"] is not None:
        lines.append(f"suspension:         {report['single_suspension']}")
    else:
        lines.append(f"suspension:         not split ({report['single_suspension_note']})")
    lines.append(f"double suspension:  {report['double_suspension']}")
    lines.append("homology sections:")
    for k in ("w3", "w4", "w5"):
        lines.append(f"  {k.upper()} = {report['sections'][k]}")
    inv = report["invariants"]
    lines.append("invariants:")
    lines.append(f"  reduced K  = {inv['k']}")
    lines.append(f"  reduced KO = {inv['ko']}")
    lines.append(f"  pi^1 = {inv['pi1']}")
    lines.append(f"  pi^3 = {inv['pi3']}")
    lines.append(f"  pi^5 = {inv['pi5']}")
    if "pi4_sigma" in report["traces"]:
        lines.append("pi^3 via maps of the suspension into S^4:")
        for row in report["traces"]["pi4_sigma"]:
            note = "   (implied by connectivity)" if len(row) > 2 else ""
            lines.append(f"  {row[0]:<18} -> {row[1]}{note}")
    if report["checks"]:
        lines.append("checks:")
        for name, verdict in sorted(report["checks"].items()):
            lines.append(f"  {name}: {verdict}")
    return "\n".join(lines) + "\n"


# -- driver ----------------------------------------------------------------------


@dataclass(frozen=True)
class RunConfig:
    paths: tuple[str, ...] = ()
    mode: str = "single"
    fmt: str = "human"
    check: str = "all"
    out: str | None = None
    inject_fault: bool = False


def run(config: RunConfig, stdin=None, stdout=None, stderr=None) -> int:
    """Process every input; 0 = clean, 1 = failed check, 2 = bad input."""
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    sources = []
    if config.paths:
        for path in config.paths:
            try:
                with open(path, encoding="utf-8") as fh:
                    sources.append((path, fh.read()))
            except OSError as exc:
                print(f"{path}: {exc.strerror or exc}", file=stderr)
                return 2
    else:
        sources.append(("<stdin>", (stdin if stdin is not None else sys.stdin).read()))

    outputs = []
    worst = 0
    for source, text in sources:
        try:
            desc = parse_descriptor_text(text, source=source)
            report = build_report(
                desc,
                mode=config.mode,
                run_checks=config.check == "all",
                inject_fault=config.inject_fault,
            )
        except ParseError as exc:
            print(str(exc), file=stderr)
            worst = max(worst, 2)
            continue
        except (DescriptorError, DecompositionError, AttachingDataError) as exc:
            print(f"{source}: {exc}", file=stderr)
            worst = max(worst, 2)
            continue
        if any(str(v).startswith("fail") for v in report["checks"].values()):
            worst = max(worst, 1)
        outputs.append((source, report))

    if config.fmt == "structured":
        if len(sources) == 1:
            payload = "".join(
                json.dumps(r, sort_keys=True, indent=2) + "\n" for _, r in outputs
            )
        else:
            payload = "".join(
                json.dumps({"source": s, **r}, sort_keys=True, separators=(",", ":"))
                + "\n"
                for s, r in outputs
            )
    else:
        chunks = []
        for s, r in outputs:
            header = f"== {s} ==\n" if len(sources) > 1 else ""
            chunks.append(header + render_human(r))
        payload = "\n".join(chunks)

    if config.out:
        with open(config.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        stdout.write(payload)
    return worst


def make_arg_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="susp5",
        description="Suspension splittings and stable invariants of "
        "five-dimensional descriptors.",
    )
    ap.add_argument(
        "paths", nargs="*", help="descriptor files (standard input when omitted)"
    )
    ap.add_argument("--mode", choices=("single", "double"), default="single")
    ap.add_argument("--format", dest="fmt", choices=("human", "structured"), default="human")
    ap.add_argument("--check", choices=("all", "none"), default="all")
    ap.add_argument("--out", default=None, help="write the report here instead of stdout")
    ap.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    return ap


def main(argv=None) -> int:
    ns = make_arg_parser().parse_args(argv)
    config = RunConfig(
        paths=tuple(ns.paths),
        mode=ns.mode,
        fmt=ns.fmt,
        check=ns.check,
        out=ns.out,
        inject_fault=ns.inject_fault,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
