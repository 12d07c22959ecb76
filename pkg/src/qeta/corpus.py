"""Line-oriented corpus files: parse entries, run them, collect reports.

A corpus file is a sequence of ``[entry]`` blocks of ``key = value`` lines
(string values double-quoted, numbers bare), with ``#`` comment lines and
blank lines ignored, for example::

    [entry]
    name = "lemma6-f3-over-f1"
    kind = "equality"
    lhs = "f3/f1"
    rhs = "f4*f6*f16*f24^2/(f2^2*f8*f12*f48) + q*f6*f8^2*f48/(f2^2*f16*f24)"
    order = 500
    ref = "Lemma 6"

Six entry kinds are understood (see _REQUIRED for their fields):

* ``equality``      -- two expressions agree coefficientwise.
* ``congruence``    -- coefficients of ``base`` on the progression m*n+j
  are divisible by ``modulus`` up to ``nmax``.
* ``frobenius``     -- f_{ap}^b == f_a^{bp} (mod p) for the whole grid
  1 <= a <= amax, 1 <= b <= bmax.
* ``convolution``   -- the p*g convolution congruence for a(n) mod 2.
* ``empty-support`` -- the theta indicator vanishes on a progression.
* ``oracle-match``  -- an expression's coefficients equal an oracle table.

``order`` defaults to 500 and ``nmax`` to 2000 when omitted.  ``ref`` is
free-text provenance and never interpreted.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from importlib import resources
from pathlib import Path

from .dsl import parse
from .errors import CorpusError, QetaError
from .verify import (
    IdentityCheck,
    Report,
    Verdict,
    check_congruence_progression,
    check_convolution,
    check_empty_support,
    check_frobenius,
    check_identity,
    check_oracle_match,
)

__all__ = [
    "CorpusEntry", "parse_corpus", "load_corpus", "default_corpus_text",
    "run_entry", "run_corpus", "DEFAULT_ORDER", "DEFAULT_NMAX",
]

DEFAULT_ORDER = 500
DEFAULT_NMAX = 2000

_STRING_KEYS = {"name", "kind", "lhs", "rhs", "expr", "base", "oracle", "ref"}
_INT_KEYS = {"order", "nmax", "m", "j", "modulus", "p", "amax", "bmax"}

_REQUIRED = {
    "equality": {"lhs", "rhs"},
    "congruence": {"base", "m", "j", "modulus"},
    "frobenius": {"p"},
    "convolution": set(),
    "empty-support": {"m", "j"},
    "oracle-match": {"expr", "oracle"},
}
_OPTIONAL = {
    "equality": {"order"},
    "congruence": {"nmax"},
    "frobenius": {"amax", "bmax", "order"},
    "convolution": {"nmax"},
    "empty-support": {"nmax"},
    "oracle-match": {"order"},
}


@dataclass(frozen=True)
class CorpusEntry:
    """One parsed corpus entry; expression fields stay as DSL text."""

    name: str
    kind: str
    line: int = 0
    ref: str = ""
    lhs: str | None = None
    rhs: str | None = None
    expr: str | None = None
    base: str | None = None
    oracle: str | None = None
    m: int | None = None
    j: int | None = None
    modulus: int | None = None
    p: int | None = None
    amax: int = 4
    bmax: int = 3
    order: int = DEFAULT_ORDER
    nmax: int = DEFAULT_NMAX


def _parse_value(raw: str, key: str, line_no: int):
    raw = raw.strip()
    if key in _STRING_KEYS:
        if len(raw) < 2 or raw[0] != '"' or raw[-1] != '"':
            raise CorpusError(
                f'line {line_no}: value for "{key}" must be double-quoted', line=line_no
            )
        return raw[1:-1]
    if key in _INT_KEYS:
        try:
            return int(raw)
        except ValueError:
            raise CorpusError(
                f'line {line_no}: value for "{key}" must be an integer, got {raw!r}',
                line=line_no,
            ) from None
    raise CorpusError(f'line {line_no}: unknown key "{key}"', line=line_no)


def _finish_entry(raw: dict, lines: dict, header_line: int) -> CorpusEntry:
    for required in ("name", "kind"):
        if required not in raw:
            raise CorpusError(
                f'line {header_line}: entry is missing "{required}"', line=header_line
            )
    kind = raw["kind"]
    if kind not in _REQUIRED:
        raise CorpusError(
            f'line {lines["kind"]}: unknown kind "{kind}"', line=lines["kind"]
        )
    allowed = _REQUIRED[kind] | _OPTIONAL[kind] | {"name", "kind", "ref"}
    for key in raw:
        if key not in allowed:
            raise CorpusError(
                f'line {lines[key]}: key "{key}" does not belong to kind "{kind}"',
                line=lines[key],
            )
    for key in _REQUIRED[kind]:
        if key not in raw:
            raise CorpusError(
                f'line {header_line}: kind "{kind}" requires "{key}"', line=header_line
            )
    # expression fields must parse; report against their own line
    for key in ("lhs", "rhs", "expr", "base"):
        if key in raw:
            try:
                parse(raw[key])
            except QetaError as exc:
                raise CorpusError(
                    f'line {lines[key]}: bad expression in "{key}": {exc}',
                    line=lines[key],
                ) from exc
    return CorpusEntry(line=header_line, **raw)


def parse_corpus(text: str) -> list[CorpusEntry]:
    """Parse corpus text; raises CorpusError with a line number on any defect."""
    entries: list[CorpusEntry] = []
    names: set[str] = set()
    raw: dict | None = None
    key_lines: dict = {}
    header_line = 0

    def flush():
        nonlocal raw
        if raw is not None:
            entry = _finish_entry(raw, key_lines, header_line)
            if entry.name in names:
                raise CorpusError(
                    f'line {header_line}: duplicate entry name "{entry.name}"',
                    line=header_line,
                )
            names.add(entry.name)
            entries.append(entry)
            raw = None

    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if stripped == "[entry]":
            flush()
            raw, key_lines, header_line = {}, {}, line_no
            continue
        if "=" not in stripped:
            raise CorpusError(
                f"line {line_no}: expected 'key = value' or '[entry]'", line=line_no
            )
        if raw is None:
            raise CorpusError(
                f"line {line_no}: content before the first [entry]", line=line_no
            )
        key, _, value = stripped.partition("=")
        key = key.strip()
        if key in raw:
            raise CorpusError(f'line {line_no}: duplicate key "{key}"', line=line_no)
        raw[key] = _parse_value(value, key, line_no)
        key_lines[key] = line_no
    flush()
    return entries


def load_corpus(path: str | Path) -> list[CorpusEntry]:
    return parse_corpus(Path(path).read_text(encoding="utf-8"))


def default_corpus_text() -> str:
    """The corpus shipped with the package."""
    return (
        resources.files("qeta.data").joinpath("identities.corpus").read_text("utf-8")
    )


def run_entry(
    entry: CorpusEntry,
    order_override: int | None = None,
    nmax_override: int | None = None,
) -> Report:
    """Run one entry and return its report."""
    if order_override is not None:
        entry = replace(entry, order=order_override)
    if nmax_override is not None:
        entry = replace(entry, nmax=nmax_override)
    if entry.kind == "equality":
        return check_identity(
            IdentityCheck(entry.name, parse(entry.lhs), parse(entry.rhs), order=entry.order)
        )
    if entry.kind == "congruence":
        return check_congruence_progression(
            parse(entry.base), entry.m, entry.j, entry.modulus, entry.nmax, entry.name
        )
    if entry.kind == "frobenius":
        for a in range(1, entry.amax + 1):
            for b in range(1, entry.bmax + 1):
                report = check_frobenius(entry.p, a, b, entry.order, name=entry.name)
                if not report.passed:
                    return report
        return Report(entry.name, Verdict.PASS, entry.order)
    if entry.kind == "convolution":
        return check_convolution(entry.nmax, entry.name)
    if entry.kind == "empty-support":
        return check_empty_support(entry.m, entry.j, entry.nmax, entry.name)
    if entry.kind == "oracle-match":
        return check_oracle_match(parse(entry.expr), entry.oracle, entry.order, entry.name)
    raise CorpusError(f'unknown kind "{entry.kind}"')


def run_corpus(
    entries,
    only: str | None = None,
    order_override: int | None = None,
    nmax_override: int | None = None,
) -> list[Report]:
    """Run entries (optionally filtered by exact name) in corpus order."""
    selected = [e for e in entries if only is None or e.name == only]
    return [run_entry(e, order_override, nmax_override) for e in selected]
