"""JSON profile and result documents with exact rational values.

Rationals travel as strings: ``"p/q"``, an integer numeral, or a decimal
numeral that expands exactly (``"48.33"`` is 4833/100).  Numbers appearing
as JSON floats are intercepted before Python turns them into binary floats,
so nothing is ever rounded.  A profile document carries the domain, the
word names, and one entry per agent in exactly one of three forms::

    {"domain": {"lower": "0", "upper": "100"},
     "words": ["F", "D", "C", "B", "A"],
     "agents": [{"endpoints": ["20", "40", "60", "80"]}, ...]}

Agents may instead carry ``"extents"`` (word name to ``[left, right]`` or
``null``, passed through vocabulary encoding) or ``"exemplar_labels"``
(word names aligned with a shared top-level ``"exemplars"`` list).  Result
documents are canonical: parsing a serialized result reproduces it field
for field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .axioms import AxiomReport
from .core import (
    Domain,
    EndpointMultiset,
    Profile,
    Vocabulary,
    as_rational,
    decode_endpoints,
    encode_vocabulary,
)
from .errors import ParseError, VocaggError
from .exemplars import LabeledExemplars
from .rules import (
    DictatorRule,
    ExtendedMedianRule,
    MeanRule,
    MultisetRule,
    PhantomMatrix,
    PositionVector,
    PRule,
    median_positions,
)


def rational_str(value: Fraction) -> str:
    """Canonical string form: ``"p/q"``, or just ``"p"`` for integers."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(value: object, where: str = "value") -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ParseError(f"{where}: expected an exact numeral, got {value!r}")
    if isinstance(value, (int, str, Fraction)):
        try:
            return as_rational(value)
        except ParseError as exc:
            raise ParseError(f"{where}: {exc}") from None
    raise ParseError(f"{where}: expected an exact numeral, got {value!r}")


def load_json(text: str) -> object:
    """Parse JSON keeping float literals as their raw strings."""
    try:
        return json.loads(text, parse_float=str)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def jsonify(value: object) -> object:
    """Recursively convert exact values into JSON-ready structures."""
    if isinstance(value, Fraction):
        return rational_str(value)
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, float):
        raise TypeError(f"refusing to serialize the float {value!r}")
    if isinstance(value, dict):
        return {str(k): jsonify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonify(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(jsonify(v) for v in value)
    if isinstance(value, EndpointMultiset):
        return [rational_str(v) for v in value.values]
    if isinstance(value, Profile):
        return [[rational_str(v) for v in row.values] for row in value.rows]
    raise TypeError(f"cannot serialize {value!r}")


def report_to_json(report: AxiomReport) -> dict:
    return {
        "axiom": report.axiom,
        "verdict": report.verdict,
        "seed": jsonify(report.seed),
        "trials": report.trials,
        "witness": jsonify(report.witness),
    }


# ---------------------------------------------------------------------------
# profile documents


@dataclass(frozen=True)
class ParsedInput:
    """A decoded profile document, with the form it arrived in."""

    kind: str  # "endpoints" | "extents" | "exemplars"
    domain: Domain
    words: tuple[str, ...]
    profile: Optional[Profile] = None
    vocabularies: tuple[Vocabulary, ...] = ()
    exemplars: tuple[LabeledExemplars, ...] = ()


def default_words(count: int) -> tuple[str, ...]:
    return tuple(f"w{j}" for j in range(1, count + 1))


def _parse_domain(payload: object) -> Domain:
    if not isinstance(payload, dict):
        raise ParseError("domain: expected an object with lower and upper")
    for key in ("lower", "upper"):
        if key not in payload:
            raise ParseError(f"domain.{key}: missing")
    lower = parse_rational(payload["lower"], "domain.lower")
    upper = parse_rational(payload["upper"], "domain.upper")
    try:
        return Domain(lower, upper)
    except ValueError as exc:
        raise ParseError(f"domain: {exc}") from None


def parse_profile(text: str) -> ParsedInput:
    """Decode a profile document into exact objects.

    All agents must use the same form.  Extent-form agents are run through
    vocabulary encoding, so the result always carries a profile except for
    exemplar documents, which stay as labeled observations.
    """
    payload = load_json(text)
    if not isinstance(payload, dict):
        raise ParseError("expected a JSON object at the top level")
    if "domain" not in payload:
        raise ParseError("domain: missing")
    domain = _parse_domain(payload["domain"])
    agents = payload.get("agents")
    if not isinstance(agents, list) or not agents:
        raise ParseError("agents: expected a nonempty list")
    words_payload = payload.get("words")
    words: Optional[tuple[str, ...]] = None
    if words_payload is not None:
        if (
            not isinstance(words_payload, list)
            or not words_payload
            or not all(isinstance(w, str) for w in words_payload)
        ):
            raise ParseError("words: expected a nonempty list of strings")
        if len(set(words_payload)) != len(words_payload):
            raise ParseError("words: names must be distinct")
        words = tuple(words_payload)
    forms = set()
    for i, agent in enumerate(agents, start=1):
        if not isinstance(agent, dict):
            raise ParseError(f"agents[{i}]: expected an object")
        keys = {"endpoints", "extents", "exemplar_labels"} & agent.keys()
        if len(keys) != 1:
            raise ParseError(
                f"agents[{i}]: need exactly one of endpoints, extents, exemplar_labels"
            )
        forms.add(next(iter(keys)))
    if len(forms) != 1:
        raise ParseError("agents: all entries must use the same form")
    form = forms.pop()
    if form == "endpoints":
        return _parse_endpoint_agents(domain, words, agents)
    if form == "extents":
        return _parse_extent_agents(domain, words, agents)
    return _parse_exemplar_agents(domain, words, payload, agents)


def _parse_endpoint_agents(
    domain: Domain, words: Optional[tuple[str, ...]], agents: list
) -> ParsedInput:
    rows = []
    m: Optional[int] = None
    for i, agent in enumerate(agents, start=1):
        where = f"agents[{i}].endpoints"
        entries = agent["endpoints"]
        if not isinstance(entries, list):
            raise ParseError(f"{where}: expected a list")
        values = tuple(
            parse_rational(v, f"{where}[{j}]") for j, v in enumerate(entries)
        )
        if m is None:
            m = len(values)
        elif len(values) != m:
            raise ParseError(f"{where}: {len(values)} endpoints, expected {m}")
        try:
            rows.append(EndpointMultiset(domain, values))
        except ValueError as exc:
            raise ParseError(f"{where}: {exc}") from None
    if words is not None and len(words) != m + 1:
        raise ParseError(f"words: {len(words)} names for {m + 1} words")
    profile = Profile(tuple(rows))
    return ParsedInput(
        "endpoints", domain, words or default_words(m + 1), profile=profile
    )


def _parse_extent_agents(
    domain: Domain, words: Optional[tuple[str, ...]], agents: list
) -> ParsedInput:
    if words is None:
        raise ParseError("words: required for extent-form agents")
    vocabularies = []
    for i, agent in enumerate(agents, start=1):
        where = f"agents[{i}].extents"
        payload = agent["extents"]
        if not isinstance(payload, dict):
            raise ParseError(f"{where}: expected an object keyed by word name")
        unknown = set(payload) - set(words)
        if unknown:
            raise ParseError(f"{where}: unknown words {sorted(unknown)}")
        extents = []
        for name in words:
            entry = payload.get(name)
            if entry is None:
                extents.append(None)
                continue
            if not (isinstance(entry, list) and len(entry) == 2):
                raise ParseError(f"{where}.{name}: expected [left, right] or null")
            extents.append(
                (
                    parse_rational(entry[0], f"{where}.{name}[0]"),
                    parse_rational(entry[1], f"{where}.{name}[1]"),
                )
            )
        try:
            vocabularies.append(Vocabulary(domain, tuple(extents)))
        except (ValueError, VocaggError) as exc:
            raise ParseError(f"{where}: {exc}") from None
    try:
        profile = Profile(tuple(encode_vocabulary(v) for v in vocabularies))
    except (ValueError, VocaggError) as exc:
        raise ParseError(f"agents: {exc}") from None
    return ParsedInput(
        "extents", domain, words, profile=profile, vocabularies=tuple(vocabularies)
    )


def _parse_exemplar_agents(
    domain: Domain,
    words: Optional[tuple[str, ...]],
    payload: dict,
    agents: list,
) -> ParsedInput:
    if words is None:
        raise ParseError("words: required for exemplar-form agents")
    shared = payload.get("exemplars")
    if not isinstance(shared, list) or not shared:
        raise ParseError("exemplars: expected a nonempty list of values")
    values = tuple(
        parse_rational(v, f"exemplars[{j}]") for j, v in enumerate(shared)
    )
    index_of = {name: j for j, name in enumerate(words)}
    rows = []
    for i, agent in enumerate(agents, start=1):
        where = f"agents[{i}].exemplar_labels"
        labels = agent["exemplar_labels"]
        if not isinstance(labels, list) or len(labels) != len(values):
            raise ParseError(
                f"{where}: expected one label per exemplar ({len(values)})"
            )
        points = []
        for j, label in enumerate(labels):
            if label not in index_of:
                raise ParseError(f"{where}[{j}]: unknown word {label!r}")
            points.append((values[j], index_of[label]))
        try:
            rows.append(LabeledExemplars(domain, tuple(points)))
        except (ValueError, VocaggError) as exc:
            raise ParseError(f"{where}: {exc}") from None
    return ParsedInput("exemplars", domain, words, exemplars=tuple(rows))


# ---------------------------------------------------------------------------
# rule descriptors


def describe_rule(rule: object) -> dict:
    """The canonical JSON descriptor that rebuilds a rule."""
    if isinstance(rule, PRule):
        return {"kind": "p-rule", "positions": list(rule.positions.positions)}
    if isinstance(rule, ExtendedMedianRule):
        return {
            "kind": "extended-median",
            "columns": [
                [rational_str(q) for q in column]
                for column in rule.phantoms.columns
            ],
        }
    if isinstance(rule, MeanRule):
        return {"kind": "mean"}
    if isinstance(rule, MultisetRule):
        return {"kind": "multiset"}
    if isinstance(rule, DictatorRule):
        return {"kind": "dictator", "agent": rule.agent}
    name = getattr(rule, "name", None)
    if name is not None:
        return {"kind": "fixture", "name": name}
    raise ParseError(f"cannot describe rule {rule!r}")


def _p_rule(entries: tuple[int, ...], n: int) -> PRule:
    try:
        positions = PositionVector(entries)
        positions.validate_for(n)
    except (ValueError, VocaggError) as exc:
        raise ParseError(str(exc)) from None
    return PRule(positions)


def rule_from_descriptor(
    descriptor: Union[dict, str], n: int, m: int, domain: Domain
) -> object:
    """Rebuild a rule from a descriptor object or CLI string.

    String forms: ``median``, ``mean``, ``multiset``, ``dictator:i``,
    ``p:2,3,4``, ``fixture:name``.  The ``median`` form resolves the
    positions from the profile shape at hand.
    """
    from .axioms import fixture_rule  # local import to avoid a cycle at module load

    if isinstance(descriptor, str):
        text = descriptor.strip()
        head, _, tail = text.partition(":")
        if head == "median" and not tail:
            return PRule(median_positions(n, m))
        if head == "mean" and not tail:
            return MeanRule()
        if head == "multiset" and not tail:
            return MultisetRule()
        if head == "dictator":
            try:
                return DictatorRule(int(tail))
            except ValueError:
                raise ParseError(f"dictator needs an agent index, got {tail!r}") from None
        if head == "p":
            try:
                entries = tuple(int(part) for part in tail.split(","))
            except ValueError:
                raise ParseError(f"positions must be integers, got {tail!r}") from None
            return _p_rule(entries, n)
        if head == "fixture":
            return fixture_rule(tail)
        raise ParseError(f"unknown rule {descriptor!r}")
    if not isinstance(descriptor, dict) or "kind" not in descriptor:
        raise ParseError(f"rule descriptor needs a kind: {descriptor!r}")
    kind = descriptor["kind"]
    if kind == "median":
        return PRule(median_positions(n, m))
    if kind == "p-rule":
        try:
            entries = tuple(int(p) for p in descriptor["positions"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad p-rule descriptor: {exc}") from None
        return _p_rule(entries, n)
    if kind == "extended-median":
        columns = descriptor.get("columns")
        if not isinstance(columns, list):
            raise ParseError("extended-median descriptor needs columns")
        parsed = tuple(
            tuple(
                parse_rational(q, f"columns[{k}][{j}]")
                for j, q in enumerate(column)
            )
            for k, column in enumerate(columns)
        )
        try:
            return ExtendedMedianRule(PhantomMatrix(domain, parsed))
        except ValueError as exc:
            raise ParseError(f"bad phantom matrix: {exc}") from None
    if kind == "mean":
        return MeanRule()
    if kind == "multiset":
        return MultisetRule()
    if kind == "dictator":
        try:
            return DictatorRule(int(descriptor["agent"]))
        except (KeyError, TypeError, ValueError):
            raise ParseError("dictator descriptor needs an agent index") from None
    if kind == "fixture":
        return fixture_rule(str(descriptor.get("name")))
    raise ParseError(f"unknown rule kind {kind!r}")


# ---------------------------------------------------------------------------
# result documents


@dataclass(frozen=True)
class ResultDocument:
    """Canonical aggregation output: rule, collective endpoints, vocabulary.

    Everything inside is already JSON-pure except the exact values, so
    ``parse_result(serialize_result(doc)) == doc`` holds field for field.
    """

    rule: dict
    domain: Domain
    words: tuple[str, ...]
    endpoints: tuple[Fraction, ...]
    vocabulary: tuple[Optional[tuple[Fraction, Fraction]], ...]
    reports: tuple[dict, ...] = ()
    witnesses: tuple[dict, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "rule", jsonify(self.rule))
        object.__setattr__(self, "words", tuple(self.words))
        object.__setattr__(
            self, "endpoints", tuple(as_rational(v) for v in self.endpoints)
        )
        cleaned = []
        for extent in self.vocabulary:
            if extent is None:
                cleaned.append(None)
            else:
                cleaned.append((as_rational(extent[0]), as_rational(extent[1])))
        object.__setattr__(self, "vocabulary", tuple(cleaned))
        object.__setattr__(self, "reports", tuple(jsonify(r) for r in self.reports))
        object.__setattr__(self, "witnesses", tuple(jsonify(w) for w in self.witnesses))
        if len(self.words) != len(self.endpoints) + 1:
            raise ParseError(
                f"{len(self.words)} words for {len(self.endpoints)} endpoints"
            )
        if len(self.vocabulary) != len(self.words):
            raise ParseError("one extent slot per word required")


def build_result(
    rule: object,
    words: Sequence[str],
    endpoints: EndpointMultiset,
    reports: Sequence[AxiomReport] = (),
    witnesses: Sequence[dict] = (),
) -> ResultDocument:
    vocabulary = decode_endpoints(endpoints)
    return ResultDocument(
        rule=describe_rule(rule) if not isinstance(rule, dict) else rule,
        domain=endpoints.domain,
        words=tuple(words),
        endpoints=endpoints.values,
        vocabulary=vocabulary.extents,
        reports=tuple(report_to_json(r) for r in reports),
        witnesses=tuple(witnesses),
    )


def serialize_result(doc: ResultDocument) -> str:
    payload = {
        "rule": doc.rule,
        "domain": {
            "lower": rational_str(doc.domain.lower),
            "upper": rational_str(doc.domain.upper),
        },
        "words": list(doc.words),
        "endpoints": [rational_str(v) for v in doc.endpoints],
        "vocabulary": {
            name: (
                None
                if extent is None
                else [rational_str(extent[0]), rational_str(extent[1])]
            )
            for name, extent in zip(doc.words, doc.vocabulary)
        },
        "reports": list(doc.reports),
        "witnesses": list(doc.witnesses),
    }
    return json.dumps(payload, indent=2) + "\n"


def parse_result(text: str) -> ResultDocument:
    payload = load_json(text)
    if not isinstance(payload, dict):
        raise ParseError("expected a JSON object at the top level")
    for key in ("rule", "domain", "words", "endpoints", "vocabulary"):
        if key not in payload:
            raise ParseError(f"{key}: missing")
    domain = _parse_domain(payload["domain"])
    words = tuple(payload["words"])
    endpoints = tuple(
        parse_rational(v, f"endpoints[{j}]")
        for j, v in enumerate(payload["endpoints"])
    )
    vocabulary_payload = payload["vocabulary"]
    if not isinstance(vocabulary_payload, dict):
        raise ParseError("vocabulary: expected an object keyed by word name")
    vocabulary = []
    for name in words:
        entry = vocabulary_payload.get(name)
        if entry is None:
            vocabulary.append(None)
        else:
            vocabulary.append(
                (
                    parse_rational(entry[0], f"vocabulary.{name}[0]"),
                    parse_rational(entry[1], f"vocabulary.{name}[1]"),
                )
            )
    return ResultDocument(
        rule=payload["rule"],
        domain=domain,
        words=words,
        endpoints=endpoints,
        vocabulary=tuple(vocabulary),
        reports=tuple(payload.get("reports", ())),
        witnesses=tuple(payload.get("witnesses", ())),
    )
