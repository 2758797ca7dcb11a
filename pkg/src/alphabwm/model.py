"""Fuzzy pairwise comparison systems, the linguistic scale, alpha grids and JSON I/O."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List

from .fuzzy import Interval, TriangularFuzzyNumber, alpha_cut

# Linguistic scale: label -> TFN
SCALE: Dict[str, TriangularFuzzyNumber] = {
    "1": TriangularFuzzyNumber(1, 1, 1),
    "2": TriangularFuzzyNumber(1, 2, 3),
    "3": TriangularFuzzyNumber(2, 3, 4),
    "4": TriangularFuzzyNumber(3, 4, 5),
    "5": TriangularFuzzyNumber(4, 5, 6),
    "6": TriangularFuzzyNumber(5, 6, 7),
    "7": TriangularFuzzyNumber(6, 7, 8),
    "8": TriangularFuzzyNumber(7, 8, 9),
    "9": TriangularFuzzyNumber(9, 9, 9),
}

SCALE_DESCRIPTIONS: Dict[str, str] = {
    "1": "Equally preference",
    "2": "Intermediate value",
    "3": "Weakly preference",
    "4": "Intermediate value",
    "5": "Essentially preference",
    "6": "Intermediate value",
    "7": "Very strong preference",
    "8": "Intermediate value",
    "9": "Absolutely preference",
}


class ValidationError(ValueError):
    """Input document violates the comparison-system schema or invariants."""

    def __init__(self, field_path: str, message: str):
        self.field_path = field_path
        super().__init__(f"{field_path}: {message}")

    @property
    def message(self) -> str:
        return str(self).split(": ", 1)[1]


def scale_lookup(term: str) -> TriangularFuzzyNumber:
    """TFN associated with a linguistic label '1'..'9'."""
    try:
        return SCALE[term]
    except KeyError:
        raise ValidationError("term", f"unknown linguistic label {term!r}") from None


@dataclass(frozen=True)
class AlphaGrid:
    """Finite alpha-level set containing 0 and 1, strictly increasing."""

    levels: tuple

    def __post_init__(self):
        lv = tuple(float(a) for a in self.levels)
        if len(lv) < 2 or lv[0] != 0.0 or lv[-1] != 1.0:
            raise ValueError("grid must contain 0 and 1")
        if any(b <= a for a, b in zip(lv, lv[1:])):
            raise ValueError("grid levels must be strictly increasing")
        object.__setattr__(self, "levels", lv)

    @property
    def mesh(self) -> float:
        return max(b - a for a, b in zip(self.levels, self.levels[1:]))

    def __len__(self) -> int:
        return len(self.levels)


def uniform_grid(m: int) -> AlphaGrid:
    """Uniform grid {0, 1/(m-1), ..., 1} with mesh 1/(m-1)."""
    if m < 2:
        raise ValueError(f"uniform grid needs m >= 2, got {m}")
    return AlphaGrid(tuple(i / (m - 1) for i in range(m)))


@dataclass(frozen=True)
class Fpcs:
    """Fuzzy pairwise comparison system: best-to-others and others-to-worst vectors."""

    criteria: tuple
    best: int
    worst: int
    best_to_others: tuple   # linguistic labels, length n
    others_to_worst: tuple  # linguistic labels, length n

    @property
    def n(self) -> int:
        return len(self.criteria)

    @property
    def best_worst_term(self) -> str:
        return self.best_to_others[self.worst]

    @property
    def degenerate(self) -> bool:
        """Best and worst judged equally preferable; no CI row exists for this case."""
        return self.best_worst_term == "1"

    @property
    def others(self) -> List[int]:
        return [i for i in range(self.n) if i not in (self.best, self.worst)]

    def best_to(self, i: int) -> TriangularFuzzyNumber:
        return scale_lookup(self.best_to_others[i])

    def to_worst(self, i: int) -> TriangularFuzzyNumber:
        return scale_lookup(self.others_to_worst[i])


def judgment_cut(fpcs: Fpcs, i: int, j: int, alpha: float) -> Interval:
    """Alpha-cut of a stored comparison: row `best` or column `worst`."""
    if i == fpcs.best:
        return alpha_cut(fpcs.best_to(j), alpha)
    if j == fpcs.worst:
        return alpha_cut(fpcs.to_worst(i), alpha)
    raise LookupError(f"comparison ({i}, {j}) is not stored; only row {fpcs.best} "
                      f"and column {fpcs.worst} are elicited")


def _require(doc: dict, key: str, path: str = ""):
    if key not in doc:
        raise ValidationError(f"{path}{key}", "missing field")
    return doc[key]


def parse_fpcs(doc: dict, path: str = "") -> Fpcs:
    """Validate a comparison-system document and build an Fpcs."""
    criteria = _require(doc, "criteria", path)
    if not isinstance(criteria, list) or not all(isinstance(c, str) for c in criteria):
        raise ValidationError(f"{path}criteria", "must be a list of strings")
    if len(criteria) < 2:
        raise ValidationError(f"{path}criteria", "need at least two criteria")
    if len(set(criteria)) != len(criteria):
        raise ValidationError(f"{path}criteria", "criterion names must be unique")
    n = len(criteria)

    best_name = _require(doc, "best", path)
    worst_name = _require(doc, "worst", path)
    if best_name not in criteria:
        raise ValidationError(f"{path}best", f"unknown criterion {best_name!r}")
    if worst_name not in criteria:
        raise ValidationError(f"{path}worst", f"unknown criterion {worst_name!r}")
    b = criteria.index(best_name)
    w = criteria.index(worst_name)
    if b == w:
        raise ValidationError(f"{path}worst", "best and worst must differ")

    def vector(key: str) -> List[str]:
        vec = _require(doc, key, path)
        if not isinstance(vec, list) or len(vec) != n:
            raise ValidationError(f"{path}{key}", f"expected a list of {n} labels")
        for k, term in enumerate(vec):
            if term not in SCALE:
                raise ValidationError(f"{path}{key}[{k}]",
                                      f"unknown linguistic label {term!r}")
        return vec

    bto = vector("best_to_others")
    otw = vector("others_to_worst")
    if bto[b] != "1":
        raise ValidationError(f"{path}best_to_others[{b}]",
                              "self-comparison of the best criterion must be '1'")
    if otw[w] != "1":
        raise ValidationError(f"{path}others_to_worst[{w}]",
                              "self-comparison of the worst criterion must be '1'")
    if bto[w] != otw[b]:
        raise ValidationError(f"{path}others_to_worst[{b}]",
                              f"best-to-worst judgment mismatch: best_to_others[{w}] is "
                              f"{bto[w]!r} but others_to_worst[{b}] is {otw[b]!r}")

    return Fpcs(tuple(criteria), b, w, tuple(bto), tuple(otw))


def fpcs_to_dict(fpcs: Fpcs) -> dict:
    return {
        "criteria": list(fpcs.criteria),
        "best": fpcs.criteria[fpcs.best],
        "worst": fpcs.criteria[fpcs.worst],
        "best_to_others": list(fpcs.best_to_others),
        "others_to_worst": list(fpcs.others_to_worst),
    }


@dataclass(frozen=True)
class Hierarchy:
    """Two-level tree: a root system plus one child system per parent criterion."""

    root: Fpcs
    children: Dict[str, Fpcs] = field(default_factory=dict)


def parse_hierarchy(doc: dict) -> Hierarchy:
    root = parse_fpcs(_require(doc, "root"), "root.")
    raw_children = _require(doc, "children")
    if not isinstance(raw_children, dict):
        raise ValidationError("children", "must be a mapping of parent criterion to system")
    children = {}
    for name, child_doc in raw_children.items():
        if name not in root.criteria:
            raise ValidationError(f"children.{name}", "not a root criterion")
        children[name] = parse_fpcs(child_doc, f"children.{name}.")
    for name in root.criteria:
        if name not in children:
            raise ValidationError(f"children.{name}", "missing child system")
    return Hierarchy(root, children)


def hierarchy_to_dict(h: Hierarchy) -> dict:
    return {"root": fpcs_to_dict(h.root),
            "children": {k: fpcs_to_dict(v) for k, v in h.children.items()}}


def load_document(path: str):
    """Load a JSON file and return an Fpcs or Hierarchy depending on its shape."""
    with open(path) as fh:
        doc = json.load(fh)
    return parse_document(doc)


def parse_document(doc: dict):
    if not isinstance(doc, dict):
        raise ValidationError("", "document must be a JSON object")
    if "root" in doc:
        return parse_hierarchy(doc)
    return parse_fpcs(doc)
