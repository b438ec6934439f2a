"""Loading and dumping the JSON file formats.

Field names are normative and unknown fields are rejected; diagnostics are
collected into `InputFormatError.details` so the CLI can print all problems at
once.  Law checks on the loaded structures raise their own error types.
"""

import json
from pathlib import Path

from .errors import InputFormatError
from .fincat import Presheaf, validate_category
from .normalize import FiniteGroup
from .words import Dfa


def _as_data(source, what):
    if isinstance(source, dict):
        return source
    try:
        text = Path(source).read_text()
    except OSError as exc:
        raise InputFormatError(f"cannot read {what} file {source!r}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(
            f"{what} file {source!r} is not valid JSON: {exc}",
            details=[str(exc)]) from exc
    if not isinstance(data, dict):
        raise InputFormatError(f"{what} file {source!r} must hold a JSON object")
    return data


def _check_fields(data, what, required, optional=()):
    problems = []
    for field in required:
        if field not in data:
            problems.append(f"missing field {field!r}")
    for field in data:
        if field not in required and field not in optional:
            problems.append(f"unknown field {field!r}")
    if problems:
        raise InputFormatError(f"malformed {what}: " + "; ".join(problems),
                               details=problems)


def load_category(source):
    data = _as_data(source, "category")
    _check_fields(data, "category file",
                  ("objects", "morphisms", "identities", "composition"))
    for m in data["morphisms"]:
        if not isinstance(m, dict):
            raise InputFormatError(f"morphism entry {m!r} is not an object")
        _check_fields(m, "morphism entry", ("name", "src", "dst"))
    seen_pairs = set()
    for e in data["composition"]:
        if not isinstance(e, dict):
            raise InputFormatError(f"composition entry {e!r} is not an object")
        _check_fields(e, "composition entry", ("g", "f", "result"))
        pair = (e["g"], e["f"])
        if pair in seen_pairs:
            raise InputFormatError(f"duplicate composition entry for {pair!r}")
        seen_pairs.add(pair)
    return validate_category(data)


def dump_category(cat):
    return {
        "objects": list(cat.objects),
        "morphisms": [{"name": n, "src": s, "dst": d} for n, s, d in cat.morphisms],
        "identities": dict(cat.identities),
        "composition": [{"g": g, "f": f, "result": h}
                        for (g, f), h in sorted(cat.composition.items())],
    }


def load_presheaf(cat, source):
    """Presheaf file: `sets` per object (missing objects mean empty) and
    `actions` per morphism; keys outside the site are rejected."""
    data = _as_data(source, "presheaf")
    _check_fields(data, "presheaf file", ("sets", "actions"))
    bad_objects = [c for c in data["sets"] if c not in cat._obj_index]
    bad_morphisms = [m for m in data["actions"] if m not in cat.src]
    problems = [f"unknown object {c!r} in sets" for c in bad_objects]
    problems += [f"unknown morphism {m!r} in actions" for m in bad_morphisms]
    if problems:
        raise InputFormatError("malformed presheaf file: " + "; ".join(problems),
                               details=problems)
    return Presheaf(cat, data["sets"],
                    {m: dict(table) for m, table in data["actions"].items()},
                    check=True)


def dump_presheaf(X):
    return {
        "sets": {c: list(X.elements(c)) for c in X.site.objects},
        "actions": {m: {str(x): X.action[m][x] for x in X.action[m]}
                    for m, _, _ in X.site.morphisms},
    }


def load_group(source):
    """Group file: elements, row-major index table, and an optional `names`
    map (pretty-print names per element; the "group" key labels the group)."""
    data = _as_data(source, "group")
    _check_fields(data, "group file", ("elements", "table"), optional=("names",))
    elements = data["elements"]
    if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
        raise InputFormatError("group elements must be a list of names")
    names = data.get("names", {})
    display = {k: v for k, v in names.items() if k != "group"}
    unknown = [k for k in display if k not in elements]
    if unknown:
        raise InputFormatError(f"names given for unknown elements {unknown}")
    return FiniteGroup.from_table(elements, data["table"],
                                  label=names.get("group"), display=display)


def dump_group(G, label=None):
    out = {"elements": list(G.elements), "table": G.index_table()}
    names = dict(G.display)
    if label or G.label:
        names["group"] = label or G.label
    if names:
        out["names"] = names
    return out


def load_dfa(source):
    data = _as_data(source, "dfa")
    _check_fields(data, "dfa file",
                  ("alphabet", "states", "initial", "accepting", "transitions"))
    states = data["states"]
    if len(set(states)) != len(states):
        raise InputFormatError("duplicate state names")
    number = {s: i for i, s in enumerate(states)}
    alphabet = tuple(data["alphabet"])
    if data["initial"] not in number:
        raise InputFormatError(f"initial state {data['initial']!r} is not a state")
    accepting = set()
    for s in data["accepting"]:
        if s not in number:
            raise InputFormatError(f"accepting state {s!r} is not a state")
        accepting.add(number[s])
    letter = {ch: a for a, ch in enumerate(alphabet)}
    delta = [[None] * len(alphabet) for _ in states]
    for entry in data["transitions"]:
        if not (isinstance(entry, list) and len(entry) == 3):
            raise InputFormatError(f"transition {entry!r} must be [state, symbol, state]")
        src, sym, dst = entry
        if src not in number or dst not in number:
            raise InputFormatError(f"transition {entry!r} uses an unknown state")
        if sym not in letter:
            raise InputFormatError(f"transition {entry!r} uses a symbol outside the alphabet")
        if delta[number[src]][letter[sym]] is not None:
            raise InputFormatError(f"duplicate transition for ({src!r}, {sym!r})")
        delta[number[src]][letter[sym]] = number[dst]
    holes = [(states[s], alphabet[a])
             for s in range(len(states)) for a in range(len(alphabet))
             if delta[s][a] is None]
    if holes:
        raise InputFormatError(f"transition function is not total; missing {holes[:5]}",
                               details=[str(h) for h in holes])
    return Dfa(alphabet, len(states), number[data["initial"]], accepting, delta)


def dump_dfa(d):
    names = [f"q{i}" for i in range(d.n)]
    return {
        "alphabet": list(d.alphabet),
        "states": names,
        "initial": names[d.initial],
        "accepting": sorted(names[s] for s in d.accepting),
        "transitions": [[names[s], d.alphabet[a], names[d.delta[s][a]]]
                        for s in range(d.n) for a in range(len(d.alphabet))],
    }


def load_filter_selection(L, source):
    """Selection of congruence indices per object, resolved against Xi.

    The indices refer to the canonical order of the serialized classifier
    report for the same site.
    """
    data = _as_data(source, "filter")
    problems = []
    selection = {}
    for c, idxs in data.items():
        if c not in L.site._obj_index:
            problems.append(f"unknown object {c!r}")
            continue
        xi_c = L.elements(c)
        chosen = set()
        for i in idxs:
            if not isinstance(i, int) or not 0 <= i < len(xi_c):
                problems.append(f"index {i!r} out of range at {c!r}")
            else:
                chosen.add(xi_c[i])
        selection[c] = chosen
    if problems:
        raise InputFormatError("malformed filter file: " + "; ".join(problems),
                               details=problems)
    return selection
