"""JSON game files.

A game file names its vertices; labels are sorted lexicographically and the
``k``-th label becomes bit ``k`` of every vertex mask. Saving always writes
the canonical form, so ``save(load(f))`` reproduces a canonical ``f`` byte
for byte.
"""

from __future__ import annotations

import json
from pathlib import Path

from .arena import Arena, bits, mask_of, validate
from .conditions import (
    COLOURED,
    KINDS,
    KL,
    MCNAUGHTON,
    MULLER,
    RABIN,
    STREETT,
    ColouredMuller,
    KLCondition,
    McNaughton,
    Muller,
    Rabin,
    Streett,
    WinningCondition,
)
from .errors import OwnershipGap, ParseError, UnknownLabel, ValidationError
from .family import SubsetFamily


def _expect(cond, message):
    if not cond:
        raise ParseError(message)


def _label_list(value, what):
    _expect(isinstance(value, list) and all(isinstance(x, str) for x in value), f"{what} must be a list of labels")
    return value


def _resolve(labels, index, what):
    m = 0
    for lab in labels:
        if lab not in index:
            raise UnknownLabel(lab, what)
        m |= 1 << index[lab]
    return m


def _nonempty_family(entries, index, n, what):
    _expect(isinstance(entries, list), f"{what} must be a list of label lists")
    fam = SubsetFamily(n)
    for entry in entries:
        labels = _label_list(entry, f"{what} entry")
        if not labels:
            raise ValidationError(f"{what} contains the empty set")
        fam.insert(_resolve(labels, index, what))
    return fam


def game_from_dict(data) -> tuple[Arena, WinningCondition]:
    """Build and validate an arena and its condition from parsed JSON."""
    _expect(isinstance(data, dict), "game file must hold a JSON object")
    kind = data.get("type")
    _expect(kind in KINDS, f"unknown game type {kind!r}")
    vertices = _label_list(data.get("vertices"), "vertices")
    if not vertices:
        raise ValidationError("arena has no vertices")
    if len(set(vertices)) != len(vertices):
        raise ValidationError("vertex labels are not unique")
    names = sorted(vertices)
    index = {lab: i for i, lab in enumerate(names)}
    n = len(names)

    owner = data.get("owner")
    _expect(isinstance(owner, dict), "owner must map labels to 0 or 1")
    owner0 = owner1 = 0
    for lab, side in owner.items():
        if lab not in index:
            raise UnknownLabel(lab, "owner")
        _expect(side in (0, 1) and not isinstance(side, bool), f"owner of {lab!r} must be 0 or 1")
        if side == 0:
            owner0 |= 1 << index[lab]
        else:
            owner1 |= 1 << index[lab]

    edges = data.get("edges")
    _expect(isinstance(edges, list), "edges must be a list of [from, to] pairs")
    succ = [0] * n
    for e in edges:
        _expect(isinstance(e, list) and len(e) == 2 and all(isinstance(x, str) for x in e), "malformed edge")
        for lab in e:
            if lab not in index:
                raise UnknownLabel(lab, "edges")
        succ[index[e[0]]] |= 1 << index[e[1]]
    for v in range(n):
        if not ((owner0 | owner1) >> v) & 1:
            raise OwnershipGap(names[v])
    arena = Arena(n, owner0, tuple(succ), tuple(names))
    validate(arena, owner1)
    return arena, _condition_from_dict(kind, data, index, n)


def _condition_from_dict(kind, data, index, n) -> WinningCondition:
    if kind == MULLER:
        return Muller(_nonempty_family(data.get("omega"), index, n, "omega"))
    if kind == MCNAUGHTON:
        w = _resolve(_label_list(data.get("W"), "W"), index, "W")
        omega = _nonempty_family(data.get("omega"), index, n, "omega")
        return McNaughton(w, omega)
    if kind == COLOURED:
        colours = data.get("colours")
        _expect(isinstance(colours, dict), "colours must map labels to colour names")
        _expect(all(isinstance(c, str) for c in colours.values()), "colour names must be strings")
        for lab in colours:
            if lab not in index:
                raise UnknownLabel(lab, "colours")
        missing = [lab for lab in index if lab not in colours]
        if missing:
            raise ValidationError(f"vertex {missing[0]!r} has no colour")
        entries = data.get("omega")
        _expect(isinstance(entries, list), "omega must be a list of colour lists")
        used = set(colours.values())
        for entry in entries:
            used.update(_label_list(entry, "omega entry"))
        cnames = sorted(used)
        cindex = {c: i for i, c in enumerate(cnames)}
        fam = SubsetFamily(len(cnames))
        for entry in entries:
            if not entry:
                raise ValidationError("omega contains the empty set")
            fam.insert(mask_of(cindex[c] for c in entry))
        colour = tuple(cindex[colours[lab]] for lab in sorted(index, key=index.get))
        return ColouredMuller(colour, len(cnames), fam, tuple(cnames))
    pairs = data.get("pairs")
    _expect(isinstance(pairs, list), "pairs must be a list")
    if kind == KL:
        out = []
        for p in pairs:
            _expect(isinstance(p, dict) and isinstance(p.get("u"), str), "KL pair needs a label 'u'")
            if p["u"] not in index:
                raise UnknownLabel(p["u"], "pairs")
            out.append((index[p["u"]], _resolve(_label_list(p.get("S"), "S"), index, "pairs")))
        return KLCondition(tuple(out))
    out = []
    for p in pairs:
        _expect(isinstance(p, dict), "pair must be an object with U and V")
        u = _resolve(_label_list(p.get("U"), "U"), index, "pairs")
        v = _resolve(_label_list(p.get("V"), "V"), index, "pairs")
        out.append((u, v))
    return Rabin(tuple(out)) if kind == RABIN else Streett(tuple(out))


def _labels(arena, mask):
    return [arena.names[v] for v in bits(mask)]


def game_to_dict(arena: Arena, cond: WinningCondition) -> dict:
    """Canonical JSON-ready form of a game."""
    data = {
        "type": cond.kind,
        "vertices": list(arena.names),
        "owner": {arena.names[v]: 0 if (arena.owner0 >> v) & 1 else 1 for v in range(arena.n)},
        "edges": [[arena.names[a], arena.names[b]] for a, b in arena.edges()],
    }
    if cond.kind == MULLER:
        data["omega"] = [_labels(arena, m) for m in cond.omega]
    elif cond.kind == MCNAUGHTON:
        data["W"] = _labels(arena, cond.W)
        data["omega"] = [_labels(arena, m) for m in cond.omega]
    elif cond.kind == COLOURED:
        data["colours"] = {arena.names[v]: cond.colour_names[cond.colour[v]] for v in range(arena.n)}
        data["omega"] = [[cond.colour_names[c] for c in bits(m)] for m in cond.omega]
    elif cond.kind == KL:
        data["pairs"] = [{"u": arena.names[u], "S": _labels(arena, s)} for u, s in cond.pairs]
    else:
        data["pairs"] = [{"U": _labels(arena, u), "V": _labels(arena, v)} for u, v in cond.pairs]
    return data


def _dump_value(value, indent):
    if isinstance(value, list) and value and isinstance(value[0], (list, dict)):
        pad = " " * (indent + 2)
        inner = ",\n".join(pad + json.dumps(x, ensure_ascii=False) for x in value)
        return "[\n" + inner + "\n" + " " * indent + "]"
    return json.dumps(value, ensure_ascii=False)


def dumps(data: dict) -> str:
    lines = [f'  {json.dumps(k)}: {_dump_value(v, 2)}' for k, v in data.items()]
    return "{\n" + ",\n".join(lines) + "\n}\n"


def loads(text: str) -> tuple[Arena, WinningCondition]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return game_from_dict(data)


def load_game(path) -> tuple[Arena, WinningCondition]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path} is not UTF-8") from exc
    return loads(text)


def save_game(path, arena: Arena, cond: WinningCondition) -> None:
    Path(path).write_text(dumps(game_to_dict(arena, cond)), encoding="utf-8")


def canonicalize(text: str) -> str:
    return dumps(game_to_dict(*loads(text)))
