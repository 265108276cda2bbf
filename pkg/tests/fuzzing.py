"""Mutations of valid documents for exit-code fuzzing."""

import json
import random

_JUNK = [None, True, 1.5, -1, "x", "1/0", [], {}, [1, [2]], {"ref": 3}, 10 ** 30]


def _paths(obj, prefix=()):
    yield prefix
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _paths(v, prefix + (k,))
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            yield from _paths(v, prefix + (i,))


def _parent(obj, path):
    for k in path[:-1]:
        obj = obj[k]
    return obj


def mutate(text: str, rng: random.Random) -> bytes:
    """One random corruption of a JSON document: structural, lexical or byte level."""
    mode = rng.randrange(7)
    if mode == 0:
        return text[: rng.randrange(len(text))].encode()
    if mode == 1:
        pos = rng.randrange(len(text))
        return (text[:pos] + rng.choice(["{", "]", ",", "\x00", "NaN", "'"]) + text[pos:]).encode()
    if mode == 2:
        raw = bytearray(text.encode())
        raw[rng.randrange(len(raw))] = rng.choice([0xff, 0xc3, 0x80])
        return bytes(raw)
    obj = json.loads(text)
    paths = [p for p in _paths(obj) if p]
    path = rng.choice(paths)
    parent = _parent(obj, path)
    if mode == 3 and isinstance(parent, dict):
        del parent[path[-1]]
    elif mode == 4 and isinstance(parent, dict):
        parent["unexpected_" + str(rng.randrange(100))] = 0
    elif mode == 5:
        obj["version"] = rng.choice(["2", 1, "", None])
    else:
        parent[path[-1]] = rng.choice(_JUNK)
    return json.dumps(obj).encode()


COMMANDS = [["check"], ["check", "--json"], ["mc"], ["oracle"], ["cohomology", "--max-degree", "1"],
            ["convert", "--to", "quadruple"], ["convert", "--to", "decategorified"]]


def run_fuzz_case(path, seed: int, command) -> tuple[bool, int]:
    """(mutated input parses, CLI exit code) for one mutation of ``path``."""
    import contextlib
    import io
    import tempfile
    from pathlib import Path

    from triplesys import formats as F
    from triplesys.cli import main
    from triplesys.errors import ParseError, ValidationError

    data = mutate(Path(path).read_text(encoding="utf-8"), random.Random(seed))
    with tempfile.TemporaryDirectory() as tmp:
        bad = Path(tmp) / "fuzz.json"
        bad.write_bytes(data)
        try:
            F.parse(data, tmp)
            valid = True
        except (ParseError, ValidationError):
            valid = False
        sink = io.StringIO()
        with contextlib.redirect_stdout(sink), contextlib.redirect_stderr(sink):
            code = main([command[0], str(bad)] + list(command[1:]))
    return valid, code
