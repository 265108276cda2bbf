"""Regenerate the JSON files in corpus/ from the in-code corpus."""

from pathlib import Path

from triplesys import corpus as K
from triplesys import formats as F
from triplesys.algebras import LTS, Algebra, adjoint_rep
from triplesys.exactlin import zeros
from triplesys.twoterm import corpus as TC
from triplesys.twoterm.categorify import categorify
from triplesys.twoterm.classify import skeletal_to_quadruple

OUT = Path(__file__).resolve().parent.parent / "corpus"


def broken_fi_lts() -> Algebra:
    """sl2-LTS with [h,e,f] shifted by h: lts1 and lts2 hold, the fundamental identity fails."""
    a = K.sl2_lts()
    p = zeros(3, 3, 3, 3)
    p[0, 1, 2, 0], p[1, 0, 2, 0], p[1, 2, 0, 0], p[2, 1, 0, 0] = 1, -1, -1, 1
    return Algebra(LTS, a.space, a.structure.with_data(a.data + p))


def documents() -> dict:
    sl2 = K.sl2_lts()
    docs = {
        "sl2_lts": sl2, "sl2_lie": K.sl2(), "zero_lts_2": K.zero_lts(2),
        "random_lts": K.random_lts(0), "broken_nambu": K.broken_nambu(),
        "nambu_not_lts": K.nambu_not_lts(), "broken_fi_lts": broken_fi_lts(),
        "sl2_standard_rep": K.sl2_standard_rep(), "sl2_adjoint_rep": adjoint_rep(sl2),
    }
    for name, s in TC.systems().items():
        docs["system_" + name.replace("/", "_")] = s
    for name, c in TC.crossed_modules().items():
        docs["crossed_" + name] = c
    for name in ("sl2_cocycle", "nonabelian2_cocycle"):
        sk = TC.skeletal_systems()[name]
        docs["quadruple_" + name] = F.Quadruple(*skeletal_to_quadruple(sk))
        docs["two_vector_" + name] = categorify(sk)
    return docs


def main():
    OUT.mkdir(exist_ok=True)
    for name, obj in documents().items():
        F.write(OUT / f"{name}.json", F.document_for(obj))


if __name__ == "__main__":
    main()
