"""Write DOT files for the example automata and the boolean/product witnesses.

    python scripts/reproduce_figures.py out/
"""
import pathlib
import sys

from sclab.automata import Alphabet, complete
from sclab.figures import ends_with_b, ends_with_c
from sclab.ops import BoolOp, direct_product
from sclab.serialize import to_dot
from sclab.witnesses import universal_witness, witness


def main(outdir="figures", m=3, n=3):
    out = pathlib.Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    abc = Alphabet.of("abc")
    dfas = {
        "ends_b": (ends_with_b(), None),
        "ends_c": (ends_with_c(), None),
        "ends_b_full": (complete(ends_with_b(), abc), None),
        "ends_c_full": (complete(ends_with_c(), abc), None),
        "universal_5": (universal_witness(5), None),
        "union_left_abc": (witness(m, "a,b,-,c"), None),
        "union_right_abd": (witness(n, "b,a,-,d"), None),
    }
    prod = direct_product(witness(m, "a,b,-,c"), witness(n, "b,a,-,d"), BoolOp.UNION)
    dfas["union_product"] = (prod.dfa, prod.labels)
    for name, (d, labels) in dfas.items():
        path = out / f"{name}.dot"
        path.write_text(to_dot(d, labels, name=name))
        print(path)


if __name__ == "__main__":
    main(*sys.argv[1:2])
