"""Two pairs of spiral knots with equal Alexander polynomials.  The Jones
polynomial separates the first pair but not the second.

    python3 demos/collisions.py          # the p=9 pair only (fast)
    python3 demos/collisions.py --all    # also the p=11 pair (~20 s)
"""

import sys

from spiralknots import SpiralParams, alexander, jones_polynomial

PAIRS = {
    9: ((1, -1, 1, 1, -1, -1, 1, -1), (1, -1, -1, 1, -1, 1, 1, -1)),
    11: ((1, 1, 1, -1, -1, -1, 1, 1, -1, 1), (1, 1, -1, 1, 1, 1, -1, -1, -1, 1)),
}


def compare(p, eps_a, eps_b, q=2):
    a, b = SpiralParams(p, q, eps_a), SpiralParams(p, q, eps_b)
    da, db = alexander(a), alexander(b)
    print(f"{a} vs {b}")
    print(f"    Alexander equal: {da == db}   ({da})")
    ja, jb = jones_polynomial(a), jones_polynomial(b)
    print(f"    Jones equal:     {ja == jb}")
    if ja != jb:
        print(f"      {ja}\n      {jb}")


def main(argv):
    compare(9, *PAIRS[9])
    for q in (4, 5, 7):
        a, b = (SpiralParams(9, q, e) for e in PAIRS[9])
        print(f"    q={q}: Alexander equal {alexander(a) == alexander(b)}")
    if "--all" in argv:
        compare(11, *PAIRS[11])


if __name__ == "__main__":
    main(sys.argv[1:])
