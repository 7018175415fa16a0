"""Compute the Alexander polynomial of a few spiral knots with each engine
and compare against the closed forms for torus knots.

    python3 demos/alexander_three_ways.py
"""

from spiralknots import alexander_all, genus, knot_determinant, make_params, torus_alexander
from spiralknots.seifert import seifert_matrix

EXAMPLES = [(2, 3, "+"), (3, 2, "+-"), (3, 4, "++"), (4, 3, "+-+"), (5, 2, "+--+")]


def main():
    for p, q, eps in EXAMPLES:
        params = make_params(p, q, eps)
        results = alexander_all(params)
        polys = {str(r) for r in results.values()}
        status = "agree" if len(polys) == 1 else "DISAGREE"
        delta = results["recursive"]
        print(f"{params}: {delta}   [{status} across {', '.join(results)}]")
        print(f"    genus {genus(params)}, determinant {knot_determinant(params, delta)}, "
              f"Seifert matrix {seifert_matrix(params).dimension}x{seifert_matrix(params).dimension}")
        if len(set(params.epsilon)) == 1:
            print(f"    torus closed form: {torus_alexander(p, q)}")


if __name__ == "__main__":
    main()
