"""Why 5_2 (Alexander polynomial 2t^2 - 3t + 2) is not a spiral knot, and
what the checker says about genuine spiral polynomials.

    python3 demos/obstruction.py
"""

from spiralknots import LaurentPoly, alexander, make_params, obstruct_spiral


def show(label, poly, **kw):
    r = obstruct_spiral(poly, **kw)
    cands = ", ".join(f"(p={c.p}, q={c.q}, gamma={c.gamma})" for c in r.candidates) or "none"
    print(f"{label}: {r.verdict}  violated={r.violated or '-'}  candidates: {cands}")


def main():
    five_two = LaurentPoly([2, -3, 2])
    show("5_2", five_two, q_hint=2)
    show("5_2 ignoring the monic rule", five_two, q_hint=2, rules=("second_coefficient", "determinant"))
    for p, q, eps in [(3, 2, "+-"), (4, 3, "+-+"), (7, 2, "+-+-+-")]:
        params = make_params(p, q, eps)
        show(str(params), alexander(params).canonical, q_hint=q)


if __name__ == "__main__":
    main()
