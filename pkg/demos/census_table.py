"""Enumerate every spiral knot with (p-1)(q-1) <= 12 and print the p=5 and
p=7 rows as Markdown tables, plus any Alexander-polynomial collisions.

    python3 demos/census_table.py
"""

from spiralknots import enumerate_census, find_collisions
from spiralknots.census import render_table


def main():
    records = enumerate_census(12, with_bridge=True)
    print(f"{len(records)} knots, all closed-form checks passed\n")
    for p in (5, 7):
        print(render_table([r for r in records if r.params.p == p], "md", max_span=12))
    groups = find_collisions(records)
    print(f"{len(groups)} groups share an Alexander polynomial:")
    for g in groups[:5]:
        print("   ", ", ".join(str(r.params) for r in g.records))


if __name__ == "__main__":
    main()
