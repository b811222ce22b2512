"""
The shipped results table
=========================

Known values are stored as JSON lines.  Unknown squares are kept as
brackets, from the lower bound up to the best construction available.
"""

from wcages.bounds import n0
from wcages.results import RStatus, load_seed

seed = load_seed()
print(len(seed), "records")

# reproduce the girth-9 rows with the excess markers (* for 2, ^ for 4)
for a in (1, 2):
    cells = []
    for b in (1, 2, 3):
        r = seed.get(a, b, 9)
        if r.status is RStatus.EXACT:
            e = int(r.lower) - n0(a, b, 9)
            cells.append(f"{int(r.lower)}{ {2: '*', 4: '^'}.get(e, '') }")
        elif r.status is RStatus.NONEXISTENT:
            cells.append("inf")
        else:
            cells.append(f"[{r.lower},{r.upper}]")
    print(f"a={a}:", "  ".join(cells))

# the narrowest open brackets
brackets = sorted((r for r in seed if r.status is RStatus.BRACKETED), key=lambda r: r.upper - r.lower)
for r in brackets[:5]:
    print(f"n({r.a},{r.b},{r.g}) in [{r.lower}, {r.upper}]")
