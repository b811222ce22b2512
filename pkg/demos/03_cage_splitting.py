"""
Splitting classical cages
=========================

Colouring a factor F of an (r,g')-cage light and the rest heavy (or the
other way round) gives a wgraph whose weighted girth lies between g' and
2g'.  A few of these land exactly on the table values.
"""

from wcages.bounds import n0
from wcages.catalog import default_catalog
from wcages.constructions import find_factor, hamiltonian_cycle, split_cage
from wcages.wgraph import HEAVY

cat = default_catalog()


def cycle_edges(cyc):
    return {tuple(sorted((cyc[i], cyc[(i + 1) % len(cyc)]))) for i in range(len(cyc))}


def show(rec, res):
    excess = res.graph.n - n0(res.a, res.b, int(res.girth))
    print(f"{rec.name:18s} -> ({res.a},{res.b},{int(res.girth)})-wgraph on {res.graph.n} vertices, excess {excess}")


# perfect matchings
for r, g, target in ((3, 5, 8), (3, 6, 9), (3, 8, 12)):
    rec = cat.get_cage(r, g)
    F = find_factor(rec.graph, 1, split_girth=target)
    show(rec, split_cage(rec, F))

# Hamiltonian cycles
for r, g, target in ((3, 6, 7), (3, 7, 9), (3, 8, 9)):
    rec = cat.get_cage(r, g)
    cyc = hamiltonian_cycle(rec.graph, split_girth=target)
    show(rec, split_cage(rec, cycle_edges(cyc)))

# Hoffman-Singleton with a heavy 2-factor of girth at least 5
rec = cat.get_cage(7, 5)
F = find_factor(rec.graph, 2, 5, split_girth=6, factor_weight=HEAVY)
show(rec, split_cage(rec, F, factor_weight=HEAVY))

# Petersen has no Hamiltonian cycle, so the light 2-factor route is closed there
print("Petersen Hamiltonian:", hamiltonian_cycle(cat.get_cage(3, 5).graph) is not None)
