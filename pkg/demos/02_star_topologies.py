"""How an ideal refines a topology: the star topology and the psi operator.

Run:  python3 demos/02_star_topologies.py
"""

from idealtop import (Ideal, IdealSpace, enumerate_ideals, format_mask, psi,
                      psi_topology, sierpinski, star_topology)

top = sierpinski()
print("base opens:", [format_mask(o) for o in top.opens()])
print()

# Every ideal on the two points, and the finer topology each one induces.
# The trivial ideal changes nothing; the improper ideal discretizes.
for ideal in enumerate_ideals(2):
    space = IdealSpace(top, ideal)
    star = star_topology(space)
    gen = psi_topology(space)
    print(f"carrier {format_mask(ideal.carrier):6s} "
          f"star opens {[format_mask(o) for o in star.opens()]!s:30s} "
          f"psi-generated opens {[format_mask(o) for o in gen.opens()]}")
print()

# psi is the open dual of the local function: always open in the base
# topology, and a set is star-open exactly when psi covers it.
space = IdealSpace(top, Ideal(2, 0b10))
star = star_topology(space)
for a in range(4):
    p = psi(space, a)
    print(f"psi({format_mask(a)}) = {format_mask(p):6s} "
          f"star-open: {star.is_open(a)}  contained in psi: {not a & ~p}")
