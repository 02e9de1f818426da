"""Checking preservation statements on concrete instances.

Each checker returns named hypothesis and conclusion booleans; conclusions
are evaluated even when a hypothesis fails, so weakened variants can be
explored directly.

Run:  python3 demos/03_theorem_checks.py
"""

from idealtop import (ALL_THEOREM_IDS, FiniteMap, Ideal, IdealSpace,
                      Instance, check, identity_map, sierpinski)

space = IdealSpace(sierpinski(), Ideal(2, 0b10))
identity = Instance(space, space, identity_map(2))

print("identity instance: every checker passes")
for tid in ALL_THEOREM_IDS:
    v = check(tid, identity)
    flags = " ".join(f"{name}={'T' if val else 'F'}" for name, val in v.conclusions)
    print(f"  {tid:10s} vacuous={str(v.vacuous):5s} {flags}")
print()

# A non-continuous map against an improper domain ideal: the transport
# conclusion holds for free even though continuity fails, i.e. the converse
# of the transport statement is hopeless.
x = IdealSpace(sierpinski(), Ideal(2, 0b11))
y = IdealSpace(sierpinski(), Ideal(2, 0b10))
swap = FiniteMap(2, 2, (1, 0))
v = check("TC1", Instance(x, y, swap))
print("swap map, improper domain ideal:")
print("  hypotheses: ", dict(v.hypotheses))
print("  conclusions:", dict(v.conclusions))
print("  vacuous:    ", v.vacuous)
