"""Tour of the basic objects: finite topologies, ideals, and the local function.

Run:  python3 demos/01_spaces_and_operators.py
"""

from idealtop import (Ideal, IdealSpace, check_local_function_laws, closure,
                      format_mask, interior, local_function, make_topology,
                      separation_profile, sierpinski, star_closure)

# The two-point space with exactly one nontrivial open set {1}.
top = sierpinski()
print("Sierpinski topology, minimal neighborhoods:", top)
print("opens:", [format_mask(o) for o in top.opens()])
print("closure of {1}:", format_mask(closure(top, 0b10)))
print("interior of {0}:", format_mask(interior(top, 0b01)))
print("separation:", separation_profile(top))
print()

# Make the point 1 "small" and watch the local function shrink closures.
space = IdealSpace(top, Ideal(2, 0b10))
print("ideal carrier {1}:", space.ideal)
for a in range(4):
    print(f"  local_function({format_mask(a)}) = "
          f"{format_mask(local_function(space, a))}   "
          f"star closure = {format_mask(star_closure(space, a))}")
print()

# The five algebraic laws hold on every space; here is the report for one.
print("law report for the space above:")
for law in check_local_function_laws(space):
    print(f"  {law.name:22s} {'ok' if law.holds else f'FAILS at {law.witness}'}")
print()

# Topologies can be given by their full open family too.
t = make_topology(3, [0b000, 0b010, 0b111])
print("three-point example from an explicit family:", t)
print("opens:", [format_mask(o) for o in t.opens()])
