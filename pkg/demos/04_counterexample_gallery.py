"""The point-extension constructions and what they break.

Three recipes extend a seed space by one point and defeat one hypothesis
each; a fourth (the open-variant collapse) demonstrably cannot break its
target on carrier ideals, and the demo explains why.

Run:  python3 demos/04_counterexample_gallery.py
"""

from idealtop import (Ideal, IdealSpace, VARIANT_CONT, VARIANT_OPEN,
                      add_generic_point_instance, add_open_point_instance,
                      check, collapse_point_instance, format_mask,
                      local_function, sierpinski)

seed = IdealSpace(sierpinski(), Ideal(2, 0b10))
print("seed:", seed)
print()

print("1. add an open point (kills surjectivity, breaks psi transport)")
inst = add_open_point_instance(seed)
z = inst.Y.n - 1
print(f"   extended opens: {[format_mask(o) for o in inst.Y.top.opens()]}")
print(f"   the new point is small, so it escapes every local function:")
print(f"   local functions over the extension: "
      f"{[format_mask(local_function(inst.Y, a)) for a in range(8)]}")
v = check("CONTPSI", inst)
print(f"   CONTPSI conclusions: {dict(v.conclusions)}  witness: {v.witness.to_json()}")
print()

print("2. add a generic point (kills surjectivity, breaks star transport)")
inst = add_generic_point_instance(seed)
v = check("OPENBIJ", inst)
print(f"   extended opens: {[format_mask(o) for o in inst.Y.top.opens()]}")
print(f"   OPENBIJ conclusions: {dict(v.conclusions)}  witness: {v.witness.to_json()}")
print()

print("3. collapse a twin onto a small point, continuity-preserving variant")
inst = collapse_point_instance(seed, 1, VARIANT_CONT)
v = check("CONTPSI", inst)
print(f"   domain opens: {[format_mask(o) for o in inst.X.top.opens()]}")
print(f"   CONTPSI hypotheses: {dict(v.hypotheses)}")
print(f"   CONTPSI conclusions: {dict(v.conclusions)}")
print()

print("4. collapse, openness-preserving variant: nothing breaks, provably")
inst = collapse_point_instance(IdealSpace(sierpinski(), Ideal(2, 0b11)), 1,
                               VARIANT_OPEN)
v = check("OPENBIJ", inst)
print(f"   domain opens: {[format_mask(o) for o in inst.X.top.opens()]}")
print(f"   OPENBIJ hypotheses: {dict(v.hypotheses)}")
print(f"   OPENBIJ conclusions: {dict(v.conclusions)}")
print("   any set avoiding both twins is small, its image is small on the")
print("   adjusted codomain ideal, and small images have empty local")
print("   functions; so the image-transfer hypothesis itself protects the")
print("   containment.  (The CLI demo 'collapse-open' exits 1 for this.)")
