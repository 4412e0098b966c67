"""Complete three cubics step by step and watch the obstruction module shrink.

    python demos/completion_walkthrough.py
"""
from pathlib import Path

from gobs import gobs, minimal_resolution, run_sba
from gobs.obstruct import format_betti
from gobs.textio import format_module_monomial, format_polynomial, parse_system

here = Path(__file__).resolve().parent.parent
system = parse_system((here / "systems" / "cubics_grlex.txt").read_text())
R = system.ring
mm = lambda s: format_module_monomial(s, R)

result = run_sba(system.polys)

# every step resolves the smallest guessed signature whose S-polynomial
# leaves a nonzero remainder
for step in result.trace.steps:
    F = step.tuple_before
    M = gobs(F)
    betti = minimal_resolution(M).ranks
    print(f"|F| = {len(F)}  obstructions {', '.join(map(mm, M.nonzero_generators))}")
    print(f"    resolution {format_betti(betti)}")
    print(f"    append {format_polynomial(step.appended)}  (signature {mm(step.signature)})")

# once complete, the obstruction module vanishes
print(f"|F| = {len(result.final)}  G_obs is zero: {gobs(result.final).is_zero()}")
print("reduced basis:")
for g in result.reduced:
    print("   ", format_polynomial(g))

print("signatures:", ", ".join(mm(s.signature) for s in result.trace.steps))
