"""Look inside one obstruction module: its summands, a minimal resolution
and the Hilbert function check.

    python demos/obstruction_resolution.py
"""
from pathlib import Path

from gobs import gobs, hilbert_series, minimal_resolution, minimum_obstruction
from gobs.obstruct import euler_check, format_betti
from gobs.textio import format_module_monomial, format_polynomial, parse_system

here = Path(__file__).resolve().parent.parent
system = parse_system((here / "systems" / "quadrics_lex.txt").read_text())
R, F = system.ring, system.polys

M = gobs(F)
for j, L, K in M.components:
    gens = ", ".join(R.format_monomial(a) for a in L)
    rels = ", ".join(R.format_monomial(a) for a in K) or "0"
    print(f"e_{j + 1}: <{gens}> / <{rels}>")

rep = minimal_resolution(M)
print("resolution:", format_betti(rep.ranks))
print("generator degrees by step:", rep.degrees)
print("d o d = 0:", rep.compose_to_zero(), "  minimal:", rep.minimal)

# alternating sum of the free modules against a direct monomial count
print("Hilbert function up to 8:", hilbert_series(M, 8))
print("Euler identity holds:", euler_check(rep, M, upto=10))

obs = minimum_obstruction(F)
print("smallest obstruction", format_module_monomial(obs.signature, R),
      "with remainder", format_polynomial(obs.remainder.monic()))
