"""Weight degenerations: pick a compatible weight, homogenize, and test
whether the family over the t-line is flat.

    python demos/degeneration_flatness.py
"""
from pathlib import Path

from gobs import compatible_weight, degeneration_check, run_sba
from gobs.degen import homogenize_tuple, weight_support
from gobs.obstruct import format_betti
from gobs.textio import format_module_monomial, format_polynomial, parse_system

here = Path(__file__).resolve().parent.parent
system = parse_system((here / "systems" / "quadrics_lex.txt").read_text())
R, F = system.ring, system.polys

A = weight_support(F)
w = compatible_weight(A, R.order, R.nvars)
print(f"weight {w.weights} certified on {len(A)} monomials")
for h in homogenize_tuple(F, w).elements:
    print("   ", format_polynomial(h))

show = lambda gens: ", ".join(format_module_monomial(s, R) for s in gens)
for label, T in (("input", F), ("completed", run_sba(F).final)):
    r = degeneration_check(T)
    print(f"{label}: flat={r.flat}")
    print(f"    LImS = <{show(r.lims)}>")
    print(f"    M <- {format_betti(r.m_ranks)}    N <- {format_betti(r.n_ranks)}")
