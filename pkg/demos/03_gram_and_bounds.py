"""Gram matrices of Frobenius iterates and the point-count bounds they imply.

The inner products between Frobenius iterates of a curve class assemble
into exact integer Gram matrices.  Positive semidefiniteness of those
matrices is equivalent to the classical point-count bounds, and the script
shows both routes producing identical integers on a curve, a double cover,
and a fiber-product diagram.
"""

from weilgram.bounds import (
    check_diagram,
    check_relative,
    check_weil,
    full_report,
    report_to_csv,
    weil_interval,
)
from weilgram.curves import count_series, make_biquadratic, make_hyperelliptic
from weilgram.finite_field import construct_field
from weilgram.gram import (
    gram_absolute,
    gram_diagram,
    gram_relative,
    int_det,
    psd_check,
    schwarz_margin,
)

F3 = construct_field(3, 1)
E = make_hyperelliptic(F3, (0, 1, 0, 1))
counts = count_series(E, 3).counts

print(f"== absolute Gram of {E.label} at order 2 ==")
M = gram_absolute(3, E.genus, counts, 2)
for row in M.entries:
    print(f"  {list(row)}")
print(f"psd: {psd_check(M).psd}, determinant: {int_det(M.entries)}")
print("the zero determinant certifies N_2 = 16 sits on the Weil boundary:")
print(f"  weil interval for j=2: {weil_interval(3, 1, 2)}, N_2 = {counts[1]}")

print()
print("== one bound, two derivations ==")
weil = check_weil(3, 1, 1, counts[0])
print(f"squared Weil bound at j=1: lhs {weil.lhs} <= rhs {weil.rhs}, "
      f"margin {weil.margin}")
rel = gram_relative(3, 1, 0, counts, [4, 10, 28], 2)
print(f"Schwarz margin from the relative Gram: {schwarz_margin(rel, 0, 1)}")
print(f"relative bound record:                 "
      f"{check_relative(3, 1, 0, counts[0], 4).margin}")

print()
print("== fiber-product diagram over F_3 ==")
D = make_biquadratic(F3, (0, 1, 0, 1), (2, 0, 1))
genera = (D.X.genus, D.Y1.genus, D.Y2.genus, D.Z.genus)
Ns = tuple(count_series(c, 1).counts[0] for c in (D.X, D.Y1, D.Y2, D.Z))
print(f"corner genera (X, Y1, Y2, Z): {genera}")
print(f"corner counts at j=1:         {Ns}")
dia = check_diagram(3, genera, Ns, D)
print(f"diagram bound: lhs {dia.lhs} <= rhs {dia.rhs}, margin {dia.margin}")
G = gram_diagram(3, genera, tuple((n,) for n in Ns), 1)
print(f"diagram Gram at order 1: {[list(r) for r in G.entries]}")
print(f"psd: {psd_check(G).psd}")

print()
print("== full report for the diagram, as CSV ==")
print(report_to_csv(full_report(D, 2)))
