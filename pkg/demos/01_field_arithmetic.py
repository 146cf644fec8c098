"""Tour of the exact finite-field layer.

Builds a prime field and an extension field, exercises scalar arithmetic,
and shows the vectorized tables that the point counters run on.
"""

from weilgram.finite_field import construct_field, enumerate_elements
from weilgram.fppoly import to_string
from weilgram.tables import get_table

F5 = construct_field(5, 1)
F9 = construct_field(3, 2)

print("== scalar arithmetic ==")
print(f"field {F5}: q = {F5.q}, modulus coefficients = {F5.modulus}")
print(f"field {F9}: q = {F9.q}, modulus coefficients = {F9.modulus}")

names = [to_string(e.coefficients, "t") or "0" for e in enumerate_elements(F9)]
print(f"elements of {F9}: {', '.join(names)}")

T9 = get_table(F9)
print()
print("== multiplication table of F_9 (encoded 0..8) ==")
for a in range(F9.q):
    row = [int(T9.mul([a] * F9.q, list(range(F9.q)))[b]) for b in range(F9.q)]
    print(f"  {a}: {row}")

print()
print("== squares ==")
for field, T in ((F5, get_table(F5)), (F9, T9)):
    sq = sorted({int(v) for v in T.mul(list(range(field.q)), list(range(field.q)))})
    counts = [int(T.sqrt_count()[s]) for s in sq]
    print(f"{field}: squares {sq}")
    print(f"{field}: sqrt counts of those squares {counts}")

print()
print("== vectorized polynomial evaluation ==")
# f(x) = x^3 + x over F_5, evaluated at every element at once
values = get_table(F5).eval_poly((0, 1, 0, 1))
print(f"x^3 + x on F_5: {[int(v) for v in values]}")
