"""Binary numerals and their arithmetic transformers, end to end.

Run with: python3 demos/numeral_arithmetic.py
"""

from biforge import (
    Environment, StuckRewrite, binnum, bplus, bplus_rewrite, btimes,
    eval_nat, from_construction, is_bnum, normalize, of_nat, succ_b,
    to_construction, to_nat, to_sexpr,
)

print("=== numerals are digit sequences, least-significant first ===")
six = of_nat(6)
print("6 as digits:", [int(d) for d in six.digits], "->", to_nat(six))
padded = binnum([0, 1, 1, 0, 0])
print("a padded six:", [int(d) for d in padded.digits],
      "normalizes to", [int(d) for d in normalize(padded).digits])

print()
print("=== quotation: numerals as (x + x) + digit terms ===")
term = to_construction(of_nat(6))
print("the term for 6:", to_sexpr(term))
print("it evaluates to", eval_nat(term, Environment()),
      "and the numeral recognizer accepts it:", is_bnum(term))
print("round trip:", to_nat(from_construction(term)))

print()
print("=== the direct transformers and their meaning formulas ===")
a, b = of_nat(13), of_nat(29)
print("13 + 29 =", to_nat(bplus(a, b)))
print("6  * 7  =", to_nat(btimes(of_nat(6), of_nat(7))))
print("successor chain:", [to_nat(succ_b(of_nat(n))) for n in range(8)])
# spot-check the meaning formula on a small grid
assert all(
    to_nat(bplus(of_nat(i), of_nat(j))) == i + j
    for i in range(32) for j in range(32)
)
print("meaning formula holds on the 32x32 grid")

print()
print("=== the rewrite route: numeral addition as conditional rules ===")
for i, j in [(1, 1), (2, 3), (5, 7)]:
    ti, tj = to_construction(of_nat(i)), to_construction(of_nat(j))
    out = bplus_rewrite(ti, tj)
    print(f"{i} + {j} rewrites to {to_sexpr(out)} = {to_nat(from_construction(out))}")

print()
print("The rule set is applied exactly as stated, and it is not complete:")
print("two of its rules share a left-hand side, so the second never fires")
print("and some redexes get stuck.  The engine reports them faithfully.")
stuck = []
for i in range(16):
    for j in range(16):
        try:
            bplus_rewrite(to_construction(of_nat(i)), to_construction(of_nat(j)))
        except StuckRewrite:
            stuck.append((i, j))
print("stuck pairs with values below 16:", stuck)
