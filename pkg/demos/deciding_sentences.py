"""Deciding arithmetic sentences by quantifier elimination, with the
bounded-enumeration oracle alongside for contrast.

Run with: python3 demos/deciding_sentences.py
"""

from biforge import (
    Bounded, Environment, LangLevel, TruthValue, bounded_oracle,
    decide_bt5, decide_bt6, decide_bt6_with_bound, eval_bool, is_fo,
    parse_construction,
)

SENTENCES = [
    "(forall x (not (= (s x) z)))",
    "(forall x (forall y (imp (= (s x) (s y)) (= x y))))",
    "(forall x (= (+ x z) x))",
    "(forall x (forall y (= (+ x (s y)) (s (+ x y)))))",
    "(forall x (or (= x z) (exists y (= (s y) x))))",
    "(exists y (= (s y) z))",
    "(forall x (exists y (= x (+ y y))))",
    "(forall x (exists y (or (= x (+ y y)) (= x (s (+ y y))))))",
]

print("=== sentences of the 0/successor/+ language ===")
for text in SENTENCES:
    sentence = parse_construction(text)
    verdict, bound = decide_bt6_with_bound(sentence)
    line = f"{verdict.value}  {text}"
    if bound is not None and bound <= 1000:
        oracle = bounded_oracle(sentence, Environment(), bound)
        line += f"   [oracle at bound {bound} agrees: {oracle == (verdict is TruthValue.TRUE)}]"
    print(line)

print()
print("=== the successor-only fragment has its own entry point ===")
a1 = parse_construction("(forall x (not (= (s x) z)))")
print("successor-language decision:", decide_bt5(a1).value)
print("level check for (+ x z):", is_fo(LangLevel.L1, parse_construction("(+ x z)")))

print()
print("=== open formulas are decided relative to an environment ===")
even = parse_construction("(exists y (= x (+ y y)))")
for vx in range(6):
    verdict = decide_bt6(even, Environment({"x": vx}))
    print(f"x = {vx}: x is even -> {verdict.value}")

print()
print("=== the bounded strategy alone is only an approximation ===")
seven_exists = parse_construction("(exists x (= x (s (s (s (s (s (s (s z)))))))))")
for bound in (5, 7, 12):
    print(f"exists x. x = 7 at bound {bound}:",
          eval_bool(seven_exists, Environment(), Bounded(bound)))
print("which is why decisions go through quantifier elimination instead")
