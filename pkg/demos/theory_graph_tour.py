"""A walk through the theory graph: the registry, axiom validation,
induction instances, morphism obligations and the definite-description
checks behind the higher-order endpoint.

Run with: python3 demos/theory_graph_tour.py
"""

from biforge import (
    SchemaKind, builtin_morphisms, check_axioms, check_definite_description,
    check_morphism, decide_bt6, induction_instance, parse_construction,
    registry, render_theory_graph, to_sexpr,
)

print("=== the eight built-in theories ===")
for t in registry():
    level = "higher-order" if t.level is None else f"level {t.level.value}"
    axioms = ", ".join(name for name, _ in t.axioms) or "(axioms live upstream)"
    print(f"{t.name} [{level}] extends {list(t.extends) or '-'}")
    print(f"    axioms: {axioms}")
    print(f"    transformers: {', '.join(f'{tr.name}({tr.tag})' for tr in t.transformers)}")

print()
print("=== validating axiom suites in the standard model ===")
for name in ("BT2", "BT3"):
    report = check_axioms(next(t for t in registry() if t.name == name),
                          samples=100, bound=24)
    print(report.render())

print()
print("=== induction instances, gated by the abstraction recognizer ===")
pred = parse_construction("(lambda x (= (+ x (s z)) (s x)))")
instance = induction_instance(SchemaKind.INDUCTION_L2, pred)
print("predicate:", to_sexpr(pred))
print("instance:", to_sexpr(instance))
print("decided:", decide_bt6(instance).value)

print()
print("=== morphism obligations, discharged mechanically ===")
for m in builtin_morphisms():
    print(check_morphism(m).render())

print()
print("=== recursion clauses pinning down + and * (pointwise) ===")
print(check_definite_description(24).render())

print()
print("=== the graph also round-trips through a text description ===")
text = render_theory_graph(registry()[:2], [])
print(text)
