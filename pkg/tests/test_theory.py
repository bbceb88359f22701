import pytest

from biforge.errors import LanguageError, NotAnAbstraction
from biforge.presburger import TruthValue, decide_bt6
from biforge.recognizers import LangLevel
from biforge.theory import (
    AXIOMS, BiformTheory, DecideL2, Morphism, Obligation, SchemaKind,
    builtin_morphisms, check_axioms, check_definite_description,
    check_morphism, induction_instance, morphism, parse_theory_graph,
    registry, render_theory_graph, theory, translate,
)
from biforge.syntax import (
    Abs, And, Eq, Forall, Implies, Plus, Succ, TT, Times, Var, Zero,
    is_closed,
)

x = Var("x")


def test_induction_instance_shape():
    pred = Abs("x", Eq(Plus(x, Zero()), x))
    instance = induction_instance(SchemaKind.INDUCTION_L2, pred)
    base = Eq(Plus(Zero(), Zero()), Zero())
    step = Forall("x", Implies(Eq(Plus(x, Zero()), x),
                               Eq(Plus(Succ(x), Zero()), Succ(x))))
    conclusion = Forall("x", Eq(Plus(x, Zero()), x))
    assert instance == Implies(And(base, step), conclusion)
    assert is_closed(instance)
    assert decide_bt6(instance) is TruthValue.TRUE


def test_induction_instance_gates():
    with pytest.raises(NotAnAbstraction):
        induction_instance(SchemaKind.INDUCTION_L2, TT())
    with pytest.raises(LanguageError):
        induction_instance(
            SchemaKind.INDUCTION_L2, Abs("x", Eq(Times(x, Zero()), Zero()))
        )


def test_registry_contents():
    theories = {t.name: t for t in registry()}
    assert len(theories) == 8
    edges = {(p, t.name) for t in theories.values() for p in t.extends}
    assert edges == {
        ("BT1", "BT2"), ("BT2", "BT3"), ("BT3", "BT4"), ("BT1", "BT5"),
        ("BT2", "BT6"), ("BT3", "BT7"), ("BT5", "BT6"), ("BT6", "BT7"),
        ("BT1", "BT8"),
    }
    bt6 = theories["BT6"]
    assert [n for n, _ in bt6.axioms] == [
        "succ-nonzero", "succ-injective", "plus-zero", "plus-succ",
    ]
    assert bt6.schemas == (SchemaKind.INDUCTION_L2,)
    assert [n for n, _ in theories["BT4"].axioms][-1] == "zero-or-succ"
    assert theories["BT5"].schemas == (SchemaKind.INDUCTION_L1,)
    assert theories["BT7"].schemas == (SchemaKind.INDUCTION_L3,)
    assert theories["BT8"].level is None
    assert {tr.name for tr in theories["BT8"].transformers} == {"+-pred", "*-pred"}


def test_registry_transformer_placement():
    theories = {t.name: t for t in registry()}
    for name in ("BT2", "BT3", "BT4", "BT6", "BT7"):
        assert {"bplus", "bplus-rewrite"} <= {tr.name for tr in theories[name].transformers}
    for name in ("BT3", "BT4", "BT7"):
        assert "btimes" in {tr.name for tr in theories[name].transformers}
    assert "decide-bt5" in {tr.name for tr in theories["BT5"].transformers}
    assert "decide-bt6" in {tr.name for tr in theories["BT6"].transformers}


def test_level_gating_asserted_at_construction():
    with pytest.raises(ValueError):
        BiformTheory(
            "bad", LangLevel.L2, (), (("times", AXIOMS["times-zero"]),)
        )
    with pytest.raises(ValueError):
        BiformTheory(
            "open-axiom", LangLevel.L2, (), (("open", Eq(x, Zero())),)
        )
    with pytest.raises(ValueError):
        BiformTheory(
            "bad-schema", LangLevel.L1, (),
            (("a1", AXIOMS["succ-nonzero"]),), (SchemaKind.INDUCTION_L2,),
        )


def test_check_axioms_bt2():
    report = check_axioms(theory("BT2"))
    assert report.ok
    assert all(e.method == "decide-bt6" for e in report.entries)


def test_check_axioms_bt3_uses_oracle_for_products():
    report = check_axioms(theory("BT3"), samples=60, bound=16)
    by_name = {e.subject: e for e in report.entries}
    assert by_name["times-zero"].method.startswith("bounded-oracle")
    assert by_name["plus-zero"].method == "decide-bt6"
    assert report.ok


def test_check_axioms_flags_corrupted_axiom():
    bad = BiformTheory(
        "corrupted", LangLevel.L1, (),
        (("broken", Eq(Zero(), Succ(Zero()))),),
    )
    report = check_axioms(bad)
    assert not report.ok
    assert report.entries[0].subject == "broken"


def test_check_morphism_bt4_to_bt7():
    report = check_morphism(morphism("BT4-to-BT7"))
    assert report.ok
    assert report.entries[0].subject == "zero-or-succ"
    assert report.entries[0].method == "decide-l2"


def test_identity_morphism_discharges_trivially():
    bt1 = theory("BT1")
    m = Morphism(
        name="BT1-to-BT1",
        source="BT1",
        target="BT1",
        symbol_map=(("0", "0"), ("S", "S")),
        obligations=tuple(
            Obligation(n, f, DecideL2()) for n, f in bt1.axioms
        ),
    )
    report = check_morphism(m)
    assert report.ok


def test_check_morphism_bt7_to_bt8():
    report = check_morphism(morphism("BT7-to-BT8"))
    assert report.ok
    methods = {e.subject: e.method for e in report.entries}
    assert methods["plus-zero"] == "decide-l2"
    assert methods["times-succ"] == "model-check[1000x32]"
    assert any(s.startswith("induction-l3") for s in methods)


def test_check_morphism_reports_false_obligation():
    m = Morphism(
        name="bogus",
        source="BT1",
        target="BT1",
        symbol_map=(("0", "0"), ("S", "S")),
        obligations=(
            Obligation("false-claim", Forall("x", Eq(Succ(x), x)), DecideL2()),
        ),
    )
    report = check_morphism(m)
    assert not report.ok


def test_translate_identity_and_arity():
    f = AXIOMS["plus-succ"]
    assert translate(f, (("0", "0"), ("S", "S"), ("+", "+"), ("*", "*"))) == f
    with pytest.raises(LanguageError):
        translate(f, (("+", "S"),))


def test_check_definite_description():
    report = check_definite_description(24)
    assert report.ok
    subjects = [e.subject for e in report.entries]
    assert "plus base clause" in subjects
    assert "times step clause" in subjects


def test_definite_description_rejects_wrong_function():
    report = check_definite_description(16, plus_candidate=lambda a, b: b)
    assert not report.ok
    failing = {e.subject for e in report.entries if not e.passed}
    assert "plus uniqueness" in failing


def test_theory_graph_round_trip():
    theories = [t for t in registry() if t.name in ("BT1", "BT4", "BT6")]
    morphisms = builtin_morphisms()
    text = render_theory_graph(theories, morphisms)
    parsed_theories, parsed_morphisms = parse_theory_graph(text)
    for t in theories:
        p = parsed_theories[t.name]
        assert p.level == t.level
        assert p.extends == t.extends
        assert p.axioms == t.axioms
        assert p.schemas == t.schemas
    for m in morphisms:
        p = parsed_morphisms[m.name]
        assert p.source == m.source and p.target == m.target
        assert p.symbol_map == m.symbol_map
        assert p.obligations == m.obligations
        assert p.schema_obligations == m.schema_obligations
