import random
from fractions import Fraction

import pytest

from fpc.certificates import (CertSyntaxError, CorpusError, EmptinessFact, FactLedger, GammaFact,
                              LedgerError, check, derive_gamma, exported_names, load_corpus,
                              order_certificates, parse, record, scale_bound, verify_all,
                              verify_delta_cases)
from fpc.certificates.syntax import Conclude, Cremona, Drop
from fpc.oracle import alpha_bounds, dimension
from fpc.systems import FatPointSystem


def by_name(corpus, name):
    return next(c for c in corpus if c.name == name)


def test_parse_n6(corpus):
    c = by_name(corpus, "vargamma_n6")
    kinds = [type(s) for s in c.steps if type(s).__name__ != "Expect"]
    assert kinds.count(Cremona) == 3 and kinds.count(Drop) == 1 and kinds[-1] is Conclude
    assert c.steps[-1].how == "negative-degree"


@pytest.mark.parametrize("text, fragment", [
    ("", "missing 'cert"),
    ("cert a\ngoal empty deg=1 mults=2\nstep cremona 1 2 3\n", "4 indices"),
    ("cert a\ngoal empty deg=1 mults=2\nstep twist 1\n", "unknown step kind"),
    ("cert a\ngoal empty deg=1+ mults=2\n", "malformed polynomial"),
    ("cert a\ngoal gamma 5 > 5/3\n", "usage"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(CertSyntaxError, match=fragment):
        parse(text)


def test_syntax_error_position():
    with pytest.raises(CertSyntaxError) as exc:
        parse("cert a\ngoal empty deg=1 mults=2\n\nstep cremona 1 2 x 4\n", source="f.cert")
    assert exc.value.line == 4 and exc.value.source == "f.cert"


def test_n12_checks(ledger):
    res = check(load_corpus([p for p in _paths() if p.name == "vargamma_n12.cert"])[0], ledger)
    assert res
    assert [k.format() for k in res.ks] == ["-14m-2", "-28m-4", "-28m-4", "-18m-8", "-18m-8",
                                           "-8m-12", "-8m-12", "-4m-6"]


def _paths():
    from fpc.certificates import corpus_paths
    return corpus_paths()


def test_altered_entry_is_caught(ledger, corpus):
    text = open(by_name(corpus, "vargamma_n12").source).read()
    bad = text.replace("expect deg=84m-7", "expect deg=84m-6")
    res = check(parse(bad), ledger)
    assert not res and "expected" in res.reason and res.step_index >= 0


def test_wrong_k_is_caught():
    c = parse("cert a\ngoal empty deg=4m-1 mults=3m*4 m0=1\nstep cremona 1 2 3 4\n"
              "expect deg=-2 mults=-m-2*4\nstep conclude negative-degree\n")
    res = check(c, FactLedger())
    assert not res and res.step_index == 1


def test_unproven_sign_is_caught():
    c = parse("cert a\ngoal empty deg=5-m mults=1 m0=1\nstep conclude negative-degree\n")
    assert not check(c, FactLedger())


def test_missing_fact():
    c = parse("cert a\ngoal empty deg=1 mults=1\nuse gamma5\nstep conclude excess-multiplicity\n")
    res = check(c, FactLedger())
    assert not res and "unknown fact" in res.reason


def test_derive_gamma(ledger, corpus):
    for name, n, b in [("vargamma_n6", 6, Fraction(12, 7)), ("vargamma_n7", 7, Fraction(28, 15)),
                       ("vargamma_n24", 24, Fraction(107, 39))]:
        g = derive_gamma(check(by_name(corpus, name), ledger))
        assert (g.n, g.bound) == (n, b)


def test_gamma_claim_must_be_exact(ledger):
    base = "cert g\ngoal gamma 320 >= {}\nuse gamma5\nstep scale fact=gamma5 k=2\nstep conclude bound\n"
    assert check(parse(base.format("20/3")), ledger)
    assert not check(parse(base.format("6")), ledger)
    assert not check(parse(base.format("7")), ledger)


def test_scale_bound(ledger):
    f = scale_bound(5, 2, ledger, record=False)
    assert (f.n, f.bound) == (320, Fraction(20, 3))
    assert scale_bound(1, 2, ledger, record=False).bound == 4
    assert scale_bound(5, 0, ledger, record=False).bound == Fraction(5, 3)


def test_delta_cases(ledger):
    rep = verify_delta_cases(ledger, record=False)
    assert rep.ok and len([l for l in rep.lines if l.startswith("n in")]) == 6


def test_ledger_rejects_cycles_and_duplicates():
    led = FactLedger()
    s = FatPointSystem.of(1, [2])
    led.add(EmptinessFact("a", s, "x"))
    with pytest.raises(LedgerError):
        led.add(EmptinessFact("a", s, "x"))
    with pytest.raises(LedgerError):
        led.add(EmptinessFact("b", s, "x", ("b",)))
    with pytest.raises(LedgerError):
        led.add(GammaFact("c", 3, Fraction(1), "x", ("d",)))


def test_corpus_order_rejects_cycles():
    a = parse("cert a\ngoal empty deg=3m-1 mults=m*2\nuse b\nstep conclude excess-multiplicity\n")
    b = parse("cert b\ngoal empty deg=3m-1 mults=m*3\nuse a\nstep conclude excess-multiplicity\n")
    with pytest.raises(CorpusError, match="cyclic"):
        order_certificates([a, b])
    with pytest.raises(CorpusError, match="missing"):
        order_certificates([a])
    with pytest.raises(CorpusError, match="exported by both"):
        order_certificates([a, a])


def test_corpus_verifies(corpus):
    rep = verify_all(corpus)
    assert rep.ok, [str(f) for f in rep.failures()]
    assert "delta512" in rep.ledger


def test_exports(corpus):
    assert exported_names(by_name(corpus, "vargamma_n12")) == ["vargamma_n12", "gamma12"]
    assert exported_names(by_name(corpus, "nicegamma_320")) == ["gamma320"]


def test_record_into_fresh_ledger(corpus):
    led = FactLedger()
    assert record(check(by_name(corpus, "vargamma_n1"), led), led) == ["vargamma_n1", "gamma1"]


def test_glue_soundness_against_oracle():
    """Emptiness of A at k and of B plus (k+1) at t implies emptiness of A and B at t."""
    rng = random.Random(2024)
    done = 0
    while done < 50:
        a = [rng.randint(1, 4) for _ in range(rng.randint(2, 5))]
        b = [rng.randint(1, 4) for _ in range(rng.randint(0, 4))]
        k = alpha_bounds(a, 12).alpha_low - 1
        if k < 0 or k > 10:
            continue
        t = rng.randint(k + 1, k + 4)
        if dimension(b + [k + 1], t) != 0:
            continue
        done += 1
        assert dimension(a + b, t) == 0, (a, b, k, t)
