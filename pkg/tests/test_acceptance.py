"""Acceptance suite: one test per criterion, exact equality throughout.

Each test prints a PASS/FAIL line for its criterion.  Two printed
reference values are refuted by the exact computations; those two checks
are kept faithful in their own clearly named tests below and are
EXPECTED TO FAIL (see the repository's decision log for the analysis):

  * test_c3_printed_gf_of_family_viii -- the printed cubic generating
    function diverges from the brute-force expansion at index 6.
  * test_c5_doubling_functional_equation -- the doubling identity for
    the trinomial odd-count series fails at every odd index.

Everything else passes.
"""

from coeffcount import acceptance


def _run(key: str, clauses):
    failed = [(c, d) for c, ok, d in clauses if not ok]
    status = "FAIL" if failed else "PASS"
    descs = {k: d for k, d, _ in acceptance.CRITERIA}
    desc = descs.get(key.split("(")[0], "")
    print(f"ACCEPTANCE {key} {status}: {desc} "
          f"({len(clauses) - len(failed)}/{len(clauses)} clauses)")
    assert not failed, failed


def test_c1_automaton_vs_oracle():
    _run("C1", acceptance.check_c1())


def test_c2_binomial_repunit_powers():
    _run("C2", acceptance.check_c2())


def test_c3_repunit_generating_functions():
    clauses = [c for c in acceptance.check_c3()
               if ("C3", c[0]) not in acceptance.EXPECTED_FAILURES]
    _run("C3", clauses)


def test_c3_printed_gf_of_family_viii():
    """Faithful check of the printed cubic form; refuted at index 6.

    The fitted (and oracle-confirmed) counts are 1, 4, 16, 60, 216, 768,
    2728, ... with minimal denominator of degree 4; the printed cubic
    fits only the first six terms.
    """
    clauses = [c for c in acceptance.check_c3()
               if c[0] == "fitted repunit GF of viii = printed form"]
    _run("C3(viii)", clauses)


def test_c4_qpow_profiles():
    _run("C4", acceptance.check_c4())


def test_c5_digit_closed_forms():
    clauses = [c for c in acceptance.check_c5()
               if ("C5", c[0]) not in acceptance.EXPECTED_FAILURES]
    _run("C5", clauses)


def test_c5_doubling_functional_equation():
    """Faithful check of L(z) = (1+2z) L(z^2) for the trinomial series.

    Refuted at order 1 already: the count for exponent 1 is 3, not
    2 * count(0) = 2; appending a low 1-bit multiplies the run product
    by a factor that depends on the run it extends.
    """
    clauses = [c for c in acceptance.check_c5()
               if c[0].startswith("trinomial series satisfies")]
    _run("C5(doubling)", clauses)


def test_c6_chain_products():
    _run("C6", acceptance.check_c6())


def test_c7_lattice_counts():
    _run("C7", acceptance.check_c7())


def test_c8_traveling_products():
    _run("C8", acceptance.check_c8())


def test_c9_automaton_invariants():
    _run("C9", acceptance.check_c9())
