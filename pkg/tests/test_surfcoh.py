from __future__ import annotations

from fractions import Fraction

import pytest

from raynaudsurf import (
    Cert,
    PTerm,
    TwistedSym,
    chi,
    chi_X,
    decompose,
    decompose_twist,
    h0_closed_form,
    h1_nonvanishing_window,
    h1neg_closed_form,
    h2_closed_form,
    h_surface,
    nonneg_cutoff,
    reduce_term,
    result1_range,
    surface_cert,
    theorem_predicates,
    zab_nonvanishing,
)

from conftest import PS1, PS2, PS3, PS4


# ---------------------------------------------------------------- decomposition


def _oracle_decompose(params, n):
    # Independent enumeration: push each graded piece M^i (exact fractions,
    # then certified-integral) through the three twist branches.
    ell, p = params.ell, params.p
    drop = [Fraction(i * (p + 1), ell) for i in range(ell)]
    assert all(d.denominator == 1 for d in drop)
    drop = [int(d) for d in drop]
    if n >= 0 and n % ell == 0:
        k = n // ell
        return [PTerm(k - drop[i], i * p + n) for i in range(ell)]
    if n > 0:
        k, r = n // ell, n % ell
        return [PTerm(r + 1 + k - ell, n)] + [
            PTerm(k + 1 - drop[i], i * p + n) for i in range(1, ell)
        ]
    return [PTerm(n, n)] + [PTerm(-drop[i], i * p + n) for i in range(1, ell)]


def test_decompose_examples():
    assert list(decompose(PS1, -1)) == [PTerm(-1, -1), PTerm(-1, 1), PTerm(-2, 3)]
    assert list(decompose(PS1, 0)) == [PTerm(0, 0), PTerm(-1, 2), PTerm(-2, 4)]
    assert list(decompose(PS3, 1)) == [
        PTerm(-2, 1),
        PTerm(0, 4),
        PTerm(-1, 7),
        PTerm(-2, 10),
    ]


def test_decompose_matches_oracle(sweep_small):
    for f in sweep_small[:25]:
        for n in range(-12, 13):
            assert list(decompose(f, n)) == _oracle_decompose(f, n)
            assert len(decompose(f, n)) == f.ell


def test_decompose_twist_generalizes():
    assert decompose_twist(PS1, -1, -1) == decompose(PS1, -1)
    # Z_{2,1}^{-1} has the Etilde exponent doubled but the Nl twist kept.
    terms = decompose_twist(PS1, -2, -1)
    assert list(terms) == [PTerm(-2, -1), PTerm(-1, 1), PTerm(-2, 3)]


def test_index_cutoff_matches_enumeration(sweep_small):
    # The closed-form summation bounds must agree with direct enumeration
    # of the indices whose O_P(1)-exponent stays nonnegative.
    for f in sweep_small[:25]:
        for n in range(0, 26):
            cut = nonneg_cutoff(f, n)
            terms = decompose(f, n)
            istart = 0 if n % f.ell == 0 else 1
            by_enum = {i for i in range(istart, f.ell) if terms[i].mtw >= 0}
            by_cutoff = {i for i in range(istart, f.ell) if i <= cut}
            assert by_enum == by_cutoff, (f, n)


# -------------------------------------------------------------------- reduction


def test_reduce_term_examples():
    for i in (0, 1, 2):
        assert reduce_term(PS1, PTerm(-1, 5), i) is None
    assert reduce_term(PS1, PTerm(-2, 3), 1) == TwistedSym(True, 0, 0)
    assert reduce_term(PS1, PTerm(2, 5), 2) is None
    assert reduce_term(PS1, PTerm(2, 5), 0) == TwistedSym(False, 2, 5)
    assert reduce_term(PS1, PTerm(2, 5), 1) == TwistedSym(False, 2, 5)
    assert reduce_term(PS1, PTerm(-3, 1), 0) is None
    assert reduce_term(PS1, PTerm(-3, 1), 2) == TwistedSym(True, 1, -2)
    with pytest.raises(ValueError):
        reduce_term(PS1, PTerm(0, 0), 3)


# --------------------------------------------------------------- surface certs


def test_h_surface_raynaud_profile():
    assert h_surface(PS1, 1, -1) == Cert.exact(1)
    assert h_surface(PS1, 1, -2) == Cert.exact(0)
    assert h_surface(PS1, 0, -5) == Cert.exact(0)
    with pytest.raises(ValueError):
        h_surface(PS1, 3, 0)


def test_h2_at_minus_one_is_genus():
    # The single surviving derived term at n = -1 is O_C, so h^2 = g.
    assert h_surface(PS1, 2, -1) == Cert.exact(4)


def test_chi_matches_exact_triples(sweep_small):
    # Sign-convention oracle: chi = h0 - h1 + h2 on every fully exact cell.
    checked = 0
    for f in sweep_small[:20]:
        for n in range(-10, 16):
            sc = surface_cert(f, n)
            if sc.h0.is_exact and sc.h1.is_exact and sc.h2.is_exact:
                assert sc.chi == sc.h0.lo - sc.h1.lo + sc.h2.lo, (f, n)
                checked += 1
    assert checked > 100


def test_chi_example_ps1():
    sc = surface_cert(PS1, -1)
    assert sc.chi == 3
    assert (sc.h0, sc.h1, sc.h2) == (Cert.exact(0), Cert.exact(1), Cert.exact(4))
    assert chi_X(PS1, -1) == 3


def test_term_records_carry_reductions():
    sc = surface_cert(PS1, -1)
    assert [r.term for r in sc.terms] == list(decompose(PS1, -1))
    assert sc.terms[0].pushforward is None and sc.terms[0].derived is None
    last = sc.terms[2]
    assert last.derived is not None
    assert last.derived.sheaf == TwistedSym(True, 0, 0)
    assert last.chi == -chi(PS1, TwistedSym(True, 0, 0)) == 3
    assert sum(r.chi for r in sc.terms) == sc.chi


# ---------------------------------------------------------------- closed forms


def test_h1neg_closed_form_examples():
    assert h1neg_closed_form(PS2, -1) == Cert.exact(1)
    assert h1neg_closed_form(PS3, -2) == Cert.exact(1)
    assert h1neg_closed_form(PS1, -7) == Cert.exact(0)
    with pytest.raises(ValueError):
        h1neg_closed_form(PS1, 0)


def test_closed_forms_agree_with_engine(sweep_small):
    for f in sweep_small[:25]:
        for n in range(-30, 0):
            assert h1neg_closed_form(f, n) == h_surface(f, 1, n), (f, n)
        for n in range(-10, 16):
            assert h0_closed_form(f, n) == h_surface(f, 0, n), (f, n)
            assert h2_closed_form(f, n) == h_surface(f, 2, n), (f, n)


def test_h2_vanishing_window(sweep_small):
    for f in sweep_small[:25]:
        base = f.p * (f.p + 1)
        for n in range(base, base + 3 * f.ell + 1):
            assert h_surface(f, 2, n) == Cert.exact(0), (f, n)


def test_result1_range_examples():
    assert result1_range(PS1) == [-1]
    assert result1_range(PS2) == [-1]
    assert result1_range(PS3) == [-2, -1]
    assert h1_nonvanishing_window(PS3) == -2


def test_engine_certifies_nonvanishing_window(sweep_small):
    for f in sweep_small:
        for n in result1_range(f):
            assert h_surface(f, 1, n).certainly_nonzero, (f, n)


def test_small_p_vanishing_below_window(sweep_small):
    for f in sweep_small:
        if f.p in (2, 3):
            for n in range(-40, h1_nonvanishing_window(f)):
                assert h_surface(f, 1, n) == Cert.exact(0), (f, n)


# -------------------------------------------------------------- twisted family


def test_zab_examples():
    assert zab_nonvanishing(PS1, 1, 1) == Cert.at_least(1)
    assert zab_nonvanishing(PS2, 2, 1) == Cert.at_least(1)
    # At b = ell-1 with ell = p+1 the witness symmetric power is the zero
    # sheaf, no constant section embeds, and the direct image in fact
    # vanishes: the engine certificate is exactly zero.
    assert zab_nonvanishing(PS3, 5, 3) == Cert.exact(0)
    assert h_surface(PS3, 1, -1, a=5, b=3) == Cert.exact(0)
    with pytest.raises(ValueError):
        zab_nonvanishing(PS1, 0, 1)
    with pytest.raises(ValueError):
        zab_nonvanishing(PS1, 1, 3)


def test_zab_consistent_with_engine(sweep_small):
    # The constructive bound must stay inside the engine interval.
    for f in sweep_small[:15]:
        for a in (1, 2, 5):
            for b in range(1, f.ell):
                lo = zab_nonvanishing(f, a, b).lo
                eng = h_surface(f, 1, -1, a, b)
                assert eng.hi is None or lo <= eng.hi, (f, a, b)


def test_zab_corrected_window_always_fires(sweep_small):
    # Sound version of the non-vanishing family: for b within the window
    # b <= ell - ceil(2 ell / (p+1)) the constants always embed.
    for f in sweep_small:
        bmax = -h1_nonvanishing_window(f)
        for b in range(1, bmax + 1):
            for a in (1, 3, 5):
                assert zab_nonvanishing(f, a, b).lo >= 1, (f, a, b)


# ------------------------------------------------------------------- predicates


def test_theorem_predicates_clean_on_reference_tuples():
    for params in (PS1, PS2, PS3, PS4):
        report = theorem_predicates(params)
        assert report.stronger == ()
        assert all(e.verdict == "confirmed" for e in report.entries)
        names = {e.theorem for e in report.entries}
        assert "h2_vanishes_high" in names
        assert "h1_nonzero_near_zero" in names
        assert "h0_zero_negative" in names
        assert "polarization_is_etilde_plus_root" in names


def test_theorem_predicates_report_json():
    report = theorem_predicates(PS1)
    blob = report.to_json()
    assert blob["params"] == PS1.to_json()
    assert blob["checks"] == len(report.entries)
    assert blob["confirmed"] == len(report.entries)
    assert blob["stronger"] == []
