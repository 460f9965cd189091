"""Starting-page constructions and their structural invariants."""

import pytest

from hfpss.e2 import (build_e2, c3_invariants, check_y_page_is_eta_cokernel,
                      eta_injectivity_check)
from hfpss.monomials import NAMED, Monomial
from hfpss.targets import Target, Window

WIN = Window(0, 15, filt_max=20, N=6)
WIN6 = Window(0, 20, filt_max=20, N=9)


def test_c2_page_has_even_u_powers_and_witt_bottoms():
    page = build_e2(Target.C2, WIN)
    for (stem, filt), mod in page.modules.items():
        for s in mod.summands:
            assert s.mono.u % 2 == 0
            assert s.order == (3 if filt == 0 else 1)


def test_c2_v0_page_all_torsion_all_u_powers():
    page = build_e2(Target.C2_V0, WIN)
    assert page.module(2, 0).summands  # odd u-power u^-1 present
    for mod in page.modules.values():
        for s in mod.summands:
            assert s.order == 1


def test_c2_v0_stem_one_column():
    # towers at filtrations 1, 3, 5, ... generated by a, a^3 u, a^5 u^2, ...
    page = build_e2(Target.C2_V0, WIN)
    col = [(filt, page.module(1, filt)) for filt in range(0, 8)]
    gens = {filt: [s.mono for s in m.summands if s.mono.u1 == 0]
            for filt, m in col if m}
    assert sorted(gens) == [1, 3, 5, 7]
    assert gens[1] == [Monomial(0, 0, 1)]
    assert gens[3] == [Monomial(1, 0, 3)]
    assert gens[5] == [Monomial(2, 0, 5)]


def test_c6_bidegree_0_0_is_period_3_witt_tower():
    page = build_e2(Target.C6, WIN6)
    mod = page.module(0, 0)
    assert [s.mono.u1 for s in mod.summands][:3] == [0, 3, 6]
    assert all(s.order == 3 for s in mod.summands)


def test_c6_y_stem_3_starts_with_nu_and_collapses_to_it():
    page = build_e2(Target.C6_Y, WIN6)
    mod = page.module(3, 3)
    assert [s.mono for s in mod.summands] == [Monomial(0, 0, 3)]
    # everything above filtration 3 in this column dies by Einfty
    from hfpss.pages import run_to_einfty
    stack = run_to_einfty(Target.C6_Y, Window(0, 10, N=6))
    einf = stack.einfty
    nonzero = {f for (n, f), m in einf.modules.items()
               if n == 3 and einf.reported_summands(n, f)}
    assert nonzero == {3}


def test_weight_zero_filter():
    page = build_e2(Target.C6, WIN6)
    for mod in page.modules.values():
        for s in mod.summands:
            assert s.mono.weight == 0
    # u1 u^-4 retained, u^-1 has no even analogue; check u^-2 u1 dropped
    assert page.module(8, 0).slot_of(Monomial(-4, 1, 0)) is not None
    assert page.module(4, 0).slot_of(Monomial(-2, 1, 0)) is None


def test_prop_relation_names_one_basis_slot():
    # [v1v2]^3 and u1^3 * [v2^2]^2 are the same basis monomial u1^3 u^-12
    page = build_e2(Target.C6, Window(20, 28, N=6))
    target = NAMED["v1v2"] ** 3
    assert target == NAMED["j0"] * NAMED["v2sq"] ** 2
    assert page.module(24, 0).slot_of(target) is not None


def test_c3_invariants_equals_direct_construction():
    for c2_target, c6_target in ((Target.C2, Target.C6),
                                 (Target.C2_V0, Target.C6_V0)):
        big = build_e2(c2_target, WIN6)
        restricted = c3_invariants(big)
        direct = build_e2(c6_target, WIN6)
        assert restricted.modules.keys() == direct.modules.keys()
        for key in direct.modules:
            assert restricted.modules[key].summands == direct.modules[key].summands


def test_c2_v0_page_is_h_free():
    # multiplication by h = alpha*u is injective on every interior bidegree
    page = build_e2(Target.C2_V0, WIN)
    h = NAMED["h"]
    horizon = page.window.n_u1
    for (stem, filt), mod in page.modules.items():
        tgt = page.module(stem - 1, filt + 1)
        if not page.window.in_padded(stem - 1, filt + 1):
            continue
        for s in mod.summands:
            assert tgt.slot_of(s.mono * h) is not None


def test_eta_injectivity_full_window():
    page = build_e2(Target.C6_V0, Window(0, 48))
    report = eta_injectivity_check(page)
    assert report.ok, report.failures[:3]
    # cokernel slots are the weight-0 monomials with b = 0 or c = 0
    assert report.coker_dims


def test_eta_injectivity_on_zero_page_is_vacuous():
    page = build_e2(Target.C6_V0, Window(5, 5, filt_max=0, N=3))
    page.modules = {}
    report = eta_injectivity_check(page)
    assert report.ok and not report.coker_dims


def test_y_page_matches_eta_cokernel():
    check_y_page_is_eta_cokernel(Window(0, 24, N=9))


def test_eta_injectivity_rejects_wrong_target():
    page = build_e2(Target.C2, WIN)
    with pytest.raises(ValueError):
        eta_injectivity_check(page)
