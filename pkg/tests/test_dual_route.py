"""The sparse slotwise homology path against the general SNF path.

Both must produce identical pages on real pipeline data, not just on
random matrices: the fast path is an optimization, never a semantic
fork.
"""

import pytest

import hfpss.modules as modules
from hfpss.engine import compute
from hfpss.targets import Target, Window


@pytest.mark.parametrize("target", [Target.C2, Target.C2_V0, Target.C6_Y])
def test_pipeline_identical_through_general_snf(target, monkeypatch):
    window = Window(0, 10, filt_max=12, N=6)
    fast = compute(target, window)
    with monkeypatch.context() as mp:
        mp.setattr(modules, "_monomial_sparse", lambda lm: False)
        slow = compute(target, window)
    for r in (2, 4, 8):
        ps, pf = slow.stack.pages[r], fast.stack.pages[r]
        assert ps.modules.keys() == pf.modules.keys()
        for key in ps.modules:
            assert ps.modules[key].summands == pf.modules[key].summands, (r, key)
    assert {s: g.expr.render() for s, g in slow.groups.items()} == \
        {s: g.expr.render() for s, g in fast.groups.items()}
