import pytest

from hibi import zlinalg
from hibi.checks import verify_poset
from hibi.poset import antichain, chain, disjoint_union, product

from support import V_poset, grid, random_dags


@pytest.mark.parametrize(
    "P",
    [chain(3), antichain(3), V_poset(), grid(), product(chain(2), chain(3)), disjoint_union(V_poset(), chain(2))],
    ids=["chain3", "antichain3", "V", "grid", "2x3", "V+chain2"],
)
def test_named_posets_verify(P):
    report = verify_poset(P)
    failed = [k for k, ok in report["checks"].items() if not ok]
    assert not failed
    assert report["cl"]["torsion"] == []


def test_random_sample_verifies():
    for P in random_dags(samples=25, seed=7):
        report = verify_poset(P, box=1)
        assert all(report["checks"].values()), P


def test_broken_cartier_test_is_caught(monkeypatch):
    monkeypatch.setattr(zlinalg, "is_cartier_fast", lambda P, alpha, cap: True)
    report = verify_poset(V_poset(), box=1)
    assert report["pic"]["verified"] is False
    assert report["checks"]["pic_oracle"] is False
