"""Differential tests between the pure-Python and compiled kernels."""

import pytest

from conftest import random_labeling, random_poset

from canonlab import _pykernel, kernel
from canonlab.poset import Labeling, antichain, chain, checked_product, product_with_chain

_ckernel = pytest.importorskip("canonlab._ckernel")

POSETS = [
    chain(1),
    chain(4),
    antichain(4),
    product_with_chain(chain(2), 3),
    product_with_chain(chain(3), 3),
    checked_product(chain(2), 2),
    checked_product(chain(3), 2),
]


@pytest.mark.parametrize("p", POSETS, ids=lambda p: f"n{p.element_count}c{len(p.covers)}")
def test_counts_agree(p):
    covers = sorted(p.covers)
    assert _pykernel.count_extensions(p.element_count, covers) == \
        _ckernel.count_extensions(p.element_count, covers)


@pytest.mark.parametrize("p", POSETS, ids=lambda p: f"n{p.element_count}c{len(p.covers)}")
def test_histograms_agree(p, rng):
    covers = sorted(p.covers)
    labs = [random_labeling(rng, p.element_count).values for _ in range(5)]
    labs.append(Labeling.natural(p.element_count).values)
    assert _pykernel.descent_histograms(p.element_count, covers, labs) == \
        _ckernel.descent_histograms(p.element_count, covers, labs)


def test_random_posets_agree(rng):
    for _ in range(30):
        p = random_poset(rng, max_elements=6)
        covers = sorted(p.covers)
        labs = [random_labeling(rng, p.element_count).values for _ in range(3)]
        assert _pykernel.count_extensions(p.element_count, covers) == \
            _ckernel.count_extensions(p.element_count, covers)
        assert _pykernel.descent_histograms(p.element_count, covers, labs) == \
            _ckernel.descent_histograms(p.element_count, covers, labs)


def test_prefix_paths_agree(rng):
    p = product_with_chain(chain(2), 3)
    covers = sorted(p.covers)
    labs = [random_labeling(rng, 6).values for _ in range(3)]
    for prefix in [(), (0,), (0, 1), (0, 2)]:
        assert _pykernel.count_extensions(6, covers, prefix) == \
            _ckernel.count_extensions(6, covers, prefix)
        assert _pykernel.descent_histograms(6, covers, labs, prefix) == \
            _ckernel.descent_histograms(6, covers, labs, prefix)


def test_invalid_prefix_rejected():
    p = chain(3)
    covers = sorted(p.covers)
    with pytest.raises(ValueError):
        _pykernel.count_extensions(3, covers, (2,))
    with pytest.raises(ValueError):
        _ckernel.count_extensions(3, covers, (2,))


def test_full_prefix_counts_one():
    p = chain(3)
    covers = sorted(p.covers)
    assert _pykernel.count_extensions(3, covers, (0, 1, 2)) == 1
    assert _ckernel.count_extensions(3, covers, (0, 1, 2)) == 1
    hist_py = _pykernel.descent_histograms(3, covers, [(3, 1, 2)], (0, 1, 2))
    hist_c = _ckernel.descent_histograms(3, covers, [(3, 1, 2)], (0, 1, 2))
    assert hist_py == hist_c == [[0, 1, 0]]


def test_facade_backend_reports():
    assert kernel.backend() in ("cython", "python")


def test_facade_accepts_labeling_objects():
    p = chain(3)
    rows = kernel.descent_histograms(p, [Labeling((3, 1, 2))])
    assert rows == [[0, 1, 0]]
