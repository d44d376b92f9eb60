"""Concurrent use: immutable inputs, grow-only coefficient cache."""

import math
from concurrent.futures import ThreadPoolExecutor

from fpint import funcmodel as fm
from fpint import hilbert as hb


def test_coefficient_cache_under_concurrent_readers():
    f = fm.builtin("fermi", a=1.0)
    reference = fm.builtin("fermi", a=1.0).coefficients(120)

    def worker(_):
        return [f.maclaurin(n) for n in range(120)]

    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(worker, range(16)))
    for res in results:
        assert res == list(reference)


def test_concurrent_transform_evaluations_identical():
    f = fm.builtin("exp_decay", a=1.0)
    spec = hb.TransformSpec("sym_omega", 0.3, 0.25, math.inf)
    baseline = hb.evaluate_transform(spec, f).value

    def worker(_):
        return hb.evaluate_transform(spec, f).value

    with ThreadPoolExecutor(max_workers=8) as pool:
        values = list(pool.map(worker, range(24)))
    assert all(v == baseline for v in values)
