import random

import pytest

from trisum.core_arith import eval_quad
from trisum.verifier import (
    FORMS,
    BudgetExceeded,
    RangeReport,
    brute_quad,
    verify_range,
)

# slow but obviously-correct enumerations, used as the reference


def _reachable(form: str, hi: int) -> set[int]:
    def tri_odd(limit):
        return [k * (2 * k - 1) for k in range(limit + 2) if k * (2 * k - 1) <= limit]

    def tri_even(limit):
        return [k * (2 * k + 1) for k in range(limit + 2) if k * (2 * k + 1) <= limit]

    out = set()
    if form == "thm1":
        for a in tri_odd(hi):
            for b in tri_odd(hi - a):
                for c in tri_even(hi - a - b):
                    for d in tri_even(hi - a - b - c):
                        out.add(a + b + c + d)
    elif form == "thm2":
        for a in tri_odd(hi // 2):
            for b in tri_odd(hi - 2 * a):
                for c in tri_even((hi - 2 * a - b) // 2):
                    for d in tri_even(hi - 2 * a - b - 2 * c):
                        out.add(2 * a + b + 2 * c + d)
    elif form == "conj_a":
        for a in tri_odd(hi):
            for b in tri_odd(hi - a):
                for c in tri_even(hi - a - b):
                    out.add(a + b + c)
    elif form == "conj_b":
        for a in tri_odd(hi):
            for b in tri_even(hi - a):
                for c in tri_even(hi - a - b):
                    out.add(a + b + c)
    else:
        out = _reachable("conj_a", hi) | _reachable("conj_b", hi)
    return out


class TestBruteQuad:
    def test_known_witnesses(self):
        assert brute_quad("thm1", 8) == (1, 1, 1, 1)
        assert brute_quad("thm2", 0) == (0, 0, 0, 0)
        assert brute_quad("thm2", 1) == (0, 1, 0, 0)
        assert brute_quad("thm2", 3) == (0, 0, 0, 1)

    def test_conjecture_misses_eight_and_sixty_eight(self):
        assert brute_quad("conjecture", 8) is None
        assert brute_quad("conjecture", 68) is None
        assert brute_quad("conj_a", 8) is None
        assert brute_quad("conj_b", 8) is None

    @pytest.mark.parametrize("form", FORMS)
    def test_agrees_with_reference_enumeration(self, form):
        reachable = _reachable(form, 400)
        for n in range(401):
            witness = brute_quad(form, n)
            if n in reachable:
                assert witness is not None, (form, n)
                if form in ("thm1", "thm2"):
                    assert eval_quad(form, witness) == n
            else:
                assert witness is None, (form, n)

    def test_conj_witnesses_evaluate(self):
        # three-slot forms have no eval_quad helper; check by hand
        a, b, c = brute_quad("conj_a", 100)
        assert a * (2 * a - 1) + b * (2 * b - 1) + c * (2 * c + 1) == 100
        a, b, c = brute_quad("conj_b", 100)
        assert a * (2 * a - 1) + b * (2 * b + 1) + c * (2 * c + 1) == 100

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            brute_quad("thm1", 10**8 + 1)
        assert brute_quad("thm1", 301, budget=None) is not None
        assert brute_quad("thm1", 301, budget=301) is not None

    def test_unknown_form(self):
        with pytest.raises(ValueError):
            brute_quad("thm9", 5)

    def test_doubled_form_table_growth(self):
        # exercise the cached pair table across a growing range
        for n in (5, 2000, 40000, 6000):
            witness = brute_quad("thm2", n)
            assert eval_quad("thm2", witness) == n


class TestVerifyRange:
    def test_conjecture_exceptions(self):
        report = verify_range("conjecture", 0, 10000)
        assert report.exceptions == (8, 68)
        assert report.form == "conjecture"
        assert (report.lo, report.hi) == (0, 10000)
        assert report.chunks == 1
        assert report.elapsed_ms >= 0.0

    def test_quadruple_forms_have_no_exceptions(self):
        assert verify_range("thm1", 0, 10000).exceptions == ()
        assert verify_range("thm2", 0, 10000).exceptions == ()

    @pytest.mark.parametrize("form", FORMS)
    def test_agrees_with_reference_enumeration(self, form):
        hi = 400
        expected = tuple(sorted(set(range(hi + 1)) - _reachable(form, hi)))
        assert verify_range(form, 0, hi).exceptions == expected

    def test_sub_ranges(self):
        assert verify_range("conjecture", 9, 67).exceptions == ()
        assert verify_range("conjecture", 8, 68).exceptions == (8, 68)
        assert verify_range("conjecture", 68, 68).exceptions == (68,)

    def test_threaded_scan_is_deterministic(self):
        base = verify_range("conj_a", 0, 30000)
        small_chunks = verify_range("conj_a", 0, 30000, threads=4, chunk=1 << 10)
        assert small_chunks.exceptions == base.exceptions
        assert small_chunks.chunks > base.chunks

    def test_cap_and_override(self):
        with pytest.raises(BudgetExceeded):
            verify_range("thm1", 0, 5000, cap=1000)
        report = verify_range("thm1", 0, 5000, cap=1000, full=True)
        assert report.exceptions == ()

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            verify_range("thm9", 0, 10)
        with pytest.raises(ValueError):
            verify_range("thm1", 10, 5)
        with pytest.raises(ValueError):
            verify_range("thm1", -1, 5)

    def test_random_windows_match_per_input_search(self):
        rng = random.Random(9)
        for _ in range(10):
            lo = rng.randint(0, 5000)
            hi = lo + rng.randint(0, 500)
            form = rng.choice(FORMS)
            report = verify_range(form, lo, hi)
            missing = tuple(n for n in range(lo, hi + 1) if brute_quad(form, n) is None)
            assert report.exceptions == missing, (form, lo, hi)

    def test_report_is_a_named_tuple(self):
        report = verify_range("thm1", 0, 10)
        assert isinstance(report, RangeReport)
        assert report._fields == ("form", "lo", "hi", "exceptions", "elapsed_ms", "chunks")
