"""LinearCode mechanics: field arithmetic, duals, weight enumerators, and
exact erasure statistics computed by subset enumeration."""

import math

import numpy as np
import pytest

from boundlab.codes import (LinearCode, dual, erasure_entropy_exact,
                            erasure_error_exact, erasure_list_size_max,
                            extended_hamming_8_4, format_generator_text,
                            full_space, hamming_7_4, list_size_max, load_code,
                            parse_generator_text, random_code,
                            repetition_code, single_parity_check_code,
                            weight_distribution, zero_code)
from boundlab.errors import BudgetExceededError, DomainError


def test_code_dimensions():
    c = hamming_7_4()
    assert (c.q, c.n, c.k, c.size) == (2, 7, 4, 16)
    assert c.rate == pytest.approx(4 / 7)
    assert c.min_distance == 3


def test_rank_deficient_generator_rejected():
    with pytest.raises(DomainError):
        LinearCode(2, [[1, 0, 1], [1, 0, 1]])


def test_non_prime_field_rejected():
    with pytest.raises(DomainError):
        LinearCode(4, [[1, 0], [0, 1]])
    with pytest.raises(DomainError):
        LinearCode(6, [[1, 0], [0, 1]])


def test_entries_out_of_field_rejected():
    with pytest.raises(DomainError):
        LinearCode(2, [[0, 2]])


def test_codewords_closed_under_addition():
    c = random_code(3, 6, 3, seed=5)
    words = c.codewords
    total = {tuple(w) for w in words}
    s = tuple((words[3] + words[11]) % 3)
    assert s in total


def test_hamming_weight_distribution():
    # the [7,4] Hamming code: 1, 0, 0, 7, 7, 0, 0, 1
    wd = weight_distribution(hamming_7_4())
    assert list(wd.counts) == [1, 0, 0, 7, 7, 0, 0, 1]
    assert wd.total == 16
    assert wd.min_positive_weight() == 3


def test_extended_hamming_weights():
    wd = weight_distribution(extended_hamming_8_4())
    assert list(wd.counts) == [1, 0, 0, 0, 14, 0, 0, 0, 1]


def test_dual_of_repetition_is_parity_check():
    c = repetition_code(2, 5)
    d = dual(c)
    assert (d.n, d.k) == (5, 4)
    e = single_parity_check_code(2, 5)
    assert {tuple(w) for w in d.codewords} == {tuple(w) for w in e.codewords}


def test_dual_size_product():
    for c in (hamming_7_4(), random_code(3, 5, 2, seed=1)):
        assert c.size * dual(c).size == c.q ** c.n


def test_zero_and_full_space_extremes():
    z = zero_code(3, 4)
    assert z.size == 1 and z.min_distance is None
    f = full_space(2, 4)
    assert f.size == 16 and f.min_distance == 1


def test_erasure_entropy_closed_form_repetition():
    # repetition code: H(X|Y) = lam^n bits (all-erased pattern leaves one bit)
    n, lam = 4, 0.3
    got = erasure_entropy_exact(repetition_code(2, n), lam)
    assert got == pytest.approx(lam ** n, abs=1e-12)


def test_erasure_entropy_full_space():
    # full space: every erased coordinate contributes log2(q)
    n, lam, q = 5, 0.4, 3
    got = erasure_entropy_exact(full_space(q, n), lam)
    assert got == pytest.approx(n * lam * math.log2(q), abs=1e-12)


def test_erasure_error_exact_repetition():
    # rep-n over GF(2): ambiguity iff all n erased; MAP errs half of those;
    # a bit is undetermined only then, and errs with prob 1/2
    n, lam = 3, 0.5
    amb, map_pb, pb = erasure_error_exact(repetition_code(2, n), lam)
    assert amb == pytest.approx(lam ** n, abs=1e-12)
    assert map_pb == pytest.approx(0.5 * lam ** n, abs=1e-12)
    assert pb == pytest.approx(0.5 * lam ** n, abs=1e-12)


def test_erasure_error_exact_full_space():
    n, lam, q = 4, 0.45, 2
    amb, map_pb, pb = erasure_error_exact(full_space(q, n), lam)
    assert amb == pytest.approx(1.0 - (1.0 - lam) ** n, abs=1e-12)
    assert pb == pytest.approx(lam * (q - 1) / q, abs=1e-12)


def test_list_size_hamming():
    # radius 1: perfect code, every center sees exactly one codeword at <= 1
    cert = list_size_max(hamming_7_4(), 1)
    assert cert.L == 1
    # radius 3 includes distance-3 codeword pairs around their midpoints
    cert3 = list_size_max(hamming_7_4(), 3)
    assert cert3.L >= 2
    assert cert3.witness is not None


def test_list_size_budget():
    with pytest.raises(BudgetExceededError):
        list_size_max(random_code(5, 12, 2, seed=3), 2)


def test_erasure_list_size_repetition():
    # revealed sets satisfy |T| > (1-rho) n strictly, so even rho = 1 keeps
    # one revealed coordinate, which pins a repetition codeword
    cert = erasure_list_size_max(repetition_code(2, 6), 0.5)
    assert cert.L == 1
    cert_all = erasure_list_size_max(repetition_code(2, 6), 1.0)
    assert cert_all.L == 1


def test_erasure_list_size_full_space():
    # full space with one revealed coordinate: 2^(n-1) consistent words
    cert = erasure_list_size_max(full_space(2, 3), 1.0)
    assert cert.L == 4


def test_generator_text_roundtrip(tmp_path):
    c = random_code(3, 7, 3, seed=11)
    text = format_generator_text(c)
    c2 = parse_generator_text(text)
    assert (c2.q, c2.n, c2.k) == (c.q, c.n, c.k)
    assert np.array_equal(c.generator, c2.generator)
    path = tmp_path / "code.txt"
    path.write_text(text, encoding="utf-8")
    c3 = load_code(str(path))
    assert np.array_equal(c.generator, c3.generator)


def test_parse_generator_rejects_malformed():
    with pytest.raises(DomainError):
        parse_generator_text("")
    with pytest.raises(DomainError):
        parse_generator_text("2 3\n1 1 1\n")
    with pytest.raises(DomainError):
        parse_generator_text("2 3 1\n1 1\n")
    with pytest.raises(DomainError):
        parse_generator_text("2 3 2\n1 1 1\n")  # row count mismatch
    with pytest.raises(DomainError):
        parse_generator_text("2 3 2\n1 1 1\n1 1 1\n")  # rank deficient


def test_parse_generator_skips_comments():
    c = parse_generator_text("# repetition\n2 3 1\n1 1 1\n")
    assert (c.q, c.n, c.k) == (2, 3, 1)
