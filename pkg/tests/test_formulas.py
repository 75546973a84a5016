from math import comb

import pytest

from permpat.formulas import (
    BinomialPoly,
    Catalan,
    Constant,
    ExplicitFamily,
    FibonacciForm,
    Linear,
    PowerLinear,
    RationalGF,
    TribonacciForm,
    ZeroBeyond,
    binomial,
    evaluate,
    fibonacci,
    gf_coefficients,
    render,
    tribonacci,
)


def test_eval_examples():
    assert evaluate(Linear(3, -5), 4) == 7
    assert evaluate(BinomialPoly(((1, 0, 2),), 1), 4) == 7
    assert evaluate(Catalan(), 5) == 42


def test_catalan_identity():
    for n in range(16):
        assert evaluate(Catalan(), n) == comb(2 * n, n) // (n + 1)


def test_binomial_zero_below_diagonal():
    assert binomial(3, 4) == 0
    assert binomial(-1, 2) == 0
    assert binomial(5, 2) == 10


def test_fibonacci():
    assert [fibonacci(m) for m in range(1, 8)] == [1, 1, 2, 3, 5, 8, 13]
    assert fibonacci(6) == 8 and fibonacci(7) == 13
    for m in range(3, 21):
        assert fibonacci(m) == fibonacci(m - 1) + fibonacci(m - 2)
    with pytest.raises(ValueError):
        fibonacci(0)


def test_tribonacci():
    assert [tribonacci(m) for m in range(1, 8)] == [1, 2, 4, 7, 13, 24, 44]
    for m in range(4, 20):
        assert tribonacci(m) == tribonacci(m - 1) + tribonacci(m - 2) + tribonacci(m - 3)
    with pytest.raises(ValueError):
        tribonacci(0)


def test_power_linear_values():
    one_plus = PowerLinear(1, -1, -2, (), 1)  # 1+(n-1)2^(n-2)
    assert [evaluate(one_plus, n) for n in (1, 2, 3, 4)] == [1, 2, 5, 13]
    three_pow = PowerLinear(0, 3, -1, ((-1, 1, 2),), -1)  # 3*2^(n-1)-C(n+1,2)-1
    assert [evaluate(three_pow, n) for n in (1, 2, 3, 4)] == [1, 2, 5, 13]
    bjs = PowerLinear(0, 1, 1, ((-1, 1, 3), (-2, 0, 1)), -1)  # 2^(n+1)-C(n+1,3)-2n-1
    assert [evaluate(bjs, n) for n in (1, 2, 3, 4)] == [1, 2, 5, 13]
    pow2 = PowerLinear(0, 1, -1, (), 0)
    assert [evaluate(pow2, n) for n in (1, 2, 5)] == [1, 2, 16]


def test_fibonacci_forms():
    table1 = FibonacciForm(2, -1, 0)
    assert [evaluate(table1, n) for n in (1, 2, 3, 4)] == [1, 2, 5, 13]
    minus_one = FibonacciForm(1, 2, -1)
    assert [evaluate(minus_one, n) for n in (1, 2, 3, 4, 5)] == [1, 2, 4, 7, 12]
    plain = FibonacciForm(1, 1, 0)
    assert [evaluate(plain, n) for n in (1, 2, 3, 4)] == [1, 2, 3, 5]


def test_gf_coefficients():
    assert gf_coefficients((1,), (1, -1), 6) == [1] * 7
    # long division by hand: 1, then 4*1-5*0+3*0-3 = 1, then 4*1-5*1+3 = 2, ...
    coeffs = gf_coefficients((1, -3, 3, -1), (1, -4, 5, -3), 9)
    assert coeffs[:4] == [1, 1, 2, 5]
    for n in range(4, 10):
        assert coeffs[n] == 4 * coeffs[n - 1] - 5 * coeffs[n - 2] + 3 * coeffs[n - 3]
    with pytest.raises(ValueError):
        gf_coefficients((1,), (0, 1), 3)


def test_rational_gf_eval():
    gf = RationalGF((1, -3, 3, -1), (1, -4, 5, -3))
    assert [evaluate(gf, n) for n in range(4)] == [1, 1, 2, 5]


def test_constant_and_zero():
    assert evaluate(Constant(3, 3), 9) == 3
    assert evaluate(ZeroBeyond(6), 8) == 0
    assert evaluate(TribonacciForm(0), 6) == 24


def test_explicit_family_uses_registry():
    import permpat.catalog  # populates the registry

    fam = ExplicitFamily("123;132;213;231;4312")
    assert evaluate(fam, 6) == 1
    assert fam.family(4) == frozenset({(4, 3, 2, 1)})


def test_render_strings():
    assert render(Catalan()) == "C(2n,n)/(n+1)"
    assert render(Linear(2, -2)) == "2n-2"
    assert render(Linear(1, 0)) == "n"
    assert "C(n,2)" in render(BinomialPoly(((1, 0, 2),), 1))
    assert "f(2n-1)" in render(FibonacciForm(2, -1, 0))
    assert "2^(n-1)" in render(PowerLinear(0, 1, -1, (), 0))
    assert "1-4x+5x^2-3x^3" in render(RationalGF((1, -3, 3, -1), (1, -4, 5, -3)))
