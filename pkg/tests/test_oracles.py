"""The oracles get their own audit: symbolic integration on small cases.

If these fail nothing else in the suite means anything, so they come
first and stay tiny.
"""

from fractions import Fraction

import pytest
import sympy

from oracles import beta_function, beta_marginal, dirichlet_marginal


@pytest.mark.parametrize(
    "a,b",
    [(1, 1), (2, 1), (1, 2), (2, 2), (3, 2), (4, 3)],
)
def test_beta_function_matches_symbolic_integral(a, b):
    x = sympy.Symbol("x")
    integral = sympy.integrate(x ** (a - 1) * (1 - x) ** (b - 1), (x, 0, 1))
    assert beta_function(a, b) == Fraction(int(integral.p), int(integral.q))


@pytest.mark.parametrize(
    "alpha,beta,confirms,disconfirms",
    [(1, 1, 2, 1), (1, 1, 0, 0), (2, 1, 3, 0), (2, 3, 1, 2)],
)
def test_beta_marginal_matches_symbolic_integral(alpha, beta, confirms, disconfirms):
    # the ordered-sequence marginal is the integral of the likelihood
    # against the normalized prior density
    x = sympy.Symbol("x")
    density = x ** (alpha - 1) * (1 - x) ** (beta - 1) / sympy.beta(alpha, beta)
    integral = sympy.integrate(
        density * x**confirms * (1 - x) ** disconfirms, (x, 0, 1)
    )
    integral = sympy.nsimplify(sympy.simplify(integral))
    assert beta_marginal(alpha, beta, confirms, disconfirms) == Fraction(
        int(integral.p), int(integral.q)
    )


def test_dirichlet_marginal_binary_case_reduces_to_beta():
    # over two types the Dirichlet integral is the Beta integral
    for alpha in (1, 2, 3):
        for beta in (1, 2):
            for a in range(5):
                for b in range(5):
                    assert dirichlet_marginal((alpha, beta), (a, b)) == beta_marginal(
                        alpha, beta, a, b
                    )


def test_dirichlet_marginal_three_types_by_symbolic_integration():
    # P(one fixed sequence with counts (2,1,0)) under Dirichlet(1,1,1):
    # integrate x^2 y over the simplex, times the normalizer 2!
    x, y = sympy.symbols("x y")
    integral = sympy.integrate(
        sympy.integrate(x**2 * y, (y, 0, 1 - x)), (x, 0, 1)
    )
    value = 2 * integral  # Dirichlet(1,1,1) density is 2 on the simplex
    assert dirichlet_marginal((1, 1, 1), (2, 1, 0)) == Fraction(
        int(value.p), int(value.q)
    )
