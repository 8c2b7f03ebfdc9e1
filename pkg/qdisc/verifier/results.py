RESULT_TABLE = {
    # rewrite
    'field-laws-holds': {
        'description': 'Associativity, distributivity and inverses hold on sampled scalar triples',
    },
    'field-laws-fails': {
        'description': 'A field law fails on a sampled scalar triple',
    },
    'qpochhammer-split-holds': {
        'description': '(a; q^2)_(n+m) = (a; q^2)_n (a q^2n; q^2)_m on sampled a, n, m',
    },
    'qpochhammer-split-fails': {
        'description': 'A q-Pochhammer symbol does not split as a product of two shorter ones',
    },
    'qpochhammer-vanishing-holds': {
        'description': '(q^-2k; q^2)_j vanishes for every j > k',
    },
    'qpochhammer-vanishing-fails': {
        'description': '(q^-2k; q^2)_j is nonzero for some j > k',
    },
    'tseries-rational-inverse-holds': {
        'description': 'The expansions of p/r and r/p multiply to 1 modulo the truncation order',
    },
    'tseries-rational-inverse-fails': {
        'description': 'The expansions of p/r and r/p do not multiply to 1',
    },
    'nc-mul-associativity-holds': {
        'description': 'The normal-ordered product is associative on every monomial triple up to the exponent bound',
    },
    'nc-mul-associativity-fails': {
        'description': 'The normal-ordered product is not associative on some monomial triple',
    },
    'nc-mul-unit-holds': {
        'description': '1 is a two-sided unit of the normal-ordered product',
    },
    'nc-mul-unit-fails': {
        'description': '1 is not a two-sided unit of the normal-ordered product',
    },
    'normal-order-agreement-holds': {
        'description': 'Rewriting words letter by letter agrees with the cached swap-block product',
    },
    'normal-order-agreement-fails': {
        'description': 'Rewriting a word disagrees with the cached swap-block product',
    },
    'degree-bookkeeping-holds': {
        'description': 'Products of monomials only reach exponents (a+c-r, b+d-r)',
    },
    'degree-bookkeeping-fails': {
        'description': 'A product of monomials has support outside (a+c-r, b+d-r)',
    },
    'involution-antihomomorphism-holds': {
        'description': '(fg)* = g* f* and f** = f on sampled pairs',
    },
    'involution-antihomomorphism-fails': {
        'description': 'The involution is not an involutive antihomomorphism on a sampled pair',
    },

    # calculus
    'partial-closed-forms-holds': {
        'description': 'q-number derivative formulas agree with the rewriting of differentials',
    },
    'partial-closed-forms-fails': {
        'description': 'A q-number derivative formula disagrees with the rewriting of differentials',
    },
    'leibniz-consistency-holds': {
        'description': 'Partial derivatives of products follow d(fg) = df g + f dg',
    },
    'leibniz-consistency-fails': {
        'description': 'A partial derivative of a product breaks the Leibniz rule',
    },
    'box-two-forms-holds': {
        'description': 'The left-derivative and right-derivative forms of the Laplace-Beltrami operator agree',
    },
    'box-two-forms-fails': {
        'description': 'The two forms of the Laplace-Beltrami operator disagree on a monomial',
    },
    'box-factorization-holds': {
        'description': 'box(f2(z*) f1(z)) = m0(box~(f2 (x) f1)) on pure powers and sampled polynomials',
    },
    'box-factorization-fails': {
        'description': 'box(f2(z*) f1(z)) differs from m0(box~(f2 (x) f1))',
    },
    'box-tilde-multipliers-holds': {
        'description': 'box~ commutes with holomorphic left-leg and antiholomorphic right-leg multipliers',
    },
    'box-tilde-multipliers-fails': {
        'description': 'box~ does not commute with an outer multiplier',
    },
    'box-tilde-flip-holds': {
        'description': 'box~ commutes with the flip composed with the involution on both legs',
    },
    'box-tilde-flip-fails': {
        'description': 'box~ does not commute with the flipped involution',
    },

    # star
    'pk-normalization-holds': {
        'description': 'p_0 = 1, p_1 = 1 + (1 - q^2) x, and p_k has degree k with p_k(0) = 1',
    },
    'pk-normalization-fails': {
        'description': 'A polynomial p_k has the wrong degree, constant term or low-order value',
    },
    'holomorphic-triviality-holds': {
        'description': 'Holomorphic left factors and antiholomorphic right factors pass through the star product',
    },
    'holomorphic-triviality-fails': {
        'description': 'A holomorphic or antiholomorphic outer factor changes a higher coefficient',
    },
    'm-series-associativity-holds': {
        'description': 'The product on Pol(C)_q[[t]] is associative on the monomial grid',
    },
    'm-series-associativity-fails': {
        'description': 'The product on Pol(C)_q[[t]] is not associative on some monomial triple',
    },
    'm-series-unit-holds': {
        'description': '1 is a two-sided unit of the product on Pol(C)_q[[t]]',
    },
    'm-series-unit-fails': {
        'description': '1 is not a unit of the product on Pol(C)_q[[t]]',
    },
    'series-involution-antihomomorphism-holds': {
        'description': 'm(psi1, psi2)* = m(psi2*, psi1*) on sampled pairs',
    },
    'series-involution-antihomomorphism-fails': {
        'description': 'm(psi1, psi2)* differs from m(psi2*, psi1*) on a sampled pair',
    },

    # oracle
    'q-map-homomorphism-holds': {
        'description': 'Q(f1 * f2) = I(f1) I(f2) entrywise on trusted columns for every monomial pair',
    },
    'q-map-homomorphism-fails': {
        'description': 'Q(f1 * f2) differs from I(f1) I(f2) on a trusted column',
    },
    'zhat-star-adjoint-holds': {
        'description': 'The adjoint of multiplication by z coincides with I(z*)',
    },
    'zhat-star-adjoint-fails': {
        'description': 'The adjoint of multiplication by z differs from I(z*)',
    },
    'commutation-at-t0-holds': {
        'description': 'zhat* zhat - q^2 zhat zhat* reduces to (1 - q^2) at t^0',
    },
    'commutation-at-t0-fails': {
        'description': 'zhat* zhat - q^2 zhat zhat* does not reduce to (1 - q^2) at t^0',
    },
    'covariant-symbol-round-trip-holds': {
        'description': 'The covariant symbol of I(z^j z*^k) is z^j z*^k',
    },
    'covariant-symbol-round-trip-fails': {
        'description': 'The covariant symbol of some I(z^j z*^k) is not z^j z*^k',
    },

    # berezin
    'berezin-expansion-agreement-holds': {
        'description': 'The Berezin transform of z*^j z^k expands as sum (p_n(box) - p_(n-1)(box)) f t^n',
    },
    'berezin-expansion-agreement-fails': {
        'description': 'The Berezin transform disagrees with its expansion through the box operator',
    },
    'berezin-covariance-holds': {
        'description': 'The symbol of I(z^i z*^j) I(z^k z*^l) is z^i B(z*^j z^k) z*^l',
    },
    'berezin-covariance-fails': {
        'description': 'The symbol of I(z^i z*^j) I(z^k z*^l) differs from z^i B(z*^j z^k) z*^l',
    },
    'berezin-trivial-symbols-holds': {
        'description': 'B(1) = 1, B(z^k) = z^k and B(z*^j) = z*^j',
    },
    'berezin-trivial-symbols-fails': {
        'description': 'The Berezin transform moves a purely holomorphic or antiholomorphic symbol',
    },

    # uq
    'uq-relations-holds': {
        'description': 'The defining relations of U_q sl2 hold as operators on monomials',
    },
    'uq-relations-fails': {
        'description': 'A defining relation of U_q sl2 fails on a monomial',
    },
    'uq-well-defined-holds': {
        'description': 'Every generator respects z* z = q^2 z z* + 1 - q^2',
    },
    'uq-well-defined-fails': {
        'description': 'A generator does not descend through z* z = q^2 z z* + 1 - q^2',
    },
    'uq-module-algebra-holds': {
        'description': 'g(f1 f2) = sum g(1) f1 . g(2) f2 on the generator and monomial grid',
    },
    'uq-module-algebra-fails': {
        'description': 'The action is not compatible with the product on some grid case',
    },
    'uq-box-equivariance-holds': {
        'description': 'The Laplace-Beltrami operator commutes with every generator',
    },
    'uq-box-equivariance-fails': {
        'description': 'The Laplace-Beltrami operator does not commute with a generator',
    },
    'uq-star-equivariance-holds': {
        'description': 'The star product is a morphism of U_q sl2 modules modulo the truncation order',
    },
    'uq-star-equivariance-fails': {
        'description': 'The star product is not equivariant on some grid case',
    },
    'uq-involution-compat-holds': {
        'description': '(g f)* = S(g)* f* for every generator and monomial of the grid',
    },
    'uq-involution-compat-fails': {
        'description': '(g f)* differs from S(g)* f* on some grid case',
    },
    'uq-hopf-counit-holds': {
        'description': '(eps (x) id) Delta = id = (id (x) eps) Delta on words of length at most two',
    },
    'uq-hopf-counit-fails': {
        'description': 'The counit axiom fails on a short word',
    },
    'uq-coproduct-relations-holds': {
        'description': 'Delta of every defining relation acts as zero on pairs of monomials',
    },
    'uq-coproduct-relations-fails': {
        'description': 'Delta of a defining relation acts nontrivially on a pair of monomials',
    },
}


def get_result_description(result) -> str:
    return RESULT_TABLE[result]['description']
