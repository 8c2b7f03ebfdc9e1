from qdisc.algebra.qpoly import NCPoly
from qdisc.algebra.uqsl2 import (GENERATORS, check_box_equivariance, check_coproduct_relations, check_hopf_counit,
                                 check_involution_compat, check_module_algebra, check_relations,
                                 check_star_equivariance, check_well_defined, words_up_to)
from qdisc.verifier.decorators import verified_law
from qdisc.verifier.utils import finish, monomials_by_degree, new_output, record


# The star-equivariance grid is only run through t^2
STAR_EQUIVARIANCE_ORDER = 2


@verified_law('uq', 'EF-FE=(K-K^{-1})/(q-q^{-1})')
def uq_relations(params: dict, expectation='uq-relations-holds') -> dict:
    output = new_output(expectation)

    for f in monomials_by_degree(4):
        for relation, ok in check_relations(f).items():
            record(output, ok, {'relation': relation, 'f': f})

    return finish(output)


@verified_law('uq', 'z^*z=q^2zz^*+1-q^2')
def uq_well_defined(params: dict, expectation='uq-well-defined-holds') -> dict:
    output = new_output(expectation)

    for g in GENERATORS:
        record(output, check_well_defined(g), {'g': g})

    return finish(output)


@verified_law('uq', '\\Delta(E)=E \\otimes 1+K \\otimes E')
def uq_module_algebra(params: dict, expectation='uq-module-algebra-holds') -> dict:
    output = new_output(expectation)
    grid = monomials_by_degree(params['max_degree'])

    for g in GENERATORS:
        for f1 in grid:
            for f2 in grid:
                record(output, check_module_algebra(g, f1, f2), {'g': g, 'f1': f1, 'f2': f2})

    return finish(output)


@verified_law('uq', '\\xi\\square f=\\square\\xi f')
def uq_box_equivariance(params: dict, expectation='uq-box-equivariance-holds') -> dict:
    output = new_output(expectation)
    cases = monomials_by_degree(params['max_degree']) + [NCPoly.zs() * NCPoly.z()]

    for g in GENERATORS:
        for f in cases:
            record(output, check_box_equivariance(g, f), {'g': g, 'f': f})

    return finish(output)


@verified_law('uq', '\\xi(f_1*f_2)=\\sum\\xi_{(1)}f_1*\\xi_{(2)}f_2')
def uq_star_equivariance(params: dict, expectation='uq-star-equivariance-holds') -> dict:
    output = new_output(expectation)
    order = min(params['order'], STAR_EQUIVARIANCE_ORDER)
    grid = monomials_by_degree(params['max_degree'])

    for g in GENERATORS:
        for f1 in grid:
            for f2 in grid:
                record(output, check_star_equivariance(g, f1, f2, order), {'g': g, 'f1': f1, 'f2': f2})

    return finish(output)


@verified_law('uq', '(\\xi f)^*=(S(\\xi))^*f^*')
def uq_involution_compat(params: dict, expectation='uq-involution-compat-holds') -> dict:
    output = new_output(expectation)

    for g in GENERATORS:
        for f in monomials_by_degree(params['max_degree']):
            record(output, check_involution_compat(g, f), {'g': g, 'f': f})

    return finish(output)


@verified_law('uq', '\\Delta(K^{\\pm 1})=K^{\\pm 1}\\otimes K^{\\pm 1}')
def uq_hopf_counit(params: dict, expectation='uq-hopf-counit-holds') -> dict:
    output = new_output(expectation)

    for word in words_up_to(2):
        record(output, check_hopf_counit(word), {'word': word})

    return finish(output)


@verified_law('uq', 'KK^{-1}=K^{-1}K=1')
def uq_coproduct_relations(params: dict, expectation='uq-coproduct-relations-holds') -> dict:
    output = new_output(expectation)
    grid = monomials_by_degree(min(params['max_degree'], 2))

    for f1 in grid:
        for f2 in grid:
            for relation, ok in check_coproduct_relations(f1, f2).items():
                record(output, ok, {'relation': relation, 'f1': f1, 'f2': f2})

    return finish(output)
