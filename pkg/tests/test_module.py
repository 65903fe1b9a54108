import pytest

from lcreg.algebra.bipoly import bipoly_power, generic_form
from lcreg.algebra.parser import parse_bipoly
from lcreg.cohomology.components import top_hilbert
from lcreg.groebner.buchberger import reduce_vector, s_vector
from lcreg.groebner.ideal import ideal_gb
from lcreg.groebner.module import column_vectors, initial_decomposition, module_gb
from lcreg.presentation.presentation import build_presentation
from lcreg.verification.macaulay import summed_quotient_hilbert

FORMS = [
    ("x1*y1 + x2*y2", 2, 2, 1, -4),
    ("x1*y1 + x2*y2", 2, 2, 2, -3),
    ("x1^2*y1 + x2^2*y2", 2, 2, 1, -3),
    ("x1*y1^2 + x2*y1*y2 + x3*y2^2", 3, 2, 1, -3),
    ("x1*y1^2 + x2*y1*y2 + x3*y2^2", 3, 2, 1, -4),
]


def test_columns_reduce_to_zero(qq):
    p = build_presentation(generic_form(2, 2, qq), -4)
    gb = module_gb(p)

    for column in column_vectors(p):
        assert reduce_vector(column, gb.elements, gb.order).is_zero()


def test_basis_is_monic_and_sorted(f_lambda):
    gb = module_gb(build_presentation(bipoly_power(f_lambda, 2), -4))

    leads = gb.leads()
    assert leads == sorted(leads, key=gb.order.key, reverse=True)
    for element in gb.elements:
        position, mono = element.lead(gb.order)
        assert element.coordinate(position).coefficient(mono) == 1


def test_lambda_form_initial_ideals(f_lambda):
    decomposition = initial_decomposition(build_presentation(f_lambda, -4))

    assert len(decomposition) == 3
    assert decomposition[(2, 0)].labels() == ["x1", "x2"]
    assert decomposition[(1, 1)].labels() == ["x1^2", "x2"]


def test_initial_ideals_shift_along_z1(f_lambda):
    previous = initial_decomposition(build_presentation(f_lambda, -3))
    current = initial_decomposition(build_presentation(f_lambda, -4))

    for u, ideal in previous:
        assert current[(u[0] + 1, *u[1:])].basis == ideal.basis


def test_ideal_generated_at_a_position_matches_leads(qq):
    p = build_presentation(generic_form(2, 2, qq), -3)
    gb = module_gb(p)

    decomposition = initial_decomposition(p)

    for position, (u, ideal) in enumerate(decomposition):
        coordinates = [e.coordinate(position) for e in gb.with_lead_position(position)]
        assert ideal.basis == ideal_gb(coordinates, field=qq, nvars=p.m).basis


@pytest.mark.parametrize("g_text,m,n,r,j", FORMS)
def test_s_vectors_reduce_to_zero(qq, g_text, m, n, r, j):
    g = bipoly_power(parse_bipoly(g_text, m, n, qq), r)
    gb = module_gb(build_presentation(g, j))

    for a_index, a in enumerate(gb.elements):
        for b in gb.elements[a_index + 1 :]:
            if a.lead(gb.order)[0] != b.lead(gb.order)[0]:
                continue
            assert reduce_vector(s_vector(a, b, gb.order), gb.elements, gb.order).is_zero()


@pytest.mark.parametrize("g_text,m,n,r,j", FORMS)
def test_initial_ideals_carry_the_top_hilbert_function(qq, g_text, m, n, r, j):
    p = build_presentation(bipoly_power(parse_bipoly(g_text, m, n, qq), r), j)

    summed = summed_quotient_hilbert(initial_decomposition(p), 60)

    assert summed.values == top_hilbert(p, 60).values
    assert summed.finite_length
