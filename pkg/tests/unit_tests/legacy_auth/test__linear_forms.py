import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scramble_attack.errors import InvalidParametersError
from scramble_attack.legacy_auth.linear_forms import all_linear_forms, linear_coefficients
from scramble_attack.legacy_auth.prng import ScrambleParams
from scramble_attack.legacy_auth.scramble import forward_digits

ENGINE = ScrambleParams()


def test__first_forms():
    first, second = linear_coefficients(1, ENGINE), linear_coefficients(2, ENGINE)
    assert (first.alpha, first.beta, first.gamma) == (3, 1, 0)
    assert (second.alpha, second.beta, second.gamma) == (12, 5, 1)


def test__late_forms():
    ninth, tenth = linear_coefficients(9, ENGINE), linear_coefficients(10, ENGINE)
    assert (ninth.alpha, ninth.beta, ninth.gamma) == (322863, 140206, 42450)
    assert (tenth.alpha, tenth.beta, tenth.gamma) == (1389207, 603275, 182656)


def test__wrap_bounds():
    assert linear_coefficients(1, ENGINE).delta_max == 16
    assert linear_coefficients(2, ENGINE).delta_max == 68


def test__slopes_converge():
    slopes = [form.slope_digits() for form in all_linear_forms(ENGINE)[:8]]
    assert slopes == ["3", "2.4", "2.3181", "2.3052", "2.3031", "2.3028", "2.3027", "2.3027"]


def test__one_form_per_round_plus_the_mask_digit():
    assert [form.index for form in all_linear_forms(ENGINE)] == list(range(1, 10))


def test__step_index_starts_at_one():
    with pytest.raises(InvalidParametersError):
        linear_coefficients(0, ENGINE)


@settings(max_examples=1000)
@given(st.integers(0, 2**32 - 1), st.integers(0, 2**32 - 1))
def test__forms_reproduce_the_generator_digits(x: int, y: int):
    digits = forward_digits(x, y, ENGINE)
    for form, digit in zip(all_linear_forms(ENGINE), digits, strict=True):
        assert form.digit(x, y, ENGINE) == digit
        assert 0 <= form.value(x, y, ENGINE) // ENGINE.n <= form.delta_max
