from extremes.syntax import Var
from extremes.transforms import (
    C, ID, Compose, IntersectWith, Law, UnionWith, apply, maps_to, parameters, power, preserves,
    transform_equal,
)
from extremes.verdict import Status

A, B = Var("A"), Var("B")


def test_power():
    assert power(C, 0) == ID
    assert power(C, 3) == Compose(C, Compose(C, C))
    assert transform_equal(power(C, 4), ID).holds
    assert not transform_equal(power(C, 3), ID).holds


def test_complement_does_not_preserve_union():
    v = preserves(C, Law.UNION)
    assert v.status is Status.INVALID
    assert v.witness.describe().startswith("X=0, Y=1")


def test_union_with_does_not_distribute_over_intersection_into_union():
    assert not maps_to(UnionWith(A), Law.INTER, Law.UNION).holds
    assert preserves(UnionWith(A), Law.INTER).holds


def test_fresh_variable_avoids_parameters():
    t = IntersectWith(Var("X"))
    assert parameters(t) == {"X"}
    assert transform_equal(t @ t, t).holds
    assert not transform_equal(t, ID).holds


def test_apply_and_str():
    t = IntersectWith(A) @ UnionWith(~B)
    assert str(t) == "i_(A) o u_(B')"
    assert apply(t, Var("X")) == (A & (~B | Var("X")))
