import pytest
from hypothesis import given, settings, strategies as st

from bpdmonk.decorated import (
    DecoratedBpd, Label, decorate, enumerate_decorated, mon, mon_poly,
    phi_tilde_backward, phi_tilde_forward, resolve_at_j_dec, resolve_at_r_dec,
)
from bpdmonk.grid import enumerate_bpds
from bpdmonk.monk import MonkError, phi_forward
from bpdmonk.perm import all_perms, parse_perm
from bpdmonk.poly import Monomial, Poly, schubert_bpd

from conftest import monk_cases

X, Y = Label.X, Label.NEG_Y
PI12 = parse_perm("1 2")


def labelled_domain(pi, alpha):
    t = pi.monk_targets(alpha)
    for dd in enumerate_decorated(pi):
        yield X, dd
        yield Y, dd
    for k in t.ks:
        for dd in enumerate_decorated(pi.apply_t(k, alpha)):
            yield None, dd


def test_mon_examples(bpd21):
    assert mon(decorate(bpd21, "x")) == (1, Monomial((1, 0), (0, 0)))
    assert mon(decorate(bpd21, "y")) == (-1, Monomial((0, 0), (1, 0)))
    assert mon_poly(decorate(bpd21, "y")) == -Poly.y(2, 1)


def test_labels_must_cover_blanks(bpd21, identity2):
    with pytest.raises(ValueError):
        decorate(identity2, "x")
    with pytest.raises(ValueError):
        DecoratedBpd.from_mapping(bpd21, {})


@pytest.mark.parametrize("pi", all_perms(4), ids=str)
def test_decorations_sum_to_double_schubert(pi):
    total = Poly.zero(4)
    for dd in enumerate_decorated(pi):
        total = total + mon_poly(dd)
    assert total == schubert_bpd(pi, double=True)


def test_render_uses_labels(bpd21):
    assert decorate(bpd21, "y").render() == "2\nyr\nr+\n"


@pytest.mark.parametrize("u", [X, Y])
def test_resolve_at_r_dec_example(identity2, bpd21, u):
    out = resolve_at_r_dec(DecoratedBpd(identity2, ()), 1, 1, u)
    assert out == decorate(bpd21, u.value)
    with pytest.raises(MonkError):
        resolve_at_r_dec(DecoratedBpd(identity2, ()), 1, 1, None)


@pytest.mark.parametrize("u", [X, Y])
def test_resolve_at_j_dec_example(identity2, almost21, u):
    outcome = resolve_at_j_dec(decorate(almost21, u.value), 2, 2)
    assert outcome.kind == "shrunk" and outcome.label == u
    assert outcome.diagram == DecoratedBpd(identity2, ())


@pytest.mark.parametrize("u", [X, Y])
def test_phi_tilde_examples(identity2, bpd21, u):
    e = phi_tilde_forward(PI12, 1, DecoratedBpd(identity2, ()), u)
    assert e == decorate(bpd21, u.value)
    factor = Poly.x(2, 1) if u is X else -Poly.y(2, 1)
    assert mon_poly(e) == factor
    back = phi_tilde_backward(PI12, 1, e)
    assert back.preimage == (u, DecoratedBpd(identity2, ()))
    assert str(back) == f"shrunk {u.value}"


def test_phi_tilde_requires_label_iff_readout_pi(identity2):
    with pytest.raises(MonkError):
        phi_tilde_forward(PI12, 1, DecoratedBpd(identity2, ()))


@pytest.mark.parametrize("pi,alpha", monk_cases(4), ids=str)
def test_decorated_bijection_s4(pi, alpha):
    t = pi.monk_targets(alpha)
    codomain = {e for l in t.ls for e in enumerate_decorated(pi.apply_t(alpha, l))}
    images = []
    for u, dd in labelled_domain(pi, alpha):
        e = phi_tilde_forward(pi, alpha, dd, u)
        images.append(e)
        factor = {X: Poly.x(4, alpha), Y: -Poly.y(4, pi(alpha)), None: Poly.const(4, 1)}[u]
        assert mon_poly(e) == factor * mon_poly(dd)
        # labels are conserved, plus u
        before = sorted(dd.labels + ((u,) if u else ()))
        assert sorted(e.labels) == before
        back = phi_tilde_backward(pi, alpha, e)
        if u is None:
            assert back.kind == "cover-down" and back.diagram == dd
        else:
            assert back.preimage == (u, dd)
    assert len(images) == len(set(images)) == len(codomain)
    assert set(images) == codomain
    n_dom = 2 * len(enumerate_decorated(pi)) + sum(
        len(enumerate_decorated(pi.apply_t(k, alpha))) for k in t.ks)
    assert n_dom == len(codomain)


def test_neg_y_shrink_happens_in_column_pi_alpha():
    seen = 0
    for pi, alpha in monk_cases(4):
        for dd in enumerate_decorated(pi):
            trace = []
            e = phi_tilde_forward(pi, alpha, dd, Y)
            back = phi_tilde_backward(pi, alpha, e, trace)
            assert back.label is Y
            last = trace[-1]
            assert last.op == "shrink-column" and last.src[1] == pi(alpha)
            seen += 1
    assert seen > 0


def test_all_x_labels_reduce_to_plain_phi():
    for pi, alpha in monk_cases(4):
        t = pi.monk_targets(alpha)
        plain = [(X, d) for d in enumerate_bpds(pi)]
        plain += [(None, d) for k in t.ks for d in enumerate_bpds(pi.apply_t(k, alpha))]
        for u, d in plain:
            dd = decorate(d, "x" * len(d.blanks()))
            e = phi_tilde_forward(pi, alpha, dd, u)
            assert e.erase() == phi_forward(pi, alpha, d)
            assert set(e.labels) <= {X}


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_random_decorations_round_trip_s5(data):
    pi, alpha = data.draw(st.sampled_from(monk_cases(5)))
    t = pi.monk_targets(alpha)
    u = data.draw(st.sampled_from([X, Y, None] if t.ks else [X, Y]))
    source = pi if u is not None else pi.apply_t(data.draw(st.sampled_from(t.ks)), alpha)
    d = data.draw(st.sampled_from(enumerate_bpds(source)))
    labels = data.draw(st.lists(st.sampled_from([X, Y]),
                                min_size=len(d.blanks()), max_size=len(d.blanks())))
    dd = DecoratedBpd(d, tuple(labels))
    back = phi_tilde_backward(pi, alpha, phi_tilde_forward(pi, alpha, dd, u))
    if u is None:
        assert back.diagram == dd
    else:
        assert back.preimage == (u, dd)
