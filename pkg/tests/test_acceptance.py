"""Acceptance criteria, one test each.

Every test prints a single ``[criterion N] PASS|FAIL ...`` line to the
terminal (outside pytest's capture) so the run log doubles as a report.
"""

import random

import pytest

from bpdmonk.decorated import Label, enumerate_decorated, phi_tilde_backward, phi_tilde_forward
from bpdmonk.grid import enumerate_bpds, validate
from bpdmonk.monk import phi_backward, phi_forward
from bpdmonk.perm import all_perms, parse_perm
from bpdmonk.poly import schubert_bpd, schubert_dd
from bpdmonk.verify import check_bijection, check_decorated_bijection, eq1_sides

from conftest import monk_cases
from oracles import all_valid_tilings_bruteforce, all_valid_tilings_by_cuts

SEED = 20211


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n[criterion {number}] {'PASS' if ok else 'FAIL'} {detail}")
    return emit


def test_criterion_1_oracle_equality(report):
    bad = [(str(pi), double) for n in range(1, 6) for pi in all_perms(n)
           for double in (False, True) if schubert_bpd(pi, double) != schubert_dd(pi, double)]
    report(1, not bad, f"BPD sum vs divided differences, S_1..S_5, single+double, mismatches={len(bad)}")
    assert not bad


@pytest.mark.parametrize("double", [False, True], ids=["eq1", "eq2"])
def test_criteria_2_3_monk_identities(report, double):
    checked, bad = 0, []
    for n in range(1, 6):
        for pi, alpha in monk_cases(n):
            lhs, rhs = eq1_sides(pi, alpha, double)
            checked += 1
            if lhs != rhs:
                bad.append((str(pi), alpha))
    label = "double Monk identity" if double else "single Monk identity"
    report(3 if double else 2, not bad, f"{label}, n<=5, cases={checked}, failures={len(bad)}")
    assert not bad


def test_criterion_4_bijectivity(report):
    failures = []
    full = monk_cases(4) + monk_cases(5)
    for pi, alpha in full:
        failures += check_bijection(pi, alpha)
    # S_5 has fewer than 500 valid pairs, so the sample draws with replacement
    rng = random.Random(SEED)
    sample = rng.choices(monk_cases(5), k=500)
    for pi, alpha in sample:
        failures += check_bijection(pi, alpha)
    report(4, not failures,
           f"phi bijection + inverse + row blanks, S_4 all, S_5 all {len(monk_cases(5))} pairs "
           f"and 500 seeded draws, failures={len(failures)}")
    assert not failures, "\n".join(map(str, failures[:10]))


def test_criterion_5_decorated(report):
    failures = []
    for pi, alpha in monk_cases(4):
        failures += check_decorated_bijection(pi, alpha)
    report(5, not failures, f"decorated bijection and monomial contract on S_4, failures={len(failures)}")
    assert not failures, "\n".join(map(str, failures[:10]))


def _trace_problems(trace, n, grows):
    moves = [s for s in trace if s.primitive]
    problems = []
    if len(moves) > n * n:
        problems.append(f"{len(moves)} steps")
    areas = [s.area for s in moves]
    for a, b in zip(areas, areas[1:]):
        if (b <= a) if grows else (b >= a):
            problems.append(f"area {a}->{b}")
    return problems


def test_criterion_6_termination(report):
    bad, runs, longest = [], 0, 0
    for n in (4, 5):
        for pi, alpha in monk_cases(n):
            t = pi.monk_targets(alpha)
            domain = list(enumerate_bpds(pi))
            domain += [d for k in t.ks for d in enumerate_bpds(pi.apply_t(k, alpha))]
            for d in domain:
                fwd, bwd = [], []
                e = phi_forward(pi, alpha, d, fwd)
                phi_backward(pi, alpha, e, bwd)
                bad += _trace_problems(fwd, n, grows=False) + _trace_problems(bwd, n, grows=True)
                longest = max(longest, sum(s.primitive for s in fwd))
                runs += 2
    for pi, alpha in monk_cases(4):
        for dd in enumerate_decorated(pi):
            for u in (Label.X, Label.NEG_Y):
                fwd, bwd = [], []
                e = phi_tilde_forward(pi, alpha, dd, u, fwd)
                phi_tilde_backward(pi, alpha, e, bwd)
                bad += _trace_problems(fwd, 4, grows=False) + _trace_problems(bwd, 4, grows=True)
                runs += 2
    report(6, not bad, f"runs={runs}, longest forward run={longest} steps, "
                       f"bound or monotonicity violations={len(bad)}")
    assert not bad


def test_criterion_7_structure(report):
    bad = []
    for n in range(1, 6):
        for pi in all_perms(n):
            for d in enumerate_bpds(pi):
                if len(d.blanks()) != pi.length() or len(d.crosses()) != pi.length():
                    bad.append(("counts", str(pi)))
    for n in range(1, 5):
        ours = {d.rows for pi in all_perms(n) for d in enumerate_bpds(pi)}
        oracle = all_valid_tilings_by_cuts(n)
        if n <= 3:
            if all_valid_tilings_bruteforce(n) != oracle:
                bad.append(("oracles disagree", n))
        if ours != oracle:
            bad.append(("enumeration", n))
    report(7, not bad, f"blank/cross counts n<=5 and enumeration vs brute force n<=4, problems={len(bad)}")
    assert not bad


def test_criterion_8_worked_example(report):
    pi = parse_perm("1 2")
    identity = validate(["r-", "|r"])
    out = phi_forward(pi, 1, identity)
    back = phi_backward(pi, 1, out)
    ok = (identity.render() == "2\nr-\n|r\n" and out.render() == "2\n.r\nr+\n"
          and back.kind == "shrunk" and back.diagram.render() == "2\nr-\n|r\n")
    report(8, ok, "S_2 forward and inverse diagrams byte-exact")
    assert ok


def test_criterion_9_transition_cotransition(report):
    not_single = []
    cover_down = []
    transitions = cotransitions = 0
    for n in range(2, 5):
        for pi, alpha in monk_cases(n):
            t = pi.monk_targets(alpha)
            if len(t.ls) == 1:
                assert t.is_transition
                transitions += 1
                for d in enumerate_bpds(pi):
                    trace = []
                    phi_forward(pi, alpha, d, trace)
                    if [s.op for s in trace] != ["droop", "cross"]:
                        not_single.append((str(pi), alpha, d.render().replace("\n", "/"),
                                           "; ".join(map(str, trace))))
            if not t.ks:
                assert t.is_cotransition
                cotransitions += 1
                for l in t.ls:
                    for e in enumerate_bpds(pi.apply_t(alpha, l)):
                        if phi_backward(pi, alpha, e).kind == "cover-down":
                            cover_down.append((str(pi), alpha))
    ok = not not_single and not cover_down
    detail = (f"transitions={transitions} cotransitions={cotransitions}; "
              f"transition runs that are not one droop + cross={len(not_single)}; "
              f"cotransition cover-downs={len(cover_down)}")
    if not_single:
        pi, alpha, d, trace = not_single[0]
        detail += f"; first: pi={pi} alpha={alpha} D={d} trace: {trace}"
    report(9, ok, detail)
    assert not cover_down
    assert not not_single, detail
