"""Exhaustive and sampled checks of the Monk identities and bijections."""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .decorated import Label, enumerate_decorated, mon_poly, phi_tilde_backward, phi_tilde_forward
from .grid import enumerate_bpds
from .monk import MonkError, InvariantViolation, Step, phi_backward, phi_forward
from .perm import Permutation, all_perms
from .poly import Poly, schubert_bpd, schubert_dd, to_canonical_string


@dataclass(frozen=True)
class Failure:
    pi: str
    alpha: int
    kind: str
    lhs: str
    rhs: str

    def __str__(self) -> str:
        return f"FAIL pi={self.pi} alpha={self.alpha} {self.kind}: {self.lhs} != {self.rhs}"


@dataclass
class VerifyConfig:
    n: int
    double: bool = False
    jobs: int = 1
    sample: int | None = None
    seed: int = 20211
    bijection: bool = True


@dataclass
class VerifyReport:
    n: int
    checked: int = 0
    failures: list[Failure] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def render(self) -> str:
        lines = [f"n={self.n} checked={self.checked} failures={len(self.failures)}"]
        lines += [str(f) for f in self.failures]
        return "\n".join(lines) + "\n"


def eq1_sides(pi: Permutation, alpha: int, double: bool = False, method: str = "bpd"):
    """Both sides of the rearranged Monk identity at alpha.

    Single: x_a S_pi + sum_k S_{pi t_{k,a}} = sum_l S_{pi t_{a,l}}.
    Double: the factor x_a becomes (x_a - y_{pi(a)}).
    """
    schub = schubert_bpd if method == "bpd" else schubert_dd
    n = pi.n
    targets = pi.monk_targets(alpha)
    factor = Poly.x(n, alpha)
    if double:
        factor = factor - Poly.y(n, pi(alpha))
    lhs = factor * schub(pi, double)
    for k in targets.ks:
        lhs = lhs + schub(pi.apply_t(k, alpha), double)
    rhs = Poly.zero(n)
    for l in targets.ls:
        rhs = rhs + schub(pi.apply_t(alpha, l), double)
    return lhs, rhs


def check_bijection(pi: Permutation, alpha: int, stats: dict | None = None) -> list[Failure]:
    """Run phi forward on its whole domain and back again."""
    tag = str(pi)
    out: list[Failure] = []
    targets = pi.monk_targets(alpha)
    domain = [(None, d) for d in enumerate_bpds(pi)]
    domain += [(k, d) for k in targets.ks for d in enumerate_bpds(pi.apply_t(k, alpha))]
    codomain = {e for l in targets.ls for e in enumerate_bpds(pi.apply_t(alpha, l))}
    images = []
    for k, d in domain:
        trace: list[Step] = []
        try:
            e = phi_forward(pi, alpha, d, trace)
        except (MonkError, InvariantViolation) as exc:
            out.append(Failure(tag, alpha, "forward", d.render().replace("\n", "/"), str(exc)))
            continue
        images.append(e)
        if stats is not None:
            stats["max_steps"] = max(stats.get("max_steps", 0), sum(s.primitive for s in trace))
        before, after = d.row_blank_counts(), e.row_blank_counts()
        want = list(before)
        if k is None:
            want[alpha - 1] += 1
        if list(after) != want:
            out.append(Failure(tag, alpha, "row-blanks", str(want), str(list(after))))
        try:
            back = phi_backward(pi, alpha, e)
        except (MonkError, InvariantViolation) as exc:
            out.append(Failure(tag, alpha, "backward", e.render().replace("\n", "/"), str(exc)))
            continue
        expect_kind = "shrunk" if k is None else "cover-down"
        if back.diagram != d or back.kind != expect_kind or back.index != k:
            out.append(Failure(tag, alpha, "round-trip",
                               d.render().replace("\n", "/"),
                               f"{back} {back.diagram.render().replace(chr(10), '/')}"))
    if len(set(images)) != len(images):
        out.append(Failure(tag, alpha, "injective", str(len(images)), str(len(set(images)))))
    if set(images) != codomain:
        out.append(Failure(tag, alpha, "surjective", str(len(codomain)), str(len(set(images)))))
    return out


def check_decorated_bijection(pi: Permutation, alpha: int) -> list[Failure]:
    tag = str(pi)
    out: list[Failure] = []
    n = pi.n
    targets = pi.monk_targets(alpha)
    domain = [(u, dd) for dd in enumerate_decorated(pi) for u in (Label.X, Label.NEG_Y)]
    domain += [(None, dd) for k in targets.ks for dd in enumerate_decorated(pi.apply_t(k, alpha))]
    codomain = {e for l in targets.ls for e in enumerate_decorated(pi.apply_t(alpha, l))}
    images = []
    for u, dd in domain:
        try:
            e = phi_tilde_forward(pi, alpha, dd, u)
            back = phi_tilde_backward(pi, alpha, e)
        except (MonkError, InvariantViolation) as exc:
            out.append(Failure(tag, alpha, "decorated", dd.render().replace("\n", "/"), str(exc)))
            continue
        images.append(e)
        if u is Label.X:
            factor = Poly.x(n, alpha)
        elif u is Label.NEG_Y:
            factor = -Poly.y(n, pi(alpha))
        else:
            factor = Poly.const(n, 1)
        if mon_poly(e) != factor * mon_poly(dd):
            out.append(Failure(tag, alpha, "monomial", str(factor * mon_poly(dd)), str(mon_poly(e))))
        if back.diagram != dd or back.label != u:
            out.append(Failure(tag, alpha, "decorated-round-trip",
                               dd.render().replace("\n", "/"), str(back)))
    if len(set(images)) != len(images) or set(images) != codomain:
        out.append(Failure(tag, alpha, "decorated-bijective",
                           str(len(codomain)), str(len(set(images)))))
    return out


def run_case(args) -> tuple[int, list[Failure]]:
    values, alpha, double, bijection = args
    pi = Permutation(values)
    failures = []
    lhs, rhs = eq1_sides(pi, alpha, False)
    if lhs != rhs:
        failures.append(Failure(str(pi), alpha, "eq1", to_canonical_string(lhs), to_canonical_string(rhs)))
    checked = 1
    if double:
        checked += 1
        lhs, rhs = eq1_sides(pi, alpha, True)
        if lhs != rhs:
            failures.append(Failure(str(pi), alpha, "eq2", to_canonical_string(lhs), to_canonical_string(rhs)))
        dd_lhs, dd_rhs = eq1_sides(pi, alpha, True, method="dd")
        if dd_lhs != lhs or dd_rhs != rhs:
            failures.append(Failure(str(pi), alpha, "eq2-oracle",
                                    to_canonical_string(dd_lhs), to_canonical_string(lhs)))
    if bijection:
        failures += check_bijection(pi, alpha)
        if double:
            failures += check_decorated_bijection(pi, alpha)
    return checked, failures


def cases(config: VerifyConfig) -> list[tuple[Permutation, int]]:
    n = config.n
    if config.sample is not None:
        rng = random.Random(config.seed)
        perms = []
        for _ in range(config.sample):
            vals = list(range(1, n + 1))
            rng.shuffle(vals)
            perms.append(Permutation(tuple(vals)))
    else:
        perms = all_perms(n)
    return [
        (pi, alpha) for pi in perms for alpha in range(1, n)
        if pi.monk_targets(alpha).precondition
    ]


def run_verify(config: VerifyConfig) -> VerifyReport:
    start = time.perf_counter()
    report = VerifyReport(config.n)
    work = [(pi.values, a, config.double, config.bijection) for pi, a in cases(config)]
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(run_case, work, chunksize=max(1, len(work) // (4 * config.jobs))))
    else:
        results = [run_case(w) for w in work]
    for checked, failures in results:
        report.checked += checked
        report.failures.extend(failures)
    report.wall_time = time.perf_counter() - start
    return report
