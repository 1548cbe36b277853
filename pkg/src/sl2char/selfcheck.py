"""Randomized property suites over the whole library."""
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import XYZ, Rat, derive
from .cohomology import cocycle_eval, tangent_cocycles
from .errors import DegenerateError
from .fibered import specialized_rep, specialized_tangents
from .saito import mat_inv2, reconstruct, tautological_rep, tautological_system
from .skein import check_quadratic_tangent, delta, trace_polynomial
from .torsion import boundary_torsion, handlebody_torsion
from .words import Word, word_inv, word_mul

DEFAULT_COUNTS = {
    "trace-relation": 200,
    "reconstruction": 100,
    "cocycle": 100,
    "quadratic-tangent": 50,
    "sign-stability": 10,
    "specialization": 20,
}


@dataclass
class SuiteResult:
    name: str
    total: int
    passed: int = 0
    counterexample: str = None

    @property
    def ok(self):
        return self.counterexample is None and self.passed == self.total


def random_word(rng, max_len, gens=("a", "b")):
    n = rng.randint(0, max_len)
    return Word([(rng.randrange(len(gens)), rng.choice((1, -1))) for _ in range(n)], gens)


def _run(name, total, trial):
    res = SuiteResult(name, total)
    for k in range(total):
        bad = trial(k)
        if bad is not None:
            res.counterexample = bad
            return res
        res.passed += 1
    return res


def suite_trace_relation(rng, total, max_len):
    def trial(_):
        u, v = random_word(rng, max_len), random_word(rng, max_len)
        lhs = trace_polynomial(word_mul(u, v)) + trace_polynomial(word_mul(u, word_inv(v)))
        rhs = trace_polynomial(u) * trace_polynomial(v)
        if lhs != rhs:
            return f"u={u} v={v}: tr(uv)+tr(uV) = {lhs} but tr(u)tr(v) = {rhs}"
        return None
    return _run("trace-relation", total, trial)


def suite_reconstruction(rng, total, max_len):
    sys = tautological_system() if total else None
    rho = tautological_rep()

    def trial(_):
        w = random_word(rng, max_len)
        R, P = reconstruct(sys, w), rho(w)
        if R != P:
            return f"w={w}: reconstruction {R} differs from product {P}"
        if R.trace() != trace_polynomial(w):
            return f"w={w}: trace {R.trace()} differs from {trace_polynomial(w)}"
        return None
    return _run("reconstruction", total, trial)


def suite_cocycle(rng, total, max_len):
    rho = tautological_rep()
    psis = tangent_cocycles(rho) if total else []

    def trial(_):
        u, v = random_word(rng, max_len // 2), random_word(rng, max_len // 2)
        w = word_mul(u, v)
        Rw = rho(w)
        for name, psi in zip(XYZ, psis):
            lhs = cocycle_eval(psi, rho, w)
            rv = rho(v)
            split = mat_inv2(rv) * cocycle_eval(psi, rho, u) * rv + cocycle_eval(psi, rho, v)
            direct = mat_inv2(Rw) * derive(Rw, name)
            if lhs != split or lhs != direct:
                return f"psi_{name} on u={u} v={v}: {lhs} vs split {split} vs direct {direct}"
        return None
    return _run("cocycle", total, trial)


def suite_quadratic(rng, total, max_len):
    def trial(_):
        p, q = rng.randint(-3, 3), rng.randint(-3, 3)
        r, s = rng.randint(-3, 3), rng.randint(-3, 3)

        def psi(w):
            lam = p * w.exponent_sum(0) + q * w.exponent_sum(1)
            mu = r * w.exponent_sum(0) + s * w.exponent_sum(1)
            return lam * mu
        g, d = random_word(rng, max_len), random_word(rng, max_len)
        if not check_quadratic_tangent(psi, [(g, d)]):
            return f"lambda=({p},{q}) mu=({r},{s}) g={g} d={d}"
        return None
    return _run("quadratic-tangent", total, trial)


def suite_sign_stability(rng, total, max_len):
    rho = tautological_rep()
    ref_f = handlebody_torsion(rho) if total else None
    ref_g = boundary_torsion(rho) if total else None

    def trial(_):
        f = handlebody_torsion(rho, rng=rng, permute=True)
        g = boundary_torsion(rho, rng=rng)
        if f != ref_f and f != -ref_f:
            return f"handlebody torsion {f} vs {ref_f}"
        if g != ref_g and g != -ref_g:
            return f"boundary torsion {g} vs {ref_g}"
        return None
    return _run("sign-stability", total, trial)


def random_point(rng):
    def q():
        return Rat(Fraction(rng.randint(-9, 9), rng.randint(1, 5)))
    while True:
        pt = {v: q() for v in XYZ}
        if delta("a", "b").evaluate(pt) and pt["z"] ** 2 != 4 and all(
                pt[v] ** 2 != 4 for v in XYZ):
            return pt


def suite_specialization(rng, total, max_len):
    rho = tautological_rep()
    f = handlebody_torsion(rho) if total else None
    g = boundary_torsion(rho) if total else None

    def trial(_):
        for _attempt in range(20):
            pt = random_point(rng)
            try:
                rho_pt, _, u0 = specialized_rep(pt)
                fp = handlebody_torsion(rho_pt, tangents=specialized_tangents(pt, u0))
                gp = boundary_torsion(rho_pt)
            except DegenerateError:
                continue
            fv, gv = _value(f, pt), _value(g, pt)
            if _value(fp, pt) != fv or _value(gp, pt) != gv:
                return f"point {pt}: specialized ({fp}, {gp}) vs generic ({fv}, {gv})"
            return None
        return None
    return _run("specialization", total, trial)


def _value(v, pt):
    from .algebra import QuadExt, is_rat
    if isinstance(v, QuadExt):
        if not v.is_rational():
            raise AssertionError(f"u-component in {v}")
        v = v.a
    return v if is_rat(v) else v.evaluate(pt)


SUITES = [
    ("trace-relation", suite_trace_relation),
    ("reconstruction", suite_reconstruction),
    ("cocycle", suite_cocycle),
    ("quadratic-tangent", suite_quadratic),
    ("sign-stability", suite_sign_stability),
    ("specialization", suite_specialization),
]


def run_selfcheck(seed=1, max_len=12, trials=None):
    """Run every suite; ``trials`` overrides the per-suite counts."""
    results = []
    for name, fn in SUITES:
        total = DEFAULT_COUNTS[name] if trials is None else trials
        rng = random.Random(f"{seed}:{name}")
        results.append(fn(rng, total, max_len))
    return results
