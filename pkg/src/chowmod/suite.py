"""Invariant suites run from the command line; every check becomes a report entry."""
from __future__ import annotations

import itertools
import random
import time

from .algebra import GF, QQ, Poly
from .algebra.linalg import sylvester_resultant
from .algebra.poly import resultant

SCOPES = ("witt", "divisors", "cubical", "cycles", "chow")


class _Recorder:
    def __init__(self, scope: str):
        self.scope = scope
        self.entries = []

    def __call__(self, name: str, identity: str, fn):
        start = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed check, not a crashed suite
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        self.entries.append({
            "scope": self.scope,
            "name": name,
            "identity": identity,
            "status": "pass" if ok else "fail",
            "detail": detail,
            "seconds": round(time.perf_counter() - start, 3),
        })


def _witt(rec: _Recorder):
    from .witt import WittVector, additive_order, selftest, star_generators

    for F, m in ((QQ, 8), (GF(2), 8), (GF(3), 9), (GF(5), 5)):
        def run(F=F, m=m):
            res = selftest(F, m, trials=20)
            bad = [c["name"] for c in res["checks"] if c["status"] != "pass"]
            return not bad, f"{len(res['checks'])} checks, failing: {bad}"
        rec(f"selftest {F!r} m={m}", "ring axioms, ghost map, p-torsion", run)

    def generator_law():
        for F in (GF(2), GF(3), GF(5)):
            for a, b in itertools.product(list(F.elements()), repeat=2):
                lhs = star_generators(WittVector.teichmuller(F, 6, a), WittVector.teichmuller(F, 6, b))
                if lhs != WittVector.teichmuller(F, 6, F.mul(a, b)):
                    return False, f"{F!r}: a={a}, b={b}"
        return True, "exhaustive over F2, F3, F5 at m=6"
    rec("generator law", "(1-au)*(1-bu) = 1-abu", generator_law)

    def unit_order():
        out = []
        for p, k in ((2, 1), (2, 2), (3, 1)):
            n = p**k
            order = additive_order(WittVector.one(GF(p), n))
            out.append(order == p ** (k + 1))
        return all(out), "order of 1-u in W_{p^k}(F_p) is p^(k+1)"
    rec("order of the unit", "p^(k+1) W_{p^k}(F_p) = 0", unit_order)


def _divisors(rec: _Recorder):
    from .divisors import div_witt, mult_convolution
    from .witt import star_polynomials

    def convolution():
        rng = random.Random(1)
        for i in range(200):
            F = GF(2) if i % 2 == 0 else GF(3)
            f = Poly(F, [F.one] + [F.random_element(rng) for _ in range(rng.randint(1, 4))])
            g = Poly(F, [F.one] + [F.random_element(rng) for _ in range(rng.randint(1, 4))])
            if div_witt(star_polynomials(f, g)) != mult_convolution(div_witt(f), div_witt(g)):
                return False, f"f={f.format()}, g={g.format()} over {F!r}"
        return True, "200 random pairs over F2 and F3"
    rec("div is multiplicative", "div(f*g) = conv(div f, div g)", convolution)

    def resultants():
        rng = random.Random(2)
        for _ in range(100):
            F = rng.choice([GF(2), GF(3), GF(7), QQ])
            p = Poly(F, [F.random_element(rng) for _ in range(rng.randint(2, 6))])
            q = Poly(F, [F.random_element(rng) for _ in range(rng.randint(2, 6))])
            if p.degree < 1 or q.degree < 1:
                continue
            if resultant(p, q) != sylvester_resultant(p, q):
                return False, f"p={p.format()}, q={q.format()}"
        return True, "Euclidean and Sylvester resultants agree"
    rec("resultant", "Res(p, q) two ways", resultants)


def _cubical(rec: _Recorder):
    from .cubical import random_instance, verify_instance

    def instances():
        rng = random.Random(3)
        for i in range(20):
            failures = verify_instance(random_instance(rng), rng)
            if failures:
                return False, f"instance {i}: {failures}"
        return True, "20 random cubical groups"
    rec("cubical engine", "d^2 = 0, A = reduced + degenerate, H(full) = H(reduced) + H(degenerate)", instances)


def _cycles(rec: _Recorder):
    from .cycles import boundary, check_faces, check_modulus, generic_translation_H, homotopy_chain_tilde, verify_phi_homotopy
    from .cycles.corpus import phi_corpus, tilde_corpus, translation_corpus

    def phi():
        for V in phi_corpus():
            if not verify_phi_homotopy(V).ok:
                return False, V.format()
        return True, "20 curves"
    rec("phi homotopy", "d Phi + Phi d = i_1^* - i_0^*", phi)

    def endpoints():
        for Z, f in tilde_corpus(20):
            _, rep = homotopy_chain_tilde(Z, f)
            if not rep.ok:
                return False, f"Z={Z.format()}, f={f.format()}"
        return True, "20 pairs (Z, f)"
    rec("endpoint identities", "i_0^* = deg f pr^*(i_0^* Z), i_1^* = div(f) Z", endpoints)

    def containment():
        count = 0
        for V in phi_corpus():
            if V.q >= 1 and check_faces(V) and check_modulus(V).passed:
                dV = boundary(V)
                count += len(dV.terms)
                if not check_modulus(dV).passed:
                    return False, f"boundary of {V.format()} fails the modulus condition"
        return True, f"{count} boundary points of admissible curves checked"
    rec("containment", "boundary points of admissible curves are admissible", containment)

    def translation():
        for V in translation_corpus():
            for d in (1, 2, 3):
                _, rep = generic_translation_H(V, d)
                if not rep.ok:
                    return False, f"{V.format()} d={d}: {rep}"
        return True, "translation corpus, d = 1..3"
    rec("powered translation", "modulus holds iff d >= d_V", translation)


def _chow(rec: _Recorder):
    from .chow import ChowComputationConfig, compute_ch0

    def small():
        r = compute_ch0(ChowComputationConfig("F2", 1, 2, 3))
        return r.ok, f"order {r.order}, expected {r.expected_order}"
    rec("CH_0 over F2, m=1", "quotient order q^m", small)


def run_suite(scopes=SCOPES) -> dict:
    runners = {"witt": _witt, "divisors": _divisors, "cubical": _cubical, "cycles": _cycles, "chow": _chow}
    entries = []
    for scope in scopes:
        if scope not in runners:
            raise ValueError(f"unknown scope {scope!r}; choose from {', '.join(SCOPES)}")
        rec = _Recorder(scope)
        runners[scope](rec)
        entries.extend(rec.entries)
    return {"passed": all(e["status"] == "pass" for e in entries), "checks": entries}
