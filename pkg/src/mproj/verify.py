"""Randomized self-check of the projection identities and bound validity.

Backs ``mproj verify``. Each check reports the worst relative violation
seen over the instance family.
"""

import time
from dataclasses import dataclass

import numpy as np

from .bounds import evaluate_all, gap_bound_thm2
from .instances import equality_instance, instance_family
from .projection import cs_factors, gap_identity_rhs, masked_project
from .selection import select_rows


@dataclass
class CheckResult:
    name: str
    tolerance: float
    worst: float = 0.0
    count: int = 0

    @property
    def passed(self):
        return self.worst <= self.tolerance

    def update(self, violation):
        self.count += 1
        self.worst = max(self.worst, float(violation))

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}: worst {self.worst:.2e} (tol {self.tolerance:g}, {self.count} cases)"


def _rel(a, b):
    return abs(a - b) / max(1.0, abs(a), abs(b))


def _excess(lhs, rhs):
    """Relative amount by which ``lhs <= rhs`` is violated (0 if it holds)."""
    return max(0.0, lhs - rhs) / max(abs(rhs), 1e-300)


def run_property_suite(seed=0, count=250):
    checks = {
        k: CheckResult(k, tol)
        for k, tol in [
            ("pythagorean split", 1e-8),
            ("gap identity", 1e-8),
            ("interpolation", 1e-8),
            ("avg_err <= b_thm1", 1e-10),
            ("avg_err <= b_thm2", 1e-10),
            ("avg_gap <= gap bound", 1e-10),
            ("b_thm2 <= b_qdeim", 1e-10),
            ("equality at O", 1e-8),
        ]
    }
    for mask in ("deim", "random"):
        for inst in instance_family(seed=seed, count=count, mask=mask):
            basis, p, f = inst.basis, inst.mask, inst.samples
            f_tilde = masked_project(basis, p, f)
            f_hat = basis.u1 @ (basis.u1.T @ f)
            cs = cs_factors(basis, p)
            rhs = gap_identity_rhs(cs, basis, f)
            for j in range(f.shape[1]):
                e_m = np.sum((f[:, j] - f_tilde[:, j]) ** 2)
                e_o = np.sum((f[:, j] - f_hat[:, j]) ** 2)
                gap = np.sum((f_tilde[:, j] - f_hat[:, j]) ** 2)
                checks["pythagorean split"].update(_rel(e_m, e_o + gap))
                checks["gap identity"].update(_rel(gap, rhs[j]))
                interp = np.linalg.norm(select_rows(p, f_tilde[:, j] - f[:, j]))
                checks["interpolation"].update(interp / max(1.0, np.linalg.norm(f[:, j])))
            report, summary, spec = evaluate_all(basis, p, f)
            checks["avg_err <= b_thm1"].update(_excess(report.avg_err, report.b_thm1))
            checks["avg_err <= b_thm2"].update(_excess(report.avg_err, report.b_thm2))
            checks["avg_gap <= gap bound"].update(
                _excess(summary.avg_gap, gap_bound_thm2(spec, summary.n_samples))
            )
            # dominance over the QDEIM bound is only claimed for interpolation-type masks
            if mask == "deim":
                checks["b_thm2 <= b_qdeim"].update(_excess(report.b_thm2, report.b_qdeim))
    rng = np.random.default_rng(seed + 1)
    for _ in range(max(20, count // 5)):
        n = int(rng.integers(8, 41))
        m = int(rng.integers(1, min(8, n // 3) + 1))
        inst = equality_instance(rng, n, m, extra=int(rng.integers(0, 2)))
        _, summary, spec = evaluate_all(inst.basis, inst.mask, inst.samples)
        checks["equality at O"].update(_rel(summary.avg_gap, gap_bound_thm2(spec, summary.n_samples)))
    return list(checks.values())


def main(seed=0, count=250, echo=print):
    t0 = time.perf_counter()
    results = run_property_suite(seed=seed, count=count)
    for r in results:
        echo(r.line())
    echo(f"{sum(r.passed for r in results)}/{len(results)} checks passed in {time.perf_counter() - t0:.1f} s")
    return all(r.passed for r in results)
