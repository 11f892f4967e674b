"""Timing of the three evaluation strategies, never at the cost of
correctness: before anything is timed, the strategies are re-validated
against each other on the exact inputs being benchmarked.

Methods:

- recurrence: build D_n by the defining recurrence, then Horner-evaluate
  (defined for n <= 512, the polynomial construction cap);
- closed: build D_n from the closed form, then Horner-evaluate (same cap);
- matrix: companion-matrix powering, defined for any n <= 2**62.

Rows are emitted only for methods defined at each n.  The backend column
records which kernel ran: prime-field matrix evaluation goes through the
selected kernel backend (pure or compiled); everything else is the
generic ring path.  With compare_backends=True, prime-field rings get
extra rows timing both kernel backends side by side on the same inputs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import _kernels
from .families import (
    N_POLY_MAX,
    dickson_closed,
    dickson_eval_fast,
    dickson_first,
)
from .poly import poly_eval
from .rings import PrimeField, Ring

WARMUP_REPS = 1


@dataclass(frozen=True)
class BenchRecord:
    method: str
    ring: str
    n: int
    repetitions: int
    total_ns: int
    backend: str

    @property
    def ns_per_eval(self) -> int:
        return self.total_ns // max(self.repetitions, 1)

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "ring": self.ring,
            "n": self.n,
            "repetitions": self.repetitions,
            "total_ns": self.total_ns,
            "ns_per_eval": self.ns_per_eval,
            "backend": self.backend,
        }


def ring_descriptor(ring: Ring) -> str:
    return repr(ring)


def _time_callable(fn, reps: int) -> int:
    for _ in range(WARMUP_REPS):
        fn()
    t0 = time.perf_counter_ns()
    for _ in range(reps):
        fn()
    return time.perf_counter_ns() - t0


def run_bench(
    n_list: list[int],
    ring: Ring,
    reps: int = 5,
    compare_backends: bool = False,
) -> list[BenchRecord]:
    """Benchmark D_n(x, a) evaluation at fixed points x = 3, a = 2."""
    if reps < 1:
        raise ValueError("reps must be positive")
    x = ring.from_int(3)
    a = ring.from_int(2)
    rdesc = ring_descriptor(ring)
    records = []
    for n in n_list:
        # agreement re-validation on the benchmarked inputs
        fast = dickson_eval_fast(n, x, a)
        if n <= N_POLY_MAX:
            by_rec = poly_eval(dickson_first(n, a), x)
            by_closed = poly_eval(dickson_closed(n, a), x)
            if by_rec != fast or by_closed != fast:
                raise RuntimeError(
                    f"evaluation strategies disagree at n={n} over {rdesc}; refusing to time"
                )
        generic_backend = _kernels.BACKEND if isinstance(ring, PrimeField) else "generic"
        records.append(
            BenchRecord(
                method="matrix",
                ring=rdesc,
                n=n,
                repetitions=reps,
                total_ns=_time_callable(lambda: dickson_eval_fast(n, x, a), reps),
                backend=generic_backend,
            )
        )
        if n <= N_POLY_MAX:
            records.append(
                BenchRecord(
                    method="recurrence",
                    ring=rdesc,
                    n=n,
                    repetitions=reps,
                    total_ns=_time_callable(lambda: poly_eval(dickson_first(n, a), x), reps),
                    backend="generic",
                )
            )
            records.append(
                BenchRecord(
                    method="closed",
                    ring=rdesc,
                    n=n,
                    repetitions=reps,
                    total_ns=_time_callable(lambda: poly_eval(dickson_closed(n, a), x), reps),
                    backend="generic",
                )
            )
        if compare_backends and isinstance(ring, PrimeField):
            for name, module in sorted(_kernels.backends().items()):
                # both backends must agree with the generic value before timing
                kval = module.dickson_first_eval(n, x.val, a.val, ring.p)
                if ring.from_int(kval) != fast:
                    raise RuntimeError(
                        f"kernel backend {name} disagrees at n={n} over {rdesc}; refusing to time"
                    )
                records.append(
                    BenchRecord(
                        method="kernel-matrix",
                        ring=rdesc,
                        n=n,
                        repetitions=reps,
                        total_ns=_time_callable(
                            lambda: module.dickson_first_eval(n, x.val, a.val, ring.p), reps
                        ),
                        backend=name,
                    )
                )
                if n <= N_POLY_MAX:
                    krec = module.dickson_recurrence_eval(n, 0, x.val, a.val, ring.p)
                    if ring.from_int(krec) != fast:
                        raise RuntimeError(
                            f"kernel backend {name} disagrees at n={n} over {rdesc}; refusing to time"
                        )
                    records.append(
                        BenchRecord(
                            method="kernel-recurrence",
                            ring=rdesc,
                            n=n,
                            repetitions=reps,
                            total_ns=_time_callable(
                                lambda: module.dickson_recurrence_eval(n, 0, x.val, a.val, ring.p),
                                reps,
                            ),
                            backend=name,
                        )
                    )
    return records


def render_csv(records: list[BenchRecord]) -> str:
    lines = ["method,ring,n,repetitions,total_ns,ns_per_eval,backend"]
    for r in records:
        lines.append(
            f"{r.method},{r.ring},{r.n},{r.repetitions},{r.total_ns},{r.ns_per_eval},{r.backend}"
        )
    return "\n".join(lines)
