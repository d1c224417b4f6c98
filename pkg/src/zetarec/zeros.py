"""Zero ordinates: ledger, reference oracle and the next-zero recurrence.

The recurrence t_(n+1) = lim [Z(2m) - Z_n(2m)]^(-1/2m) needs the earlier
zeros to far more digits than it produces: an error eps in t_k is magnified
by (t_(n+1)/t_k)^2m.  :func:`next_zero` refuses to run when the ledger cannot
pay for that.  Independently of the recurrence, zeros are located as sign
changes of the Hardy function Z(t) = exp(i theta(t)) zeta(1/2 + i t).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import mpmath
from mpmath import mp, mpf

from .precision import NumericFailure, PrecisionContext, PrecisionRefused, fmt
from .secondary_zeta import ZEvenRequest, z_even, z_from_products, z_partial
from .specfun import T1_APPROX, lambert_w, precision_budget, zeta

SOURCES = ("recurrence", "duality", "external", "leclair")
REFERENCE_FILE = "reference_zeros.tsv"


@dataclass(frozen=True)
class ZeroRecord:
    index: int
    t: str
    certified_digits: int
    source: str = "external"

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("zero index starts at 1")
        if self.source not in SOURCES:
            raise ValueError(f"unknown source {self.source!r}")
        whole, dot, frac = self.t.partition(".")
        if not whole.isdigit() or (dot and not frac.isdigit()):
            raise ValueError(f"not a positive decimal: {self.t!r}")
        if mpf(self.t) <= 0:
            raise ValueError("zero ordinates are positive")
        if not 0 <= self.certified_digits <= len(frac):
            raise ValueError(f"certified digits {self.certified_digits} exceed the {len(frac)} decimals stored")

    def value(self) -> mpf:
        """The ordinate at the current mpmath precision."""
        return mpf(self.t)

    def to_line(self) -> str:
        return f"{self.index}\t{self.certified_digits}\t{self.t}\t{self.source}"

    @classmethod
    def from_line(cls, line: str) -> "ZeroRecord":
        idx, cert, t, src = line.rstrip("\n").split("\t")
        return cls(int(idx), t, int(cert), src)


@dataclass
class ZeroLedger:
    """Zeros t_1, t_2, ... in order, each with its certified decimal places."""

    records: list = field(default_factory=list)
    path: Path | None = None

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def __getitem__(self, i):
        return self.records[i]

    def append(self, rec: ZeroRecord) -> None:
        if rec.index != len(self.records) + 1:
            raise ValueError(f"expected index {len(self.records) + 1}, got {rec.index}")
        if self.records:
            with mp.workdps(max(len(rec.t), len(self.records[-1].t)) + 5):
                if not rec.value() > self.records[-1].value():
                    raise ValueError(f"t_{rec.index} is not above t_{rec.index - 1}")
        self.records.append(rec)

    def truncated(self, n: int) -> "ZeroLedger":
        return ZeroLedger(list(self.records[:n]))

    def dumps(self) -> str:
        return "".join(r.to_line() + "\n" for r in self.records)

    @classmethod
    def loads(cls, text: str) -> "ZeroLedger":
        led = cls()
        for line in text.splitlines():
            if line.strip() and not line.startswith("#"):
                led.append(ZeroRecord.from_line(line))
        return led

    def save(self, path=None) -> None:
        path = Path(path or self.path)
        path.write_text(self.dumps())
        self.path = path

    @classmethod
    def load(cls, path) -> "ZeroLedger":
        led = cls.loads(Path(path).read_text())
        led.path = Path(path)
        return led


def reference_ledger(n: int | None = None) -> ZeroLedger:
    """Bundled zeros, located with :func:`locate_zeros`; the first ten carry 400 places."""
    text = resources.files("zetarec").joinpath("data").joinpath(REFERENCE_FILE).read_text()
    led = ZeroLedger.loads(text)
    if n is not None:
        if n > len(led):
            raise ValueError(f"only {len(led)} reference zeros are bundled")
        led = led.truncated(n)
    return led


# ---------------------------------------------------------------------------
# Hardy Z oracle


def riemann_siegel_theta(t):
    return mpmath.loggamma(mpf(1) / 4 + 1j * t / 2).imag - t / 2 * mp.log(mp.pi)


def hardy_z(t, ctx: PrecisionContext) -> mpf:
    """Real-valued Z(t); its sign changes are the zeros on the critical line."""
    with ctx.working():
        t = mpf(t)
        v = mp.expj(riemann_siegel_theta(t)) * zeta(mpmath.mpc(0.5, t), ctx)
        return v.real


def _illinois(f, a, b, fa, fb, tol):
    side = 0
    for _ in range(200):
        c = (a * fb - b * fa) / (fb - fa)
        fc = f(c)
        if fc == 0:
            return c, c
        if (fc > 0) == (fb > 0):
            b, fb = c, fc
            if side == -1:
                fa /= 2
            side = -1
        else:
            a, fa = c, fc
            if side == 1:
                fb /= 2
            side = 1
        if abs(b - a) < tol:
            break
    return a, b


def refine_zero(a, b, digits: int) -> mpf:
    """Root of Hardy Z in the sign-change bracket [a, b] to ``digits`` decimals."""
    lo_ctx = PrecisionContext(30)
    with lo_ctx.working():
        a, b = mpf(a), mpf(b)
        f = lambda x: hardy_z(x, lo_ctx)
        fa, fb = f(a), f(b)
        if (fa > 0) == (fb > 0):
            raise ValueError("bracket does not straddle a sign change")
        a, b = _illinois(f, a, b, fa, fb, mpf(10) ** -20)
        x = (a + b) / 2
    known = 18
    while known < digits + 2:
        w = min(2 * known + 10, digits + 15)
        ctx = PrecisionContext(w, 10)
        with ctx.working():
            x0, x1 = mpf(x), mpf(x) + mpf(10) ** (-known)
            f0, f1 = hardy_z(x0, ctx), hardy_z(x1, ctx)
            tol = mpf(10) ** (-(w - 2))
            for _ in range(12):
                if f1 == f0:
                    break
                x2 = x1 - f1 * (x1 - x0) / (f1 - f0)
                x0, f0 = x1, f1
                x1, f1 = x2, hardy_z(x2, ctx)
                if abs(x1 - x0) < tol:
                    break
            else:
                raise NumericFailure("secant refinement of a zero stalled")
            x = x1
        known = w - 3
    with mp.workdps(digits + 10):
        return +x


def zero_brackets(count: int, *, step: float = 0.05, start: float = 10.0) -> list:
    """Intervals of width ``step`` holding one sign change of Hardy Z each, in order."""
    scan = PrecisionContext(20)
    brackets = []
    t = start
    with scan.working():
        prev = hardy_z(t, scan)
        while len(brackets) < count:
            nxt = hardy_z(t + step, scan)
            if (prev > 0) != (nxt > 0):
                brackets.append((t, t + step))
            prev = nxt
            t += step
    return brackets


def locate_zeros(count: int, digits: int, *, step: float = 0.05, start: float = 10.0) -> list:
    """The first ``count`` zero ordinates, by scanning Hardy Z and refining.

    Each index is checked against the smooth zero count theta(t)/pi + 1.
    """
    out = []
    for n, (a, b) in enumerate(zero_brackets(count, step=step, start=start), start=1):
        z = refine_zero(a, b, digits)
        with mp.workdps(30):
            smooth = riemann_siegel_theta(z) / mp.pi + 1
            if abs(smooth - (n - mpf(1) / 2)) > 1.5:
                raise NumericFailure(f"zero near {float(z):.3f} does not look like t_{n}; scan step too coarse")
        out.append(z)
    return out


# ---------------------------------------------------------------------------
# LeClair approximation


def leclair_approx(n: int, ctx: PrecisionContext | None = None) -> mpf:
    """2 pi (n - 11/8) / W((n - 11/8)/e), accurate to a fraction of the gap."""
    if n < 1:
        raise ValueError("n must be at least 1")
    n = int(n)
    digits = max(30, len(str(n)) + 20)
    if ctx is None or ctx.digits < digits:
        ctx = PrecisionContext(digits if ctx is None else max(ctx.digits, digits))
    with ctx.working():
        a = n - mpf(11) / 8
        w = lambert_w(a / mp.e, ctx)
        return 2 * mp.pi * a / w


# ---------------------------------------------------------------------------
# Recurrence


@dataclass(frozen=True)
class MSchedule:
    m_start: int
    m_step: int
    pmax: int

    def __post_init__(self):
        if self.m_step >= 0:
            raise ValueError("m_step must be negative")
        if self.m_start < 0:
            raise ValueError("m_start must be non-negative")
        if self.pmax < 2:
            raise ValueError("pmax must be at least 2")

    def values(self):
        m = self.m_start
        while m > 0:
            yield m
            m += self.m_step


def _estimate(n: int) -> float:
    return float(leclair_approx(n)) if n > 1 else T1_APPROX


def truncation_decimals(n: int, m: int) -> int:
    """Expected decimals of t_(n+1) from the first omitted term (t_(n+1)/t_(n+2))^2m."""
    t1, t2 = _estimate(n + 1), _estimate(n + 2)
    rel = 2 * m * math.log10(t2 / t1) + math.log10(2 * m)
    return max(0, int(rel - math.log10(t1)))


def required_certified(ledger: ZeroLedger, n: int, m: int, target: int, margin: int) -> list:
    """(index, needed decimals) for each predecessor used by the recurrence."""
    t_next = _estimate(n + 1)
    need = []
    for rec in list(ledger)[:n]:
        tk = float(mpf(rec.t[:30]))
        need.append((rec.index, target + int(math.ceil(2 * m * math.log10(t_next / tk))) + margin))
    return need


def _check_margin(ledger, n, m, target, margin):
    for idx, need in required_certified(ledger, n, m, target, margin):
        rec = ledger[idx - 1]
        if rec.certified_digits < need:
            raise PrecisionRefused(
                f"t_{idx} has {rec.certified_digits} certified decimals; the recurrence for t_{n + 1} at m={m} "
                f"would cancel them",
                need,
            )


def _root(z, zn, m, what):
    d = z - zn
    if not d > 0:
        raise NumericFailure(f"precision exhausted: Z({2 * m}) - Z_n({2 * m}) = {mp.nstr(d, 5)} in {what}")
    return mp.exp(-mp.log(d) / (2 * m))


def _precision_decimals(ctx: PrecisionContext, m: int, t_next: float) -> int:
    return ctx.working_digits - int(math.ceil(2 * m * (math.log10(4) + math.log10(t_next)))) - 5 - int(math.log10(t_next))


def _record(n, value, certified, source, ctx) -> ZeroRecord:
    digits = ctx.digits
    with mp.workdps(digits + 10):
        text = fmt(value, digits)
    frac = text.partition(".")[2]
    return ZeroRecord(n + 1, text, max(0, min(certified, len(frac))), source)


def t1_direct(m: int, ctx: PrecisionContext, variant: str = "hurwitz") -> mpf:
    """Z(2m)^(-1/2m)."""
    z = z_even(ZEvenRequest(m, variant, ctx))
    with ctx.working():
        return _root(z, mpf(0), m, "t1_direct")


def _recurrence_value(ledger, n, m, ctx, z_of_m):
    t_next = _estimate(n + 1)
    z = z_of_m(m, t_next)
    with ctx.working(5):
        zn = z_partial(ledger, n, 2 * m, ctx)
        return _root(z, zn, m, f"t_{n + 1}")


def _inherited_decimals(ledger, n, m, value) -> int:
    # An error of 10^-c in t_k moves t_(n+1) by about 10^-c (t_(n+1)/t_k)^(2m+1).
    t_next = float(value)
    best = 10**9
    for rec in list(ledger)[:n]:
        tk = float(mpf(rec.t[:30]))
        best = min(best, rec.certified_digits - int(math.ceil((2 * m + 1) * math.log10(t_next / tk))))
    return max(0, best)


def _probe_m(m: int) -> int | None:
    mp_ = int(0.9 * m)
    return mp_ if 0 < mp_ < m else None


def _next(ledger, n, m, ctx, z_of_m, source, margin, probe, check):
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    if n > len(ledger):
        raise ValueError(f"ledger holds {len(ledger)} zeros, recurrence needs {n}")
    target = truncation_decimals(n, m)
    if check:
        _check_margin(ledger, n, m, target, margin)
    value = _recurrence_value(ledger, n, m, ctx, z_of_m)
    certified = min(target, _precision_decimals(ctx, m, _estimate(n + 1)))
    if probe:
        m2 = _probe_m(m)
        if m2 is not None:
            try:
                v2 = _recurrence_value(ledger, n, m2, ctx, z_of_m)
            except NumericFailure:
                certified = 0
            else:
                with ctx.working():
                    delta = abs(value - v2)
                    est = int(mpmath.floor(-mpmath.log10(delta))) if delta else certified
                certified = min(certified, max(0, est))
    certified = min(certified, _inherited_decimals(ledger, n, m, value))
    return _record(n, value, certified, source, ctx)


def next_zero(
    ledger: ZeroLedger,
    n: int,
    m: int,
    ctx: PrecisionContext,
    *,
    margin: int = 20,
    probe: bool = True,
    check: bool = True,
    variant: str = "hurwitz",
) -> ZeroRecord:
    """t_(n+1) = [Z(2m) - Z_n(2m)]^(-1/2m) from the first ``n`` ledger zeros.

    Certified decimals are the smaller of the truncation estimate, the
    precision headroom and the change observed when m is lowered by 10%.
    """

    def z_of_m(mm, t_next):
        return z_even(ZEvenRequest(mm, variant, ctx, t_est=t_next))

    return _next(ledger, n, m, ctx, z_of_m, "recurrence", margin, probe, check)


def next_zero_from_primes(
    ledger: ZeroLedger,
    n: int,
    m: int,
    pmax: int,
    ctx: PrecisionContext,
    *,
    margin: int = 20,
    probe: bool = True,
    check: bool = True,
) -> ZeroRecord:
    """As :func:`next_zero`, with zeta(2m) and beta(2m) built from the first ``pmax`` primes."""

    def z_of_m(mm, t_next):
        return z_from_products(mm, pmax, ctx, t_est=t_next)

    return _next(ledger, n, m, ctx, z_of_m, "duality", margin, probe, check)


def run_duality_pipeline(schedule: MSchedule, ctx: PrecisionContext, *, probe: bool = True) -> tuple:
    """Generate zeros from primes alone, lowering m after each zero.

    Returns ``(records, error)``; ``error`` is the exception that stopped the
    run early, or None.  Each zero reuses the pipeline's own predecessors, as
    in the original procedure, so no margin check is applied.
    """
    ledger = ZeroLedger()
    for n, m in enumerate(schedule.values()):
        try:
            rec = next_zero_from_primes(ledger, n, m, schedule.pmax, ctx, probe=probe, check=False)
            ledger.append(rec)
        except (NumericFailure, PrecisionRefused, ValueError) as exc:
            return ledger.records, exc
    return ledger.records, None


def required_digits(n: int, m: int, target: int = 10) -> int:
    """Working digits needed by the recurrence for t_(n+1) at ``m``."""
    return precision_budget(m, target, _estimate(n + 1))
