from app.domain.model.reports import CheckReport, LimitReport, LimitSample, SweepPoint, SweepReport


def make_check_reports() -> list:
    return [
        CheckReport(name="golden-mathieu-large", checked=12),
        CheckReport(name="parity-lame-large", checked=5, failures=("order 3: 2*alpha",)),
        CheckReport(name="e2-identity", checked=51, budget=1e-10),
    ]


def make_limit_report() -> LimitReport:
    return LimitReport(
        name="lame-to-mathieu",
        samples=(
            LimitSample(q=1e-2, error=3e-3, budget=0.1),
            LimitSample(q=1e-3, error=2e-4, budget=0.03),
        ),
    )


def make_sweep_report() -> SweepReport:
    points = tuple(
        SweepPoint(nu, complex(-nu * nu), complex(nu), 2.0 * nu**-9, nu**-9) for nu in (6.0, 8.0, 10.0)
    )
    return SweepReport(name="oracle-mathieu-large", points=points, slope=9.0, predicted_slope=9.0, constant=2.0)
