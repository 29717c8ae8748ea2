"""Published reference values: Kf(L_n) to two decimals and tau(L_n), exact."""
from decimal import Decimal

KF_TABLE = {
    n: Decimal(v)
    for n, v in enumerate(
        [
            "69.52", "336.42", "929.82", "1977.70", "3608.06",
            "5948.91", "9128.25", "13274.07", "18514.38", "24977.17",
            "32790.45", "42082.21", "52980.46", "65613.20", "80108.42",
        ],
        start=1,
    )
}

TAU_TABLE = dict(
    enumerate(
        [
            31,
            929,
            27839,
            834241,
            24999391,
            749147489,
            22449425279,
            672733610881,
            20159558901151,
            604114033423649,
            18103261443808319,
            542493729280825921,
        ],
        start=1,
    )
)
