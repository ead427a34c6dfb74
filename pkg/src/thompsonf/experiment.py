"""Norm experiments on truncated operators, with CSV/JSON reports."""

import csv
import io
import json
from dataclasses import asdict, dataclass, field

from .spectral import (
    DEFAULT_ELEMENT_CAP, Sector, build_operator, conjugate_images,
    enumerate_ball, operator_norm,
)

__all__ = ["ExperimentConfig", "Report", "run_experiment", "load_config", "SECTOR_ORDER"]

SECTOR_ORDER = (Sector.F1, Sector.F2, Sector.F3, Sector.F4, Sector.F5,
                Sector.PCOMPLEMENT, Sector.FULL)

CSV_COLUMNS = ("radius", "n", "sector", "norm", "norm_sq_over_n_sq", "iterations",
               "converged", "prop21_slack", "full_lower_bound")

HEADER_NOTE = ("Norms are computed on compressions to finite Cayley balls and are lower "
               "bounds for the operator norms on l2(F); they cannot certify non-amenability.")


@dataclass
class ExperimentConfig:
    n_max: int = 8
    radii: list = field(default_factory=lambda: [8, 10, 12])
    tol: float = 1e-10
    max_iter: int = 100_000
    seed: int = 42
    element_cap: int = DEFAULT_ELEMENT_CAP
    output_format: str = "csv"
    trace: bool = False
    threads: int = 1

    def validate(self):
        if self.n_max < 1:
            raise ValueError("n_max must be >= 1")
        if not self.radii or list(self.radii) != sorted(set(self.radii)) or self.radii[0] < 0:
            raise ValueError("radii must be a nonempty ascending list of nonnegative integers")
        if self.tol <= 0:
            raise ValueError("tol must be positive")
        if self.max_iter < 1 or self.element_cap < 1:
            raise ValueError("max_iter and element_cap must be >= 1")
        if self.output_format not in ("csv", "json"):
            raise ValueError("output_format must be csv or json")
        return self


_CONFIG_TYPES = {
    "n_max": int, "tol": float, "max_iter": int, "seed": int, "element_cap": int,
    "output_format": str, "threads": int,
    "radii": lambda s: [int(x) for x in s.split(",") if x.strip()],
    "trace": lambda s: s.strip().lower() in ("1", "true", "yes", "on"),
}
_CONFIG_ALIASES = {"nmax": "n_max", "format": "output_format", "cap": "element_cap",
                   "max-iter": "max_iter"}


def load_config(text):
    """Parse ``key = value`` lines (``#`` comments allowed) into a dict of overrides."""
    out = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        key = _CONFIG_ALIASES.get(key, key)
        if key not in _CONFIG_TYPES:
            raise ValueError(f"config line {lineno}: unknown key {key!r}")
        out[key] = _CONFIG_TYPES[key](value)
    return out


def _fmt(x):
    return float(f"{x:.12g}")


@dataclass
class Report:
    header: dict
    rows: list

    def to_json(self):
        return json.dumps({"config": self.header, "rows": self.rows}, indent=1) + "\n"

    def to_csv(self):
        buf = io.StringIO()
        buf.write("".join(f"# {k}: {json.dumps(v)}\n" for k, v in self.header.items()))
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in self.rows:
            writer.writerow({k: (repr(v) if isinstance(v, float) else v) for k, v in row.items()})
        return buf.getvalue()

    def render(self, fmt):
        return self.to_json() if fmt == "json" else self.to_csv()

    def lookup(self, radius, n, sector):
        sector = str(Sector.parse(sector))
        for row in self.rows:
            if row["radius"] == radius and row["n"] == n and row["sector"] == sector:
                return row
        raise KeyError((radius, n, sector))


def prop21_slack(norms):
    """Right side minus left side of the splitting estimate for ||A_Full||^2."""
    a = {s: norms[s] for s in SECTOR_ORDER}
    rhs = (8 * (a[Sector.F1] ** 2 + a[Sector.F3] ** 2 + a[Sector.F4] ** 2 + a[Sector.F5] ** 2)
           + 2 * a[Sector.F2] * a[Sector.PCOMPLEMENT] + a[Sector.F2] ** 2)
    return rhs - a[Sector.FULL] ** 2


def run_experiment(config, basis=None, images=None, progress=None):
    """Norms of all seven sector operators for every (radius, n) in the config.

    ``basis``/``images`` may be passed in to reuse an enumerated ball.
    """
    config.validate()
    R_max = config.radii[-1]
    if basis is None or basis.radius < R_max:
        basis = enumerate_ball(R_max, config.element_cap)
    if images is None or images.n_max < config.n_max:
        images = conjugate_images(basis, config.n_max, threads=config.threads)
    rows = []
    p2_profile = {}
    for R in config.radii:
        for n in range(1, config.n_max + 1):
            est = {}
            for sector in SECTOR_ORDER:
                op = build_operator(n, sector, basis, images, radius=R)
                est[sector] = operator_norm(op, config.tol, config.max_iter, config.seed)
                if progress:
                    progress(R, n, sector, est[sector])
            norms = {s: e.value for s, e in est.items()}
            slack = prop21_slack(norms)
            lower = norms[Sector.FULL] / n
            for sector in SECTOR_ORDER:
                e = est[sector]
                rows.append({
                    "radius": R, "n": n, "sector": str(sector),
                    "norm": _fmt(e.value),
                    "norm_sq_over_n_sq": _fmt(e.value ** 2 / n ** 2),
                    "iterations": e.iterations,
                    "converged": e.converged,
                    "prop21_slack": _fmt(slack),
                    "full_lower_bound": _fmt(lower),
                })
            if R == R_max:
                p2_profile[n] = _fmt(norms[Sector.F2] ** 2 / n ** 2)
    header = asdict(config)
    header.pop("threads")
    header.pop("trace")
    header["ball_sizes"] = [basis.size(r) for r in config.radii]
    header["note"] = HEADER_NOTE
    # p2 averages are reported, not judged: no quantitative claim exists for them
    header["p2_average_profile"] = {str(n): v for n, v in p2_profile.items()}
    header["p2_exceeds_proven_decay"] = p2_profile[config.n_max] > 1.0 / config.n_max
    return Report(header, rows)
