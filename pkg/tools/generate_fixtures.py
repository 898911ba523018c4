"""Regenerate the fixture corpus.

Every curve fixture is an all-nodal reducible curve of degree at most 7.
Each candidate is certified before it is written: both conductor routes
must agree on the saturated ideal, the regularity must equal d-1, and the
degree-d syzygy count must be one less than the number of components.
Run from the repository root:

    python3 tools/generate_fixtures.py fixtures/
"""
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from nodal import (  # noqa: E402
    CurveSpec,
    Ring,
    conductor_from_components,
    conductor_nodal,
)

SEED = 2026
PRIME = 32003


def certified(spec: CurveSpec) -> bool:
    rep = conductor_from_components(spec)
    other = conductor_nodal(spec.total_form)
    return (
        rep.conductor.same_ideal(other.conductor)
        and rep.regularity == spec.degree - 1
        and rep.degree_d_syzygies == len(spec) - 1
    )


def generic_spec(ring, degrees, rng, budget=10) -> CurveSpec:
    """Pairwise transverse all-nodal curve with the given component degrees."""
    for _ in range(budget):
        try:
            forms = []
            for d in degrees:
                if d == 1:
                    forms.append(ring.random_linear(rng))
                else:
                    forms.append(ring.random_form(d, rng))
            spec = CurveSpec.from_forms(forms)
        except ValueError:
            continue
        try:
            if certified(spec):
                return spec
        except Exception:
            continue
    raise SystemExit(f"no certified curve with component degrees {degrees}")


def write_fixture(path: Path, spec: CurveSpec, title: str) -> None:
    lines = [f"# {title}", f"ring p={spec.ring.p} vars=x0,x1,x2"]
    for comp in spec.components:
        lines.append(f"component: {comp.form}")
    path.write_text("\n".join(lines) + "\n")
    print(f"wrote {path} (d={spec.degree}, ell={len(spec)})")


def main(out_dir: Path) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    ring = Ring("x0,x1,x2", p=PRIME)
    rng = random.Random(SEED)

    fixed = {
        "two-lines": (["x0", "x1"], "two coordinate lines, one node"),
        "triangle": (["x0", "x1", "x2"], "coordinate triangle, three nodes"),
        "cubic-line": (
            ["x1^2*x2 - x0^2*x2 - x0^3", "x0 + x1 + 17*x2"],
            "nodal cubic with a transverse line",
        ),
        "two-conics": (
            [
                "x0^2 + 2*x1^2 + 3*x2^2 + x0*x1",
                "5*x0^2 + x1^2 + 7*x2^2 + x1*x2",
            ],
            "two conics meeting in four nodes",
        ),
    }
    for name, (forms, title) in fixed.items():
        spec = CurveSpec.from_forms([ring.parse(f) for f in forms])
        if not certified(spec):
            raise SystemExit(f"fixed fixture {name} failed certification")
        write_fixture(out_dir / f"{name}.fix", spec, title)

    generic = {
        "conic-line": ([2, 1], "conic with a transverse line"),
        "four-lines": ([1, 1, 1, 1], "four generic lines, six nodes"),
        "conic-two-lines": ([2, 1, 1], "conic with two transverse lines"),
        "cubic-conic": ([3, 2], "smooth cubic with a transverse conic"),
        "five-lines": ([1, 1, 1, 1, 1], "five generic lines, ten nodes"),
        "two-cubics": ([3, 3], "two cubics meeting in nine nodes"),
        "three-conics": ([2, 2, 2], "three conics, twelve nodes"),
        "cubic-two-conics": ([3, 2, 2], "cubic with two conics, degree seven"),
    }
    for name, (degrees, title) in generic.items():
        spec = generic_spec(ring, degrees, rng)
        write_fixture(out_dir / f"{name}.fix", spec, title)

    # point-ideal fixture for the plain-ideal commands
    points = out_dir / "triangle-points.fix"
    points.write_text(
        "# vertices of the coordinate triangle\n"
        f"ring p={PRIME} vars=x0,x1,x2\n"
        "generator: x0*x1\n"
        "generator: x0*x2\n"
        "generator: x1*x2\n"
    )
    print(f"wrote {points}")


if __name__ == "__main__":
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("fixtures")
    main(target)
