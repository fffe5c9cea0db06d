"""
PlaneDraw Command Line Interface
Generate drawings of K_n, check and build plane subgraphs, render and benchmark.
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from src.augmentation.maximal import greedy_maximal, maximal_connected_fast
from src.augmentation.rays import uncrossed_rays
from src.config import configure_logging, get_settings, set_settings
from src.data.instance_loader import InstanceLoader
from src.drawing.rotation import Drawing, Edge
from src.drawing.validation import validate
from src.evaluation.benchmark import bench, growth_slopes
from src.exceptions import InvariantError, ParseError, PreconditionError
from src.generators.points import gen_convex, gen_perturbed, gen_random
from src.generators.seg_reduction import gen_seg_reduction
from src.generators.segments import gen_random_segments
from src.generators.tight import gen_tight
from src.optimization.exact import exact_max
from src.optimization.face_dp import maximize_connected
from src.render.svg import render_svg
from src.structure.connectivity import structure_report
from src.structure.maximality import is_maximal
from src.structure.plane import PlaneSubgraph, find_crossing

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3


class PlaneDrawCLI:
    """Command dispatch for PlaneDraw."""

    def __init__(self, args: argparse.Namespace):
        """
        Initialize CLI state from parsed arguments.

        Args:
            args: Parsed command line
        """
        self.args = args
        self.loader = InstanceLoader(data_dir=".")

    # ------------------------------------------------------------ helpers

    def _drawing(self) -> Drawing:
        if not self.args.drawing:
            raise ParseError("this command needs --drawing")
        return self.loader.load_drawing(self.args.drawing, self.args.points)

    def _valid_drawing(self) -> Drawing:
        d = self._drawing()
        report = validate(d, max_reported=1)
        if not report.ok:
            raise PreconditionError(f"invalid drawing: {report.summary()}")
        return d

    def _edges(self, d: Drawing, required: bool = False) -> List[Edge]:
        if not self.args.edges:
            if required:
                raise ParseError("this command needs --edges")
            return []
        return self.loader.load_edges(self.args.edges, d.n)

    def _save_drawing(self, d: Drawing) -> None:
        out = Path(self.args.out)
        self.loader.save_drawing(out, d)
        if d.has_coords:
            self.loader.save_points(out.with_suffix(".pts"), d.coords)
        print(f"[+] Wrote {out}")

    def _report_subgraph(self, label: str, F: PlaneSubgraph) -> None:
        print(f"[+] {label}: {len(F)} edges")
        print("    " + " ".join(str(e) for e in F.edges))
        if self.args.out:
            self.loader.save_edges(self.args.out, F.edges)
            print(f"[+] Wrote {self.args.out}")

    # ------------------------------------------------------------ verbs

    def gen(self) -> int:
        kind, size = self.args.kind, self.args.size
        if kind in ("random", "perturbed", "seg") and self.args.seed is None:
            raise ParseError(f"gen {kind} needs --seed")

        if kind == "seg":
            inst = gen_random_segments(size, self.args.seed)
            print(f"[+] {inst.s} random segments")
            if self.args.out:
                self.loader.save_segments(self.args.out, inst)
                print(f"[+] Wrote {self.args.out}")
            return EXIT_OK

        designated: List[Edge] = []
        if kind == "convex":
            d = gen_convex(size)
        elif kind == "random":
            d = gen_random(size, self.args.seed)
        elif kind == "perturbed":
            d = gen_perturbed(size, self.args.seed, inner=self.args.inner)
        else:
            tight = gen_tight(size)
            d, designated = tight.drawing, tight.designated

        print(f"[+] Generated {kind} drawing with n={d.n}")
        if designated:
            print(f"    designated maximal plane subgraph: {len(designated)} edges")
        if self.args.out:
            self._save_drawing(d)
            if designated:
                edg = Path(self.args.out).with_suffix(".edg")
                self.loader.save_edges(edg, designated)
                print(f"[+] Wrote {edg}")
        return EXIT_OK

    def check(self) -> int:
        what = self.args.what
        d = self._drawing()
        if what == "valid":
            report = validate(d)
            if report.ok:
                print(f"[+] Valid rotation system, n={d.n}")
                return EXIT_OK
            print(f"[!] {report.summary()}")
            for msg in report.violations[:10]:
                print(f"    {msg}")
            return EXIT_CHECK_FAILED

        d = self._valid_drawing()
        edges = self._edges(d, required=True)
        pair = find_crossing(d, edges)
        if pair is not None:
            print(f"[!] Not plane: {pair[0]} crosses {pair[1]}")
            return EXIT_CHECK_FAILED
        if what == "plane":
            print(f"[+] Plane subgraph with {len(set(edges))} edges")
            return EXIT_OK

        F = PlaneSubgraph(d, edges, check=False)
        if what == "maximal":
            ok, witness = is_maximal(F)
            if not ok:
                print(f"[!] Not maximal: {witness} can be added")
                return EXIT_CHECK_FAILED
            print(f"[+] Maximal plane subgraph with {len(F)} edges")
            return EXIT_OK

        report = structure_report(F)
        if not report.ok:
            for problem in report.failures():
                print(f"[!] {problem}")
            return EXIT_CHECK_FAILED
        c = report.connectivity
        print("[+] Maximal, spanning, 2-connected, essentially 3-edge-connected")
        print(f"    {c.edge_count} edges (bound {report.bound}), minimum degree {c.min_degree}")
        return EXIT_OK

    def augment(self) -> int:
        d = self._valid_drawing()
        F = PlaneSubgraph(d, self._edges(d))
        if self.args.fast_connected:
            result = maximal_connected_fast(d, F)
        else:
            result = greedy_maximal(d, F.edges)
        self._report_subgraph("Maximal plane subgraph", result)
        return EXIT_OK

    def maximize(self) -> int:
        d = self._valid_drawing()
        if self.args.exact:
            result = exact_max(d, self._edges(d), limit_n=self.args.limit_n)
        else:
            F = PlaneSubgraph(d, self._edges(d, required=True))
            result = maximize_connected(d, F)
        self._report_subgraph("Maximum plane subgraph", result)
        return EXIT_OK

    def rays(self) -> int:
        d = self._valid_drawing()
        v = self.args.vertex
        if not 1 <= v <= d.n:
            raise PreconditionError(f"vertex {v} outside 1..{d.n}")
        F = PlaneSubgraph(d, self._edges(d))
        found = sorted(uncrossed_rays(d, F, v, fast=self.args.fast))
        print(f"[+] {len(found)} uncrossed rays at vertex {v}")
        print("    " + " ".join(str(e) for e in found))
        return EXIT_OK

    def reduce(self) -> int:
        inst = self.loader.load_segments(self.args.segments)
        out = gen_seg_reduction(inst)
        print(f"[+] Gadget drawing with n={out.drawing.n} for {inst.s} segments")
        print(f"    {len(out.rerouted)} rerouted edges")
        if out.target is not None:
            print(f"    k={out.k}, maximum plane subgraph target {out.target}")
            if inst.s > 1 and not out.hull_triangle:
                print("    gadget hull is not a triangle, so the target is only an upper bound")
        if self.args.out:
            self._save_drawing(out.drawing)
        return EXIT_OK

    def render(self) -> int:
        d = self._valid_drawing()
        if not self.args.out:
            raise ParseError("render needs --out")
        highlight = self._edges(d)
        document = render_svg(d, highlight)
        Path(self.args.out).write_text(document, encoding="utf-8")
        print(f"[+] Wrote {self.args.out} ({len(highlight)} highlighted edges)")
        return EXIT_OK

    def bench(self) -> int:
        try:
            sizes = [int(tok) for tok in self.args.sizes.split(",") if tok.strip()]
        except ValueError:
            raise ParseError(f"--sizes must be comma separated integers, got {self.args.sizes!r}")
        df = bench(sizes, self.args.seed, repeats=self.args.repeats, workers=self.args.workers)
        table = df.pivot_table(index="n", columns="algorithm", values="seconds", aggfunc="mean")
        print(table.to_string(float_format=lambda x: f"{x:.4f}"))
        print(f"\n{'-'*60}")
        print("LOG-LOG SLOPES")
        print(f"{'-'*60}")
        for name, slope in growth_slopes(df).items():
            print(f"  {name:24s} {slope:.2f}")
        if self.args.out:
            df.to_csv(self.args.out, index=False)
            print(f"\n[+] Wrote {self.args.out}")
        return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--drawing", help="Rotation system file (.rot)")
    common.add_argument("--points", help="Coordinates for the drawing (.pts)")
    common.add_argument("--edges", help="Edge set file (.edg)")
    common.add_argument("--out", help="Output file")
    common.add_argument("--log-level", help="Logging level (default from PLANEDRAW_LOG_LEVEL)")

    parser = argparse.ArgumentParser(
        prog="planedraw_cli.py",
        description="Plane subgraphs of simple drawings of complete graphs",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    gen = sub.add_parser("gen", parents=[common], help="Generate a drawing or segment instance")
    gen.add_argument("kind", choices=["convex", "random", "perturbed", "tight", "seg"])
    gen.add_argument("size", type=int, help="Vertex count (segment count for seg)")
    gen.add_argument("--seed", type=int)
    gen.add_argument("--inner", action="store_true", help="perturbed: pull one point inside")

    check = sub.add_parser("check", parents=[common], help="Check a drawing or subgraph")
    check.add_argument("--what", choices=["valid", "plane", "maximal", "structure"],
                       default="valid")

    augment = sub.add_parser("augment", parents=[common], help="Extend to a maximal subgraph")
    mode = augment.add_mutually_exclusive_group()
    mode.add_argument("--greedy", action="store_true", help="Greedy pass (default)")
    mode.add_argument("--fast-connected", action="store_true",
                      help="Face walk augmentation of a connected subgraph")

    maximize = sub.add_parser("maximize", parents=[common], help="Maximum plane subgraph")
    mode = maximize.add_mutually_exclusive_group()
    mode.add_argument("--dp", action="store_true", help="Face DP over a connected spanning F (default)")
    mode.add_argument("--exact", action="store_true", help="Branch and bound")
    maximize.add_argument("--limit-n", type=int, help="Largest n the exact search accepts")

    rays = sub.add_parser("rays", parents=[common], help="Uncrossed rays at a vertex")
    rays.add_argument("--vertex", type=int, required=True)
    rays.add_argument("--fast", action="store_true", help="Face walk instead of brute force")

    reduce = sub.add_parser("reduce", parents=[common], help="Segment instance to gadget drawing")
    reduce.add_argument("--segments", required=True, help="Segment file (.seg)")

    sub.add_parser("render", parents=[common], help="SVG of a coordinate-backed drawing")

    bench_p = sub.add_parser("bench", parents=[common], help="Time the ray and augmentation code")
    bench_p.add_argument("--sizes", default="64,128,256")
    bench_p.add_argument("--seed", type=int, required=True)
    bench_p.add_argument("--repeats", type=int, default=1)
    bench_p.add_argument("--workers", type=int)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main CLI function; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    print("=" * 60)
    print("                   PLANEDRAW v0.1")
    print("      Plane Subgraphs of Simple Drawings of K_n")
    print("=" * 60 + "\n")

    try:
        settings = get_settings()
        if getattr(args, "limit_n", None) is not None:
            settings = settings.with_overrides(limit_n=args.limit_n)
        set_settings(settings.with_overrides(log_level=args.log_level))
        configure_logging(args.log_level)
        return getattr(PlaneDrawCLI(args), args.verb)()
    except (ParseError, FileNotFoundError) as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, InvariantError) as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
