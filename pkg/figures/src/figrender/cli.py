"""render_figures <csv_dir> <out_dir> [--only fig7a,...]"""

import argparse
import sys
from pathlib import Path

from .recipes import FIGURE_IDS, FigureRecipe, render
from .schema import SchemaError


def _select(only):
    """Expand --only tokens to canonical figure ids (prefix match allowed,
    so fig7a selects fig7ab)."""
    if only is None:
        return list(FIGURE_IDS)
    chosen = []
    for token in only.split(","):
        token = token.strip()
        hits = [f for f in FIGURE_IDS if f == token or f.startswith(token)]
        if not hits:
            raise SchemaError(
                f"--only: '{token}' matches no figure id "
                f"(known: {', '.join(FIGURE_IDS)})")
        for h in hits:
            if h not in chosen:
                chosen.append(h)
    return chosen


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="render_figures",
        description="Render SVG figures from the quantisation CSV tables.")
    parser.add_argument("csv_dir", type=Path)
    parser.add_argument("out_dir", type=Path)
    parser.add_argument("--only",
                        help="comma-separated figure ids (fig3a, fig7ab, "
                             "...); a prefix like fig7a is accepted")
    args = parser.parse_args(argv)

    try:
        ids = _select(args.only)
        if not args.csv_dir.is_dir():
            raise SchemaError(f"{args.csv_dir}: not a directory")
        args.out_dir.mkdir(parents=True, exist_ok=True)
        for figure_id in ids:
            recipe = FigureRecipe(csv_path=args.csv_dir / f"{figure_id}.csv",
                                  figure_id=figure_id)
            out = render(recipe, args.out_dir)
            print(out)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
