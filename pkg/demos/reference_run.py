"""Produce the 2000-step reference run used by the end-to-end acceptance check.

Everything goes through the command line so the run is exactly what a user
would get:

    python3 demos/reference_run.py [OUT_DIR]

OUT_DIR defaults to results/reference. It ends up holding data/ (576
samples, 64 of them in val), run/ (checkpoints and loss_log.tsv) and the
two evaluation reports untrained/eval_val.tsv and trained/eval_val.tsv.
Takes a little over half an hour on one core.
"""

import sys
import time
from pathlib import Path

from refseg.cli import main

ROOT = Path(__file__).resolve().parent.parent


def run(argv):
    print("$ refseg " + " ".join(map(str, argv)), flush=True)
    code = main([str(a) for a in argv])
    if code:
        sys.exit(code)


if __name__ == "__main__":
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else ROOT / "results" / "reference"
    start = time.time()
    run(["gen-data", "--n", 576, "--n-val", 64, "--seed", 0, "--out", out / "data"])
    run(["train", "--data", out / "data", "--out", out / "run", "--seed", 0,
         "--variant", "acm", "--mode", "efn", "--bem", "on", "--steps", 2000, "--log-every", 100])
    run(["eval", "--checkpoint", out / "run" / "checkpoints" / "step_000000", "--data", out / "data",
         "--out", out / "untrained"])
    run(["eval", "--checkpoint", out / "run" / "final", "--data", out / "data", "--out", out / "trained"])
    print(f"done in {time.time() - start:.0f}s")
