"""The STN residual picks out edges.

A mask minus a slightly shifted copy of itself is zero wherever the mask is
flat and nonzero along its outline. The boundary enhancement decoder builds
on that: it learns the shift (an affine warp) and reads boundary detail from
the residual. This script prints the residual for a one-cell shift of a small
square next to the morphological boundary used as the supervision target.

    python3 demos/boundary_residual.py
"""

import numpy as np

from refseg.data import Shape, extract_boundary, rasterize
from refseg.decoder import StnParams, boundary_residual
from refseg.tensor import Tensor

H = W = 12
mask = rasterize(Shape("square", "red", "small", 6, 6, 3), H, W)

stn = StnParams.init(1, 4, np.random.default_rng(0))
print("identity warp, max |B| =", np.abs(boundary_residual(Tensor(mask[None, None] * 1.0), stn).data).max())

# sample one cell to the right (x_in = x_out + 2/W in normalised units), which
# moves the content one cell left
stn.fc2_b.data = np.array([1.0, 0.0, 2.0 / W, 0.0, 1.0, 0.0])
B = boundary_residual(Tensor(mask[None, None] * 1.0), stn).data[0, 0]


def show(title, grid, chars):
    print(f"\n{title}")
    for row in grid:
        print(" ".join(chars[v] for v in row))


show("mask", mask, {0: ".", 1: "#"})
show("residual after a one-cell shift (+ / -)", np.sign(B).astype(int), {0: ".", 1: "+", -1: "-"})
show("boundary target", extract_boundary(mask), {0: ".", 1: "o"})
