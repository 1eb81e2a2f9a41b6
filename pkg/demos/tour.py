"""One synthetic sample through an untrained network, stage by stage.

    python3 demos/tour.py [CHECKPOINT_DIR]

With a checkpoint (e.g. results/reference/run/final) the script also
reports the IoU of the trained prediction.
"""

import sys

from refseg.data import generate_sample
from refseg.metrics import binarize, intersection_union
from refseg.model import ModelConfig, forward, init_model
from refseg.tensor import no_grad
from refseg.text import Vocabulary, pad_batch, tokenize
from refseg.train import load_checkpoint

sample = generate_sample(seed=7, index=0)
print("expression:", repr(sample.expression))
for i, s in enumerate(sample.shapes):
    print(f"  {'*' if i == sample.target else ' '} {s.size} {s.color} {s.kind} at ({s.cx}, {s.cy})")

if len(sys.argv) > 1:
    params, run_cfg, vocab = load_checkpoint(sys.argv[1])
    config = run_cfg.model_config()
else:
    vocab = Vocabulary.from_texts([sample.expression])
    config = ModelConfig()
    params = init_model(config, len(vocab), seed=0)

ids, mask = pad_batch([tokenize(sample.expression, vocab)])
with no_grad():
    out = forward(params, config, sample.image[None], ids, mask)

print("\nencoder stages (channels x height x width):")
for i, f in enumerate(out.encoder.features, start=1):
    fused = " + language" if i in out.encoder.artifacts else ""
    print(f"  E{i}: {'x'.join(map(str, f.shape[1:]))}{fused}")
art = out.encoder.artifacts[5]
print(f"ACM at stage 5: {art.A3.shape[-2]} positions attend over {art.A3.shape[-1]} pooled anchors")

dec = out.decoder
print("\ndecoder predictions:")
for lvl in sorted(dec.SM, reverse=True):
    sm = dec.SM[lvl].data[0, 0]
    bm = f", boundary mean {dec.BM[lvl].data.mean():.3f}" if lvl in dec.BM else ""
    print(f"  SM{lvl}: {sm.shape[0]}x{sm.shape[1]}, mean {sm.mean():.3f}{bm}")

pred = binarize(dec.final.data[0, 0])
i, u = intersection_union(pred, sample.gt_mask)
print(f"\nIoU of the thresholded final map: {i}/{u} = {i / max(u, 1):.3f}")
print(f"target covers {sample.gt_mask.mean():.1%} of the image; predicted foreground {pred.mean():.1%}")
