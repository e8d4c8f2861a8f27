"""
SPICE subcircuit
================

Write the calibrated device as a behavioural subcircuit and show the text.
"""

import sys

from qtcmodel import emit_subcircuit, load_config, paper_config_path

cfg = load_config(paper_config_path())
doc = emit_subcircuit(cfg.device_model(), "QTC", source=cfg.source)
sys.stdout.write(doc.text)

if len(sys.argv) > 1:
    doc.write(sys.argv[1])
