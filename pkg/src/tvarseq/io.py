"""Deterministic CSV/JSON writers with a config-hash header.

Every file starts with (or embeds, for JSON) the SHA-256 of the canonical
JSON encoding of the producing configuration, so identical configs yield
byte-identical artifacts.
"""

import hashlib
import json

import numpy as np


def config_hash(cfg):
    """SHA-256 over the canonical JSON encoding of a config mapping."""
    blob = json.dumps(cfg, sort_keys=True, separators=(",", ":"), default=str)
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def _fmt(v):
    if isinstance(v, bool):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    if isinstance(v, np.integer):
        return str(int(v))
    return str(v)


def write_csv(path, cfg, columns, rows):
    """CSV with '#' config-hash header line, '.' decimals, LF endings, UTF-8."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"# config_hash={config_hash(cfg)}\n")
        fh.write(",".join(columns) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def write_json(path, cfg, payload):
    """JSON document whose first key is the config hash, then the config echo."""
    doc = {"config_hash": config_hash(cfg), "config": cfg}
    doc.update(payload)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(doc, fh, indent=2, sort_keys=False, default=str)
        fh.write("\n")
