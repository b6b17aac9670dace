"""Golden values for the printed formulas, regenerable through the CLI.

Each entry computes a JSON-able object; the blessed copies live under
tests/golden/ and guard both the mathematics and the canonical serialization.
"""
from __future__ import annotations

import json
import os
from typing import Callable, Dict

from . import jack as jackmod
from . import rect as rectmod
from . import theta as thetamod


def _jack_theta_2_2():
    return jackmod.theta((2,), (2,)).to_obj()


def _rect_theta_2():
    return rectmod.rect_recurrence((2,)).value.to_obj()


def _table6_values():
    out = {}
    for mu in [(2,), (3,), (4,), (2, 2), (5,), (3, 2), (6,), (4, 2), (3, 3), (2, 2, 2)]:
        key = "theta_" + "".join(str(p) for p in mu)
        out[key] = rectmod.rect_recurrence(mu).value.to_obj()
    return out


def _section1_m1_displays():
    out = {}
    for mu in [(2,), (3,), (4,), (2, 2)]:
        rp = thetamod.rect_theta_symbolic(1, mu, mode="closed_form_m1")
        key = "".join(str(p) for p in mu)
        out[key] = rp.signed_flipped().to_obj()
    return out


def _section1_m2_mu2():
    rp = thetamod.rect_theta_symbolic(2, (2,), mode="interpolate")
    return rp.signed_flipped().to_obj()


def _section1_m2_mu3():
    rp = thetamod.rect_theta_symbolic(2, (3,), mode="interpolate")
    return rp.signed_flipped().to_obj()


def _section7_thm2_32():
    return thetamod.theorem2_sum((3, 2)).to_obj()


def _section8_extension():
    out = {}
    for mu, p, q in [((2,), 1, 1), ((3,), 1, 1), ((3, 2), 3, 1)]:
        rep = rectmod.extension_divisibility(mu, p, q)
        key = "".join(str(t) for t in mu) + f"_p{p}q{q}"
        out[key] = rep.to_obj()
    return out


REGISTRY: Dict[str, Callable] = {
    "cli_jack_theta_2_2": _jack_theta_2_2,
    "cli_rect_theta_2": _rect_theta_2,
    "table6_values": _table6_values,
    "section1_m1_displays": _section1_m1_displays,
    "section1_m2_mu2": _section1_m2_mu2,
    "section1_m2_mu3": _section1_m2_mu3,
    "section7_thm2_32": _section7_thm2_32,
    "section8_extension": _section8_extension,
}


def default_dir() -> str:
    return os.path.join(os.getcwd(), "tests", "golden")


def check_goldens(directory: str, bless: bool = False):
    """Compare (or regenerate with bless) every registry entry.

    Returns a list of (name, status) with status in ok / mismatch / missing /
    blessed.
    """
    results = []
    os.makedirs(directory, exist_ok=True) if bless else None
    for name, fn in sorted(REGISTRY.items()):
        path = os.path.join(directory, f"{name}.json")
        computed = fn()
        if bless:
            with open(path, "w") as fh:
                json.dump(computed, fh, indent=1, sort_keys=True)
                fh.write("\n")
            results.append((name, "blessed"))
            continue
        if not os.path.exists(path):
            results.append((name, "missing"))
            continue
        with open(path) as fh:
            stored = json.load(fh)
        results.append((name, "ok" if stored == computed else "mismatch"))
    return results
