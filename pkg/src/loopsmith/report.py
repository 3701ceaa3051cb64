"""Analysis-report assembly and rendering.

One report dict per loop with a stable key set and ordering; rendered either
as `key=value` lines (lists as [a,b,c], booleans lowercase) or as JSON.  The
text and JSON documents carry exactly the same keys, so the JSON round-trips
everything the text shows.
"""

from __future__ import annotations

import json

from .core import LoopTable, element_order, exponent
from .errors import NotPowerAssociativeError
from .identities import CATALOG, check_property, classify_bol_moufang
from .structure import (
    associator_subloop,
    center,
    check_assoc_family,
    lagrange_report,
    nucleus,
)

PROPERTY_ORDER = (
    "commutative",
    "steiner",
    "totally-symmetric",
    "lip",
    "rip",
    "inverse-property",
    "aaip",
    "conjugacy-closed",
    "arif",
)

# full subloop enumeration is kept automatic up to this order; past it the
# weak-Lagrange scan would need exponentially many closures
SUBLOOP_ENUMERATION_LIMIT = 24


def classify_report(loop: LoopTable) -> dict:
    flags = classify_bol_moufang(loop)
    props = {name: check_property(loop, name).holds for name in PROPERTY_ORDER}
    return {"identity_flags": flags, "properties": props}


def analysis_report(loop: LoopTable, full_subloops: bool | None = None) -> dict:
    """All structural facts the analyze command reports, as nested data."""
    if full_subloops is None:
        full_subloops = loop.order <= SUBLOOP_ENUMERATION_LIMIT
    power_assoc = check_assoc_family(loop, "power-associative").holds
    report: dict = {
        "order": loop.order,
        "identity_flags": classify_bol_moufang(loop),
        "nucleus": {
            "left": sorted(nucleus(loop, "left")),
            "middle": sorted(nucleus(loop, "middle")),
            "right": sorted(nucleus(loop, "right")),
            "full": sorted(nucleus(loop, "full")),
        },
        "center": sorted(center(loop)),
        "exponent": None,
        "element_orders": [element_order(loop, x) for x in loop],
        "lagrange": {"weak": None, "monogenic": None, "cauchy": None},
        "power_associative": power_assoc,
        "diassociative": check_assoc_family(loop, "diassociative").holds,
        "associator_subloop": sorted(associator_subloop(loop)),
    }
    if power_assoc:
        report["exponent"] = exponent(loop)
        try:
            lag = lagrange_report(loop, enumerate_subloops=full_subloops)
        except NotPowerAssociativeError:  # pragma: no cover - guarded above
            lag = None
        if lag is not None:
            report["lagrange"] = {
                "weak": lag.weak_lagrange,
                "monogenic": lag.monogenic_lagrange,
                "cauchy": {
                    "holds": lag.cauchy,
                    "violations": list(lag.cauchy_violations),
                },
            }
    return report


def _fmt_value(value) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(str(v) for v in value) + "]"
    return str(value)


def _flatten(report: dict, prefix: str = ""):
    for key, value in report.items():
        path = f"{prefix}{key}"
        if isinstance(value, dict) and key != "cauchy":
            yield from _flatten(value, f"{path}.")
        else:
            yield path, value


def render_analysis_text(report: dict) -> str:
    lines = []
    for path, value in _flatten(report):
        if path == "lagrange.cauchy":
            if value is None:
                lines.append("lagrange.cauchy=none")
            elif value["holds"]:
                lines.append("lagrange.cauchy=true")
            else:
                worst = ",".join(f"p={p}" for p in value["violations"])
                lines.append(f"lagrange.cauchy=false({worst})")
        else:
            lines.append(f"{path}={_fmt_value(value)}")
    return "\n".join(lines) + "\n"


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=False) + "\n"


def render_classify_text(report: dict) -> str:
    flags = " ".join(
        f"{name}={'yes' if holds else 'no'}" for name, holds in report["identity_flags"].items()
    )
    props = " ".join(
        f"{name}={'yes' if holds else 'no'}" for name, holds in report["properties"].items()
    )
    return flags + "\n" + props + "\n"
