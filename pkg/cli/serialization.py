import dataclasses
import json

from criteria.models import ModuliSentinel


def _plain(value):
    """JSON-friendly copy of the values that end up in mismatch records."""
    if isinstance(value, (set, frozenset)):
        return sorted(_plain(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if dataclasses.is_dataclass(value):
        return _plain(dataclasses.asdict(value))
    if isinstance(value, ModuliSentinel):
        return value.value
    return value


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    if isinstance(value, (list, tuple)):
        return ",".join(_cell(v) for v in value)
    if isinstance(value, dict):
        return ",".join(f"{k}={_cell(v)}" for k, v in value.items())
    return str(value)


def _truncate(values, limit: int) -> tuple[list, bool]:
    values = list(values)
    return values[:limit], len(values) > limit


def render_json(payload: dict) -> str:
    return json.dumps(_plain(payload), separators=(",", ":"))


def render_tsv(header, rows, truncated: bool = False) -> str:
    lines = ["\t".join(header)]
    lines.extend("\t".join(_cell(v) for v in row) for row in rows)
    if truncated:
        lines.append("# truncated")
    return "\n".join(lines)


def serialize_info(semigroup, apery, med: bool, alternating_sum: int) -> dict:
    return {
        "generators": list(semigroup.minimal_generators),
        "multiplicity": semigroup.multiplicity,
        "embedding_dimension": semigroup.embedding_dimension,
        "med": med,
        "genus": semigroup.genus,
        "frobenius": semigroup.frobenius,
        "apery": list(apery.elements),
        "alternating_gap_sum": alternating_sum,
    }


def info_tsv(payload: dict) -> str:
    return render_tsv(list(payload), [list(payload.values())])


def serialize_listing(key: str, values, limit: int, **extra) -> dict:
    shown, truncated = _truncate(values, limit)
    payload = {**extra, key: shown}
    if truncated:
        payload["truncated"] = True
        payload["total"] = len(values)
    return payload


def apery_tsv(apery, limit: int) -> str:
    shown, truncated = _truncate(enumerate(apery.elements), limit)
    return render_tsv(["residue", "element"], shown, truncated)


def gaps_tsv(gaps, limit: int) -> str:
    shown, truncated = _truncate(gaps, limit)
    return render_tsv(["gap"], [[g] for g in shown], truncated)


def serialize_ed(report, generators) -> dict:
    payload = {
        "m": report.modulus,
        "evenly_distributed": report.verdict,
        "route": report.route.value,
        "generators": list(generators),
        "witness": list(report.witness) if report.witness else None,
    }
    if report.base is not None:
        payload["base"] = report.base
    if report.cases:
        payload["cases"] = list(report.cases)
    return payload


def ed_tsv(payload: dict) -> str:
    header = ["m", "evenly_distributed", "route", "witness"]
    return render_tsv(header, [[payload[key] for key in header]])


def serialize_moduli(result) -> dict:
    if isinstance(result, ModuliSentinel):
        return {"all_m": True}
    return {"all_m": False, "moduli": sorted(result)}


def moduli_tsv(payload: dict) -> str:
    if payload["all_m"]:
        return render_tsv(["all_m"], [[True]])
    return render_tsv(["m"], [[m] for m in payload["moduli"]])


def serialize_classification(classification, condition) -> dict:
    return {
        "family": classification.family.value,
        "parameters": classification.parameters,
        "condition": condition,
    }


def classification_tsv(payload: dict) -> str:
    header = ["family", "parameters", "condition"]
    return render_tsv(header, [[payload[key] for key in header]])


def serialize_sweep(report, timing: bool = False) -> dict:
    payload = {
        "sweep_name": report.sweep_name,
        "instances_checked": report.instances_checked,
        "mismatch_count": len(report.mismatches),
        "passed": report.passed,
        "mismatches": [
            {
                "check": mismatch.check,
                "parameters": mismatch.parameter_dict(),
                "expected": mismatch.expected,
                "got": mismatch.got,
            }
            for mismatch in report.mismatches
        ],
    }
    if timing:
        payload["elapsed_ms"] = round(report.elapsed_ms, 3)
    return payload


def sweep_tsv(payload: dict) -> str:
    header = ["sweep_name", "instances_checked", "mismatch_count"]
    if "elapsed_ms" in payload:
        header.append("elapsed_ms")
    return render_tsv(header, [[payload[key] for key in header]])
