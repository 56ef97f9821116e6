"""Config loading for cat2chain."""

from __future__ import annotations

from pathlib import Path

try:
    import tomllib  # Python 3.11+
except ModuleNotFoundError:  # pragma: no cover - fallback for 3.10
    import tomli as tomllib

DEFAULT_CONFIG: dict[str, dict[str, object]] = {
    "nerve": {
        "max_dim": 3,
        "list_simplices": False,
    },
    "homology": {
        "max_dim": 5,
        "normalized": False,
    },
    "coskeletal": {
        "max_dim": 3,
    },
    "eckmann_hilton": {
        "exhaustive_size": 2,
        "samples": 1000,
        "progress": True,
    },
    "random": {
        "seed": 0,
        "graphs": 20,
    },
    "output": {
        "data_dir": "results/{dataset}/data",
    },
}


def load_config(path: str | Path | None = None) -> dict[str, dict[str, object]]:
    """Load TOML config, merging each section over the defaults."""
    if path is None:
        merged = {section: dict(values) for section, values in DEFAULT_CONFIG.items()}
        _validate_config(merged)
        return merged
    cfg_path = Path(path)
    data = tomllib.loads(cfg_path.read_text(encoding="utf-8"))
    unknown = sorted(set(data) - set(DEFAULT_CONFIG))
    if unknown:
        raise ValueError(f"unknown config section(s): {', '.join(unknown)}")
    merged = {}
    for section, defaults in DEFAULT_CONFIG.items():
        raw = data.get(section, {})
        if not isinstance(raw, dict):
            raise ValueError(f"{section} must be a TOML table")
        merged[section] = {**defaults, **raw}
    _validate_config(merged)
    return merged


def _positive_int(value: object) -> bool:
    return isinstance(value, int) and not isinstance(value, bool) and value > 0


def _validate_config(cfg: dict[str, dict[str, object]]) -> None:
    nerve = cfg["nerve"]
    if not isinstance(nerve["max_dim"], int) or isinstance(nerve["max_dim"], bool) or nerve["max_dim"] < 0:
        raise ValueError("nerve.max_dim must be a non-negative integer")
    if not isinstance(nerve["list_simplices"], bool):
        raise ValueError("nerve.list_simplices must be a boolean")

    homology = cfg["homology"]
    if not _positive_int(homology["max_dim"]) or homology["max_dim"] < 2:
        raise ValueError("homology.max_dim must be an integer >= 2")
    if not isinstance(homology["normalized"], bool):
        raise ValueError("homology.normalized must be a boolean")

    if cfg["coskeletal"]["max_dim"] not in (3, 4):
        raise ValueError("coskeletal.max_dim must be 3 or 4")

    eh = cfg["eckmann_hilton"]
    if eh["exhaustive_size"] not in (1, 2, 3):
        raise ValueError("eckmann_hilton.exhaustive_size must be 1, 2 or 3")
    if not _positive_int(eh["samples"]):
        raise ValueError("eckmann_hilton.samples must be a positive integer")
    if not isinstance(eh["progress"], bool):
        raise ValueError("eckmann_hilton.progress must be a boolean")

    rnd = cfg["random"]
    if not isinstance(rnd["seed"], int) or isinstance(rnd["seed"], bool) or rnd["seed"] < 0:
        raise ValueError("random.seed must be a non-negative integer")
    if not _positive_int(rnd["graphs"]):
        raise ValueError("random.graphs must be a positive integer")

    data_dir = cfg["output"]["data_dir"]
    if not isinstance(data_dir, str) or not data_dir:
        raise ValueError("output.data_dir must be a non-empty string")
