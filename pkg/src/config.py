# src/config.py
from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from pathlib import Path

import yaml

log = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent.parent / "config" / "equising.yaml"

DEFAULT_MAX_DEGREE = 4096
DEFAULT_COEFF_BOUND = 5
DEFAULT_EXTRA_TERMS = 2
DEFAULT_XDEG_BOUND = 8
DEFAULT_SYLVESTER_MAX_DEGREE = 6

# failure tags reported by numsg.validate
FAILURE_LABELS = {
    "empty": "no generators given",
    "non-positive": "generators must be positive integers",
    "not-increasing": "generators must be strictly increasing",
    "gcd-not-one": "gcd of the generators is not 1",
    "star-violated": "growth condition r_(k+1)*d_(k+1) > r_k*d_k fails",
    "not-minimal": "generator lies in the semigroup of its predecessors",
}

def env_int(name: str, default: int) -> int:
    raw = (os.getenv(name) or "").strip()
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        log.warning("Ignoring malformed %s=%r, using %d", name, raw, default)
        return default


@dataclass(frozen=True)
class Settings:
    max_degree: int = DEFAULT_MAX_DEGREE
    coeff_bound: int = DEFAULT_COEFF_BOUND
    extra_terms: int = DEFAULT_EXTRA_TERMS
    xdeg_bound: int = DEFAULT_XDEG_BOUND
    sylvester_max_degree: int = DEFAULT_SYLVESTER_MAX_DEGREE


def _section_int(cfg: dict, section: str, key: str, default: int) -> int:
    block = cfg.get(section) or {}
    if not isinstance(block, dict):
        return default
    value = block.get(key, default)
    try:
        return int(value)
    except (TypeError, ValueError):
        log.warning("Invalid %s.%s in config: %r", section, key, value)
        return default


def load_settings(path: Path | None = None) -> Settings:
    if path is None:
        custom = (os.getenv("EQUISING_CONFIG") or "").strip()
        path = Path(custom) if custom else DEFAULT_CONFIG_PATH

    cfg: dict = {}
    if path.exists():
        try:
            loaded = yaml.safe_load(path.read_text(encoding="utf-8"))
            if isinstance(loaded, dict):
                cfg = loaded
        except yaml.YAMLError as exc:
            log.warning("Config %s unreadable, using defaults: %r", path, exc)
    else:
        log.debug("No config at %s, using defaults", path)

    max_degree = _section_int(cfg, "limits", "max_degree", DEFAULT_MAX_DEGREE)
    return Settings(
        max_degree=env_int("EQUISING_MAX_DEGREE", max_degree),
        coeff_bound=_section_int(cfg, "sampling", "coeff_bound", DEFAULT_COEFF_BOUND),
        extra_terms=_section_int(cfg, "sampling", "extra_terms", DEFAULT_EXTRA_TERMS),
        xdeg_bound=_section_int(cfg, "generic", "xdeg_bound", DEFAULT_XDEG_BOUND),
        sylvester_max_degree=_section_int(cfg, "oracle", "sylvester_max_degree", DEFAULT_SYLVESTER_MAX_DEGREE),
    )
