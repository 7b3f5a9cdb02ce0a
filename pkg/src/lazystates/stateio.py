"""JSON state files.

A state file holds exactly one of two keys:

    {"matrix": [[[re, im], ...4 entries...], ...4 rows...]}
    {"fano": {"x": [3 reals], "y": [3 reals], "T": [[3x3 reals]]}}

The matrix form is entry-by-entry [re, im] pairs so fixtures stay hand
auditable.  Structural problems raise StateFileError (a parse failure);
whether the parsed state is physical is the caller's concern.
"""

from __future__ import annotations

import json
from numbers import Real

import numpy as np

from .fano import FanoParams, compose


class StateFileError(ValueError):
    """The file does not follow the state-file schema."""


def _real_array(node, shape, what):
    arr = np.asarray(node, dtype=object)
    if arr.shape != shape:
        raise StateFileError(f"{what} must have shape {shape}, got {arr.shape}")
    flat = arr.reshape(-1)
    if not all(isinstance(v, Real) and not isinstance(v, bool) for v in flat):
        raise StateFileError(f"{what} must contain only real numbers")
    return np.asarray(node, dtype=float)


def state_from_dict(doc) -> np.ndarray:
    if not isinstance(doc, dict):
        raise StateFileError("state file must be a JSON object")
    keys = set(doc)
    if keys == {"matrix"}:
        pairs = _real_array(doc["matrix"], (4, 4, 2), '"matrix"')
        return pairs[:, :, 0] + 1j * pairs[:, :, 1]
    if keys == {"fano"}:
        fano = doc["fano"]
        if not isinstance(fano, dict) or set(fano) != {"x", "y", "T"}:
            raise StateFileError('"fano" must be an object with keys x, y, T')
        return compose(
            FanoParams(
                x=_real_array(fano["x"], (3,), '"x"'),
                y=_real_array(fano["y"], (3,), '"y"'),
                t=_real_array(fano["T"], (3, 3), '"T"'),
            )
        )
    raise StateFileError('state file must contain exactly one of "matrix" or "fano"')


def load_state_file(path) -> np.ndarray:
    try:
        with open(path, "r", encoding="utf-8") as fp:
            doc = json.load(fp)
    except OSError as exc:
        raise StateFileError(f"cannot read state file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise StateFileError(f"invalid JSON in state file: {exc}") from exc
    return state_from_dict(doc)


def state_to_dict(rho) -> dict:
    rho = np.asarray(rho, dtype=complex)
    matrix = [
        [[float(rho[i, j].real), float(rho[i, j].imag)] for j in range(4)]
        for i in range(4)
    ]
    return {"matrix": matrix}


def save_state_file(path, rho) -> None:
    with open(path, "w", encoding="utf-8") as fp:
        json.dump(state_to_dict(rho), fp, sort_keys=True, indent=2)
        fp.write("\n")
