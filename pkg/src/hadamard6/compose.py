"""Order-12 block composition from two order-6 Hadamard matrices and a
free diagonal of five phases."""

from dataclasses import dataclass

import numpy as np

from .core import as_matrix, is_hadamard
from .errors import NotHadamard, UnknownFamily
from .families import family_h, fourier_f6

_BUILDERS = {
    "f6": lambda params: fourier_f6(*params),
    "f6t": lambda params: fourier_f6(*params).T,
    "h": lambda params: family_h(*params),
}


@dataclass
class ComposeSpec:
    family1: str
    params1: tuple
    family2: str
    params2: tuple
    deltas: tuple  # five phase angles for the block diagonal

    @classmethod
    def from_dict(cls, obj):
        h1, h2 = obj["h1"], obj["h2"]
        return cls(
            family1=str(h1["family"]),
            params1=tuple(float(x) for x in h1["params"]),
            family2=str(h2["family"]),
            params2=tuple(float(x) for x in h2["params"]),
            deltas=tuple(float(x) for x in obj["deltas"]),
        )

    def to_dict(self):
        return {
            "h1": {"family": self.family1, "params": list(self.params1)},
            "h2": {"family": self.family2, "params": list(self.params2)},
            "deltas": list(self.deltas),
        }


def _build(family, params):
    try:
        builder = _BUILDERS[family]
    except KeyError:
        raise UnknownFamily(f"family {family!r} not one of {sorted(_BUILDERS)}") from None
    return builder(params)


def block_compose(h1, h2, deltas):
    """[[H1, D H2], [H1, -D H2]] with D = diag(1, e^{i d1}, ..., e^{i d5})."""
    h1 = as_matrix(h1)
    h2 = as_matrix(h2)
    deltas = np.asarray(deltas, dtype=float)
    if deltas.shape != (h1.shape[0] - 1,):
        raise ValueError(f"need {h1.shape[0] - 1} deltas, got shape {deltas.shape}")
    d = np.exp(1j * np.concatenate([[0.0], deltas]))
    right = d[:, None] * h2
    return np.block([[h1, right], [h1, -right]])


def compose12(spec):
    """Build the order-12 Hadamard matrix described by a ComposeSpec."""
    h1 = _build(spec.family1, spec.params1)
    h2 = _build(spec.family2, spec.params2)
    for name, h in (("h1", h1), ("h2", h2)):
        if not is_hadamard(h, 1e-10):
            raise NotHadamard(f"{name} is not Hadamard within 1e-10")
    if len(spec.deltas) != 5:
        raise ValueError(f"need 5 deltas, got {len(spec.deltas)}")
    return block_compose(h1, h2, spec.deltas)
