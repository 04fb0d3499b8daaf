"""JSON manifests: presentation, generator images and expected values."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Optional

from .entry import format_quaternion, parse_entry
from .errors import ManifestError, ParseError
from .exactla import QuatMatrix
from .lie import FLAVORS, HermitianForm, Representation, derive_invariant_form
from .words import Presentation

FIXTURES = ("gamma8_rho0.json", "gammaW_rhoW.json", "z3z3_rhoW.json")


def fixture_path(name: str) -> Path:
    if not name.endswith(".json"):
        name += ".json"
    return Path(str(resources.files("foxcoh") / "fixtures" / name))


def _matrix(value, where):
    if not (isinstance(value, list) and len(value) == 3
            and all(isinstance(r, list) and len(r) == 3 for r in value)):
        raise ManifestError(f"{where}: expected a 3x3 array of entry strings")
    rows = []
    for i, row in enumerate(value):
        out = []
        for j, text in enumerate(row):
            if not isinstance(text, str):
                raise ManifestError(f"{where}[{i}][{j}]: entries must be strings")
            try:
                out.append(parse_entry(text))
            except ParseError as exc:
                exc.args = (f"{where}[{i}][{j}]: {exc}",)
                raise
        rows.append(out)
    return QuatMatrix(rows)


def format_matrix(M: QuatMatrix) -> list:
    return [[format_quaternion(q) for q in row] for row in M.tolist()]


class Manifest:
    """A parsed manifest. Everything is parsed eagerly on construction."""

    def __init__(self, data: dict, source: str = "<memory>"):
        if not isinstance(data, dict):
            raise ManifestError("manifest must be a JSON object")
        self.data = data
        self.source = source
        self.name = data.get("name", Path(source).stem)
        generators = data.get("generators")
        if not isinstance(generators, list) or not generators:
            raise ManifestError("'generators' must be a non-empty list")
        relators = data.get("relators", [])
        if not isinstance(relators, list) or not all(isinstance(r, str) for r in relators):
            raise ManifestError("'relators' must be a list of word strings")
        self.presentation = Presentation.parse(generators, relators, self.name)

        images = data.get("images")
        if not isinstance(images, dict):
            raise ManifestError("'images' must map generators to 3x3 matrices")
        unknown = sorted(set(images) - set(generators))
        if unknown:
            raise ManifestError(f"images given for undeclared generator(s) {unknown}")
        missing = [g for g in generators if g not in images]
        if missing:
            raise ManifestError(f"no image for generator(s) {missing}")
        self.images = {g: _matrix(images[g], f"images.{g}") for g in generators}

        self.explicit_form: Optional[QuatMatrix] = None
        if data.get("form") is not None:
            self.explicit_form = _matrix(data["form"], "form")

        flavors = data.get("flavors", list(FLAVORS))
        bad = [f for f in flavors if f not in FLAVORS]
        if bad:
            raise ManifestError(f"unknown flavor(s) {bad}")
        self.flavors = list(flavors)

        self.quotient: Optional[Presentation] = None
        q = data.get("quotient")
        if q is not None:
            if not isinstance(q, dict) or not isinstance(q.get("relators"), list):
                raise ManifestError("'quotient' must be an object with a 'relators' list")
            self.quotient = Presentation.parse(generators, q["relators"], q.get("name", "quotient"))

        self.expected = data.get("expected", {})
        if not isinstance(self.expected, dict):
            raise ManifestError("'expected' must be an object")
        self.zariski_dense = bool(data.get("zariski_dense", False))
        self._form: Optional[HermitianForm] = None

    @classmethod
    def load(cls, path) -> Manifest:
        path = Path(path)
        bundled = path.name if path.suffix == ".json" else path.name + ".json"
        if not path.exists() and bundled in FIXTURES and len(path.parts) == 1:
            path = fixture_path(bundled)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise ManifestError(f"cannot read manifest {path}: {exc.strerror}") from exc
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ManifestError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
        return cls(data, str(path))

    @property
    def form_source(self) -> str:
        return "explicit" if self.explicit_form is not None else "derived"

    @property
    def form(self) -> HermitianForm:
        """The explicit form if given, otherwise the one derived from the images."""
        if self._form is None:
            if self.explicit_form is not None:
                self._form = HermitianForm(self.explicit_form)
            else:
                mats = list(self.images.values())
                if not all(g.is_complex() for g in mats):
                    raise ManifestError(
                        "images have quaternionic entries; give the form explicitly"
                    )
                self._form = derive_invariant_form(mats)
        return self._form

    def representation(self) -> Representation:
        return Representation(
            self.presentation.generators, self.images, self.form, self.zariski_dense
        )


def load_manifest(path) -> Manifest:
    return Manifest.load(path)

