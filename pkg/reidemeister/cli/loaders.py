"""
Turn JSON input files into groups, automorphisms and matrices.

Every failure surfaces as an InputError naming the file and, for syntax errors,
the line and column; schema errors name the offending field path.
"""

import json
from pathlib import Path
from typing import Any, List, Optional, Union

from pydantic import BaseModel, TypeAdapter, ValidationError

from reidemeister.cli import schemas
from reidemeister.groups.automorphisms import (
    Automorphism,
    automorphism_from_images,
    identity_automorphism,
    inner_automorphism,
)
from reidemeister.groups.finite_group import (
    FiniteGroup,
    cyclic,
    dihedral,
    direct_product,
    from_permutations,
    from_table,
    symmetric,
)
from reidemeister.groups.twisted import semidirect_with_cyclic
from reidemeister.lattice.matrices import IntMatrix
from reidemeister.shared.errors import InputError

_group_adapter = TypeAdapter(schemas.GroupFile)
_automorphism_adapter = TypeAdapter(schemas.AutomorphismFile)


def read_json(path: Union[str, Path]) -> Any:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: cannot read file ({exc.strerror})") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from exc


def _validate(adapter_or_model, data: Any, source: str):
    try:
        if isinstance(adapter_or_model, TypeAdapter):
            return adapter_or_model.validate_python(data)
        return adapter_or_model.model_validate(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or "<root>"
        raise InputError(f"{source}: field '{location}': {first['msg']}") from exc


# ----------------------------------------------------------------------------
# Groups
# ----------------------------------------------------------------------------

def build_group_from_model(model: BaseModel, base_dir: Path, source: str = "<inline>") -> FiniteGroup:
    if isinstance(model, schemas.CyclicGroupFile):
        return cyclic(model.n)
    if isinstance(model, schemas.DihedralGroupFile):
        return dihedral(model.n)
    if isinstance(model, schemas.SymmetricGroupFile):
        return symmetric(model.n)
    if isinstance(model, schemas.TableGroupFile):
        if len(model.table) != model.order:
            raise InputError(f"{source}: order is {model.order} but the table has {len(model.table)} rows")
        return from_table(model.table, names=model.names, label=Path(source).stem or "table")
    if isinstance(model, schemas.PermutationGroupFile):
        return from_permutations(model.degree, model.generators)
    if isinstance(model, schemas.ProductGroupFile):
        left = _group_ref(model.left, base_dir)
        right = _group_ref(model.right, base_dir)
        return direct_product(left, right)
    if isinstance(model, schemas.SemidirectGroupFile):
        base = _group_ref(model.base, base_dir)
        phi = _automorphism_ref(base, model.automorphism, base_dir)
        return semidirect_with_cyclic(base, phi, model.m)
    raise InputError(f"{source}: unsupported group kind")


def _group_ref(ref, base_dir: Path) -> FiniteGroup:
    if isinstance(ref, str):
        return load_group(base_dir / ref)
    return build_group_from_model(ref, base_dir)


def load_group(path: Union[str, Path]) -> FiniteGroup:
    path = Path(path)
    model = _validate(_group_adapter, read_json(path), str(path))
    try:
        return build_group_from_model(model, path.parent, str(path))
    except InputError as exc:
        if str(exc).startswith(str(path)):
            raise
        raise type(exc)(f"{path}: {exc}") from exc


# ----------------------------------------------------------------------------
# Automorphisms
# ----------------------------------------------------------------------------

def build_automorphism_from_model(G: FiniteGroup, model: BaseModel) -> Automorphism:
    if isinstance(model, schemas.IdentityAutomorphismFile):
        return identity_automorphism(G)
    if isinstance(model, schemas.InnerAutomorphismFile):
        return inner_automorphism(G, model.element)
    if isinstance(model, schemas.GeneratorImagesFile):
        return automorphism_from_images(G, model.generators, model.images)
    if isinstance(model, schemas.FullMapFile):
        return Automorphism(G, model.images, label="map")
    raise InputError("unsupported automorphism kind")


def _automorphism_ref(G: FiniteGroup, ref, base_dir: Path) -> Automorphism:
    if isinstance(ref, str):
        return load_automorphism(G, base_dir / ref)
    return build_automorphism_from_model(G, ref)


def load_automorphism(G: FiniteGroup, path: Union[str, Path]) -> Automorphism:
    path = Path(path)
    model = _validate(_automorphism_adapter, read_json(path), str(path))
    try:
        phi = build_automorphism_from_model(G, model)
    except InputError as exc:
        raise type(exc)(f"{path}: {exc}") from exc
    return Automorphism(G, phi.images, label=path.stem)


# ----------------------------------------------------------------------------
# Matrices
# ----------------------------------------------------------------------------

def load_matrix(path: Union[str, Path]) -> IntMatrix:
    path = Path(path)
    model = _validate(schemas.MatrixFile, read_json(path), str(path))
    try:
        return IntMatrix.from_rows(model.matrix)
    except InputError as exc:
        raise type(exc)(f"{path}: {exc}") from exc


def load_homology(path: Union[str, Path]) -> List[Optional[IntMatrix]]:
    path = Path(path)
    model = _validate(schemas.HomologyFile, read_json(path), str(path))
    try:
        return [None if m is None else IntMatrix.from_rows(m) for m in model.maps]
    except InputError as exc:
        raise type(exc)(f"{path}: {exc}") from exc


def parse_vector(text: str) -> List[int]:
    """'1,-2,3' -> [1, -2, 3]"""
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise InputError(f"cannot parse integer vector {text!r}") from exc
