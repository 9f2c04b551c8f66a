"""
Pydantic models for input files and run reports
"""
from typing import Annotated, Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field


class _InputModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


# Group description files
class CyclicGroupFile(_InputModel):
    kind: Literal["cyclic"]
    n: int = Field(..., ge=1)


class DihedralGroupFile(_InputModel):
    kind: Literal["dihedral"]
    n: int = Field(..., ge=3, description="Order of the rotation subgroup; the group has order 2n")


class SymmetricGroupFile(_InputModel):
    kind: Literal["symmetric"]
    n: int = Field(..., ge=1, le=6)


class TableGroupFile(_InputModel):
    kind: Literal["table"]
    order: int = Field(..., ge=1)
    table: List[List[int]]
    names: Optional[List[str]] = None


class PermutationGroupFile(_InputModel):
    kind: Literal["permutation"]
    degree: int = Field(..., ge=1, le=16)
    generators: List[List[int]]


class ProductGroupFile(_InputModel):
    kind: Literal["product"]
    left: Union[str, "GroupFile"] = Field(..., description="Path relative to this file, or an inline description")
    right: Union[str, "GroupFile"]


class SemidirectGroupFile(_InputModel):
    kind: Literal["semidirect"]
    base: Union[str, "GroupFile"]
    automorphism: Union[str, "AutomorphismFile"]
    m: int = Field(..., ge=1)


GroupFile = Annotated[
    Union[
        CyclicGroupFile,
        DihedralGroupFile,
        SymmetricGroupFile,
        TableGroupFile,
        PermutationGroupFile,
        ProductGroupFile,
        SemidirectGroupFile,
    ],
    Field(discriminator="kind"),
]


# Automorphism description files
class IdentityAutomorphismFile(_InputModel):
    kind: Literal["identity"]


class InnerAutomorphismFile(_InputModel):
    kind: Literal["inner"]
    element: int = Field(..., ge=0)


class GeneratorImagesFile(_InputModel):
    kind: Literal["images"]
    generators: List[int]
    images: List[int]


class FullMapFile(_InputModel):
    kind: Literal["map"]
    images: List[int]


AutomorphismFile = Annotated[
    Union[IdentityAutomorphismFile, InnerAutomorphismFile, GeneratorImagesFile, FullMapFile],
    Field(discriminator="kind"),
]


# Lattice inputs
class MatrixFile(_InputModel):
    kind: Literal["matrix"]
    matrix: List[List[int]]


class HomologyFile(_InputModel):
    kind: Literal["homology"]
    maps: List[Optional[List[List[int]]]] = Field(..., description="maps[k] acts on H_k; null for a zero group")


ProductGroupFile.model_rebuild()
SemidirectGroupFile.model_rebuild()


# Reports
class RunReport(BaseModel):
    command: str
    version: str
    inputs: Dict[str, Any]
    results: Any
    verdicts: Dict[str, str] = {}
    prime: Optional[int] = None
    seed: Optional[int] = None
