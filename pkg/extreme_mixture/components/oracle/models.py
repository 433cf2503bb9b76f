"""Face enumeration record."""

from typing import Tuple

from ...rational import FrozenModel


class FaceSet(FrozenModel):
    """Faces of a hull, each the sorted ids of every point lying in it."""

    faces: Tuple[Tuple[int, ...], ...]

    def __contains__(self, face) -> bool:
        return tuple(sorted(face)) in self.faces

    def __len__(self) -> int:
        return len(self.faces)
