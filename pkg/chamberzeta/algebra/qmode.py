from dataclasses import dataclass
from typing import Optional

from .qpoly import QPoly

SYMBOLIC_LABEL = 'sym'


@dataclass(frozen=True)
class QMode:
    """Either symbolic q or q specialised to an integer."""
    value: Optional[int] = None

    @classmethod
    def symbolic(cls) -> 'QMode':
        return cls(None)

    @classmethod
    def numeric(cls, value: int) -> 'QMode':
        return cls(int(value))

    @classmethod
    def parse(cls, text: str) -> 'QMode':
        text = text.strip().lower()
        if text == SYMBOLIC_LABEL:
            return cls.symbolic()
        return cls.numeric(int(text))

    @property
    def is_symbolic(self) -> bool:
        return self.value is None

    @property
    def label(self) -> str:
        return SYMBOLIC_LABEL if self.value is None else str(self.value)

    def q(self) -> QPoly:
        return QPoly.q() if self.value is None else QPoly.constant(self.value)

    def specialize(self, p: QPoly) -> QPoly:
        if self.value is None or p.is_constant():
            return p
        return QPoly.constant(p.evaluate(self.value))

    def __str__(self):
        return f"q={self.label}"


SYMBOLIC = QMode.symbolic()
