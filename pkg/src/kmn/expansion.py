"""Finite integer combinations of basis elements indexed by k-bounded partitions."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .shapes import Partition, as_partition


@dataclass
class Expansion:
    """``terms`` maps a partition to its (nonzero) integer coefficient.

    ``variant`` is ``"K"`` for K-k-Schur products, ``"S"`` for k-Schur
    products, or a free-form label for generic and Pieri expansions.
    """

    k: int
    r: int
    variant: str
    base: Partition
    terms: dict[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        self.base = as_partition(self.base)
        self.terms = {as_partition(mu): c for mu, c in self.terms.items() if c}

    def add(self, mu, coeff: int) -> None:
        mu = as_partition(mu)
        total = self.terms.get(mu, 0) + coeff
        if total:
            self.terms[mu] = total
        else:
            self.terms.pop(mu, None)

    def __getitem__(self, mu) -> int:
        return self.terms.get(as_partition(mu), 0)

    def __len__(self) -> int:
        return len(self.terms)

    def same_terms(self, other: "Expansion") -> bool:
        return self.terms == other.terms

    def sorted_terms(self) -> list[tuple[Partition, int]]:
        return sorted(self.terms.items(), key=lambda t: tuple(t[0]), reverse=True)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "r": self.r,
            "variant": self.variant,
            "lambda": list(self.base),
            "terms": [{"mu": list(mu), "coeff": c} for mu, c in self.sorted_terms()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "Expansion":
        return cls(
            k=data["k"],
            r=data["r"],
            variant=data["variant"],
            base=Partition(data["lambda"]),
            terms={Partition(t["mu"]): t["coeff"] for t in data["terms"]},
        )

    @classmethod
    def from_json(cls, text: str) -> "Expansion":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        rows = [(str(mu) or "()", str(c)) for mu, c in self.sorted_terms()]
        width = max([len("mu")] + [len(m) for m, _ in rows])
        lines = [
            f"p_{self.r} * [{self.variant}] lambda=({self.base}) k={self.k}",
            f"{'mu':<{width}}  coeff",
        ]
        lines += [f"{m:<{width}}  {c:>5}" for m, c in rows]
        return "\n".join(lines)
