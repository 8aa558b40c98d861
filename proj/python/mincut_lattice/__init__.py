"""Min-cuts under lattice-linear constraints.

Thin wrapper over the C++ core: max-flow, the least constrained min-cut,
join-irreducible min-cuts, exactly-once enumeration, and slice search.
"""

from ._core import ContractViolation, Network, StructuralError

__all__ = ["Network", "StructuralError", "ContractViolation"]
