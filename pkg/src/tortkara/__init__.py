"""Exact computer algebra for tortkara triple systems inside the free
Zinbiel operad: normal forms, skew-ternary bases, expansion matrices,
integer/rational/prime-field linear algebra, lattice reduction, and
symmetric-group multiplicity tables."""

__version__ = "1.0.0"
