"""Exact calculator for tensor-category decompositions and Ext dimensions.

Submodules:

* diagrams: Young-diagram arithmetic (conjugation, boxes, hooks, dimensions)
* symfunc: Littlewood-Richardson coefficients and Schur-basis products
* plethysm: closed-form powers of squares and tensor products
* grothendieck: composition-factor decompositions of tensor words
* poset: the quadruple index order, chains and the defect
* ext: injective-resolution terms, kernel layers, Ext dimensions
* symalg: symmetric-group-algebra constructions
* ospcat: the orthogonal/symplectic variant
* oracle: independent brute-force verifiers
* cli: command-line front end
"""

__version__ = "0.1.0"
