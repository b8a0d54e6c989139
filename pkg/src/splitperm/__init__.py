"""Universal 321-avoiding permutations and universal split permutation graphs.

Constructs the explicit universal objects for these classes and verifies
every constructive claim with independent brute-force oracles at desk scale,
including checked embeddings of arbitrary split permutation graphs into the
universal host graph.
"""

__version__ = "0.1.0"
