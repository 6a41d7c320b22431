"""Numerical semigroups with fixed multiplicity.

Kunz coordinates, special gaps, oversemigroups of the same multiplicity and
minimal decompositions into m-irreducible semigroups.
"""
