"""exppell: exact tools around the functional Pell equation x^2 - (z^2 - 1) y^2 = 1
over rings of exponential polynomials, and a reduction compiler from
Diophantine systems over Z to positive-existential sentences in {0, 1, z, +, *, =}.
"""

__version__ = "0.1.0"
