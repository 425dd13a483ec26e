"""
Numerical core of the vectorial D2Q4 lattice Boltzmann scheme
"""
