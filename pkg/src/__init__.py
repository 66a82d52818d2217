"""
Koszul duals and self-duality classification for quadratic operads
"""
__version__ = "0.1.0"
