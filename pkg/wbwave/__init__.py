"""
wbwave: well-balanced moving-frame solver for reaction-diffusion fronts
"""
__version__ = "1.0.0"
