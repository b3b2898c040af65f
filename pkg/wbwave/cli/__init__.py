"""CLI package"""
from .main import WBWaveCLI, main

__all__ = ['WBWaveCLI', 'main']
