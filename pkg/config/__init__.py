"""Config package initialization"""
from .settings import OUTPUT_FORMATS, settings

__all__ = ['OUTPUT_FORMATS', 'settings']
